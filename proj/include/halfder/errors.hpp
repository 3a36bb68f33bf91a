#pragma once

#include <stdexcept>
#include <string>

namespace halfder {

/// Malformed input file or text.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates an algebraic invariant (e.g. Jacobi).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Family parameters outside their admissible range.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace halfder
