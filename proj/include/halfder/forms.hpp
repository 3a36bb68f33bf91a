#pragma once

#include "halfder/catalog.hpp"
#include "halfder/dersolve.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace halfder {

/// Thrown for families that have no printed form of the requested kind.
class UnsupportedFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A known difference between a printed form and the literal display.
struct FormNote {
  std::string id;
  std::string message;
};

/// A linear parametric family of operators, one generator per free
/// parameter: the operator is sum_k p_k * generators[k].
struct ParametricForm {
  std::string algebra;
  std::vector<std::string> parameters;
  std::vector<Mat> generators;
  std::vector<FormNote> notes;

  /// Canonical span of the generators (delta = 1/2).
  OperatorSpace span() const;
  Mat instantiate(std::span<const Rational> values) const;
};

/// The published description of Der_{1/2} for the family.
ParametricForm expected_der_form(const FamilySpec& spec);

/// The published description of local 1/2-derivations for the family.
/// Throws UnsupportedFamily for the bare filiform nilradicals.
ParametricForm expected_locder_form(const FamilySpec& spec);

/// The literal tau_{2n,2} local display (three parameters), kept apart from
/// the table value for comparison.
ParametricForm tau2n2_printed_local_display(const FamilySpec& spec);

nlohmann::json to_json(const FormNote& note);
nlohmann::json to_json(const ParametricForm& form);

}  // namespace halfder
