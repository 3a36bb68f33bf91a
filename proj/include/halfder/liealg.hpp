#pragma once

#include "halfder/exactlin.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace halfder {

/// [e_i, e_j] = sum_k terms[k] e_k, stored only for i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::map<std::size_t, Rational> terms;

  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Finite-dimensional Lie algebra given by structure constants on a named
/// basis. Immutable once constructed; antisymmetry is structural because only
/// pairs i < j are stored.
class LieAlgebra {
public:
  LieAlgebra() = default;
  /// Throws ValidationError on duplicate names, out-of-range indices, i >= j,
  /// or a repeated pair. Zero coefficients are dropped. Jacobi is not checked
  /// here; see check_jacobi.
  LieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<BracketEntry> brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<BracketEntry>& brackets() const { return brackets_; }

  /// Coordinates of [e_i, e_j] for any i, j.
  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;

  std::optional<std::size_t> index_of(const std::string& basis_name) const;
  Vector unit(std::size_t i) const;
  bool is_abelian() const { return brackets_.empty(); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.name_ == b.name_ && a.names_ == b.names_ && a.brackets_ == b.brackets_;
  }

private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<BracketEntry> brackets_;
  std::vector<Vector> table_;  // dense antisymmetric d*d table of d-vectors
};

/// Accumulates structure constants from brackets written in any order,
/// [e_a, e_b] with a > b included, and folds them onto i < j storage.
class StructureBuilder {
public:
  explicit StructureBuilder(std::vector<std::string> basis_names);

  std::size_t dim() const { return names_.size(); }
  /// [e_a, e_b] += coeff * e_k
  StructureBuilder& add(std::size_t a, std::size_t b, std::size_t k, const Rational& coeff);
  LieAlgebra build(std::string name) const;

private:
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> entries_;
};

struct JacobiViolation {
  std::array<std::size_t, 3> triple{};
  Vector residual;
};

/// Exhaustive check of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
/// over i < j < k. Returns the first violation in lexicographic order.
std::optional<JacobiViolation> check_jacobi(const LieAlgebra& a);

/// Subalgebra spanned by the given basis elements. Throws ValidationError if
/// the span is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& a, const std::vector<std::size_t>& indices);
/// Same algebra on a reordered basis: new basis element r is old perm[r].
LieAlgebra permuted(const LieAlgebra& a, const std::vector<std::size_t>& perm);

nlohmann::json to_json(const LieAlgebra& a);
/// Throws ParseError (with field context) on malformed documents and
/// ValidationError when the structure constants fail Jacobi.
LieAlgebra algebra_from_json(const nlohmann::json& doc);

std::string serialize(const LieAlgebra& a);
LieAlgebra deserialize(const std::string& text);
LieAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const LieAlgebra& a, const std::filesystem::path& path);

/// Human-readable element, e.g. "x + 2*e_3 - 1/2*e_5".
std::string format_element(const LieAlgebra& a, std::span<const Rational> v);

}  // namespace halfder
