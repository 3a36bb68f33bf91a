#pragma once

#include "halfder/catalog.hpp"
#include "halfder/dersolve.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace halfder {

struct Injectivity {
  bool injective = false;
  std::size_t stacked_rank = 0;
  /// Coefficient vectors (on S.basis()) of operators vanishing on the tuple.
  std::vector<Vector> kernel;
};

/// Rank of D -> (D q_1, ..., D q_t) restricted to S.
Injectivity evaluation_injective(const OperatorSpace& s, const std::vector<Vector>& tuple);

/// A named candidate tuple, e.g. "(x, e_1)".
struct TupleCandidate {
  std::string label;
  std::vector<Vector> tuple;
};

/// The separating elements from the known 2-local arguments. Empty for
/// families without such a proof.
std::vector<TupleCandidate> suggested_tuples(const FamilySpec& spec, const LieAlgebra& a);

struct SeparatingCertificate {
  std::vector<Vector> tuple;
  std::string label;
  std::size_t stacked_rank = 0;
  std::size_t der_dim = 0;
  bool suggested = false;
};

struct SearchOptions {
  std::size_t max_tuple_len = 2;
  std::uint64_t seed = 2024;
  std::size_t random_budget = 64;
  std::vector<TupleCandidate> suggestions;
};

/// Tries the suggestions, then single basis vectors, then basis pairs, then
/// random tuples (singles first). Returns the first injective tuple.
std::optional<SeparatingCertificate> find_separating_tuple(const OperatorSpace& s, const SearchOptions& options);

enum class TwoLocalStatus { Pass, Inconclusive };

struct TwoLocalReport {
  std::string algebra;
  TwoLocalStatus status = TwoLocalStatus::Inconclusive;
  std::optional<SeparatingCertificate> certificate;
  std::size_t der_dim = 0;
  std::size_t candidates_tried = 0;
};

/// PASS with a certificate when a separating tuple exists: any 2-local map
/// agrees with the 1/2-derivation fixed by its values on the tuple.
TwoLocalReport certify_two_local_rigidity(const LieAlgebra& a, const OperatorSpace& s, const SearchOptions& options);

/// The unique element of S with prescribed values on an injective tuple.
/// Returns nothing when the values are not attained.
std::optional<Mat> derivation_from_values(const OperatorSpace& s, const std::vector<Vector>& tuple,
                                          const std::vector<Vector>& values);

std::string to_string(TwoLocalStatus s);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json to_json(const SeparatingCertificate& c, const LieAlgebra& a);
nlohmann::json to_json(const TwoLocalReport& r, const LieAlgebra& a);

}  // namespace halfder
