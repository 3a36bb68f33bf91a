#pragma once

#include "halfder/dersolve.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace halfder {

/// A family of sample points. Points are drawn from `span` when it is
/// nonempty (random nonzero combinations), otherwise from the coordinate
/// subspace with `forced_zero` coordinates set to 0 and every other
/// coordinate a random nonzero rational.
struct Stratum {
  std::string label;
  std::vector<std::size_t> forced_zero;
  std::vector<Vector> span;
};

struct SamplingPlan {
  std::vector<Stratum> strata;
  std::size_t trials_per_stratum = 8;
  std::uint64_t seed = 2024;
  std::size_t stabilization_window = 3;
};

/// Default plan over a d-dimensional algebra:
///  - the all-free pattern;
///  - every nonempty zero pattern on the first min(d, depth) coordinates;
///  - every single coordinate forced to zero;
///  - every support of size one or two (basis vectors and their pairs);
///  - the kernel of each Der basis element when it is a proper nonzero subspace.
SamplingPlan default_plan(const OperatorSpace& der, std::uint64_t seed = 2024, std::size_t trials = 8,
                          std::size_t window = 3, std::size_t depth = 3);

/// Throws std::invalid_argument if the plan breaks its invariants.
void validate_plan(const SamplingPlan& plan, std::size_t d);

/// Deterministic point generator: numerators in [-9,9]\{0}, denominators in [1,4].
class PointSampler {
public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  Rational nonzero();
  Vector draw(const Stratum& s, std::size_t d);
  /// Unconstrained random vector (every coordinate nonzero).
  Vector any(std::size_t d);

private:
  std::mt19937_64 rng_;
};

/// span{B x : B in basis(S)}
Subspace evaluation_space(const OperatorSpace& s, std::span<const Rational> x);

struct LocalMembership {
  bool member = false;
  Vector coefficients;  // on S.basis()
  Mat witness;          // D_x = sum coefficients * basis, agrees with Delta at x
};

LocalMembership local_membership(const OperatorSpace& s, const Mat& delta_op, std::span<const Rational> x);

struct StratumCheck {
  std::string label;
  bool passed = true;
};

struct LocalSpaceResult {
  OperatorSpace upper_space;
  std::size_t samples_used = 0;
  bool stabilized = false;
  /// Dimension after the closed-form basis-vector step, then after each batch.
  std::vector<std::size_t> dim_history;
  /// Per stratum: every Der basis element stayed inside the candidate space
  /// after each of that stratum's samples.
  std::vector<StratumCheck> per_stratum_certified;
};

/// Intersects {Delta : Delta x in S_x} over the plan's sample points.
/// Always an upper bound for the true space of local delta-derivations.
LocalSpaceResult sampled_locder_space(const LieAlgebra& a, const OperatorSpace& der, const SamplingPlan& plan);

struct LocalCertificate {
  bool pass = false;
  std::size_t checks = 0;
  std::optional<Vector> counterexample;
  std::string failing_stratum;
};

/// Checks local membership of Delta at every sampled point of every stratum.
/// A pass is probabilistic evidence; a failure is a proof (the returned x has
/// Delta x outside S_x).
LocalCertificate stratified_certify(const LieAlgebra& a, const OperatorSpace& der, const Mat& delta_op,
                                    const SamplingPlan& plan);

nlohmann::json to_json(const SamplingPlan& plan);

}  // namespace halfder
