#pragma once

#include "halfder/liealg.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace halfder {

/// Row-major flattening D(a,b) -> a*d + b. Column b of D holds D(e_b).
Vector flatten(const Mat& m);
Mat unflatten(std::span<const Rational> v, std::size_t d);

/// A linear space of d x d operators on an algebra, e.g. Der_delta(A).
///
/// The basis is canonical: the RREF of the flattened matrices, so two spaces
/// are equal iff their bases compare equal.
class OperatorSpace {
public:
  OperatorSpace() = default;
  OperatorSpace(std::string algebra_name, std::size_t d, Rational delta, const Subspace& flat_span);

  const std::string& algebra_name() const { return algebra_; }
  std::size_t ambient_dim() const { return d_; }
  std::size_t dim() const { return basis_.size(); }
  const Rational& delta() const { return delta_; }
  const std::vector<Mat>& basis() const { return basis_; }
  /// The span in flattened d*d coordinates.
  const Subspace& flat() const { return flat_; }

  /// Membership with coefficients on basis().
  Membership contains(const Mat& op) const { return member(flat_, flatten(op)); }
  Mat combine(std::span<const Rational> coefficients) const;

private:
  std::string algebra_;
  std::size_t d_ = 0;
  Rational delta_;
  Subspace flat_;
  std::vector<Mat> basis_;
};

/// Residual-free check of D[x,y] = delta([Dx,y] + [x,Dy]) on all basis pairs.
bool is_delta_derivation(const LieAlgebra& a, const Mat& op, const Rational& delta);

/// Der_delta(A) as the kernel of the d*d(d-1)/2 component equations in the
/// d^2 entries of D.
OperatorSpace derivation_space(const LieAlgebra& a, const Rational& delta);

/// True iff the space is exactly the scalar multiples of the identity.
bool is_trivial_space(const OperatorSpace& s);

struct CommutatorReport {
  Rational product_delta;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks that [B1, B2] = B1 B2 - B2 B1 is a (delta1*delta2)-derivation for
/// every pair of basis elements.
CommutatorReport commutator_degrades(const LieAlgebra& a, const OperatorSpace& s1, const OperatorSpace& s2);

nlohmann::json to_json(const OperatorSpace& s);
nlohmann::json matrix_to_json(const Mat& m);

}  // namespace halfder
