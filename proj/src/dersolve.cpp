#include "halfder/dersolve.hpp"

#include <stdexcept>

namespace halfder {

Vector flatten(const Mat& m) { return Vector(m.flat().begin(), m.flat().end()); }

Mat unflatten(std::span<const Rational> v, std::size_t d) { return Mat::from_flat(v, d, d); }

OperatorSpace::OperatorSpace(std::string algebra_name, std::size_t d, Rational delta, const Subspace& flat_span)
    : algebra_(std::move(algebra_name)), d_(d), delta_(std::move(delta)), flat_(flat_span) {
  if (flat_.ambient_dim() != d * d) throw std::invalid_argument("OperatorSpace: span is not in d*d coordinates");
  for (const auto& v : flat_.basis()) basis_.push_back(unflatten(v, d));
}

Mat OperatorSpace::combine(std::span<const Rational> coefficients) const {
  if (coefficients.size() != dim()) throw std::invalid_argument("OperatorSpace::combine: coefficient count mismatch");
  Vector flat(d_ * d_);
  for (std::size_t k = 0; k < dim(); ++k) axpy(coefficients[k], flat_.basis()[k], flat);
  return unflatten(flat, d_);
}

bool is_delta_derivation(const LieAlgebra& a, const Mat& op, const Rational& delta) {
  const std::size_t d = a.dim();
  if (op.rows() != d || op.cols() != d) throw std::invalid_argument("is_delta_derivation: shape mismatch");
  for (std::size_t i = 0; i < d; ++i) {
    const Vector di = op.column(i);
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector dj = op.column(j);
      Vector lhs = op.apply(a.basis_bracket(i, j));
      Vector rhs = a.bracket(di, a.unit(j));
      axpy(1, a.bracket(a.unit(i), dj), rhs);
      axpy(-delta, rhs, lhs);
      if (!is_zero(lhs)) return false;
    }
  }
  return true;
}

OperatorSpace derivation_space(const LieAlgebra& a, const Rational& delta) {
  const std::size_t d = a.dim();
  RowReducer system(d * d);
  // Unknown D(r,s) lives at r*d + s. Component c of the identity on (e_i, e_j):
  //   sum_k c_ij^k D(c,k) - delta (sum_r D(r,i) c_rj^c + sum_r D(r,j) c_ir^c) = 0
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector& bij = a.basis_bracket(i, j);
      for (std::size_t c = 0; c < d; ++c) {
        Vector row(d * d);
        bool any = false;
        for (std::size_t k = 0; k < d; ++k)
          if (!bij[k].is_zero()) {
            row[c * d + k] += bij[k];
            any = true;
          }
        for (std::size_t r = 0; r < d; ++r) {
          const Rational& crj = a.basis_bracket(r, j)[c];
          if (!crj.is_zero()) {
            row[r * d + i].sub_mul(delta, crj);
            any = true;
          }
          const Rational& cir = a.basis_bracket(i, r)[c];
          if (!cir.is_zero()) {
            row[r * d + j].sub_mul(delta, cir);
            any = true;
          }
        }
        if (any) system.add_row(std::move(row));
      }
    }
  return OperatorSpace(a.name(), d, delta, system.kernel());
}

bool is_trivial_space(const OperatorSpace& s) {
  if (s.dim() != 1) return false;
  return s.contains(Mat::identity(s.ambient_dim())).member;
}

CommutatorReport commutator_degrades(const LieAlgebra& a, const OperatorSpace& s1, const OperatorSpace& s2) {
  CommutatorReport rep;
  rep.product_delta = s1.delta() * s2.delta();
  for (std::size_t p = 0; p < s1.dim(); ++p)
    for (std::size_t q = 0; q < s2.dim(); ++q) {
      const Mat& b1 = s1.basis()[p];
      const Mat& b2 = s2.basis()[q];
      const Mat comm = b1 * b2 - b2 * b1;
      ++rep.pairs_checked;
      if (!is_delta_derivation(a, comm, rep.product_delta)) rep.failures.emplace_back(p, q);
    }
  return rep;
}

nlohmann::json matrix_to_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : m.row(r)) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const OperatorSpace& s) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : s.basis()) basis.push_back(matrix_to_json(b));
  return {{"delta", s.delta().str()}, {"dim", s.dim()}, {"basis", basis}};
}

}  // namespace halfder
