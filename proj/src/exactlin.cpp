#include "halfder/exactlin.hpp"

#include <stdexcept>
#include <utility>

namespace halfder {

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
  return s;
}

void axpy(const Rational& a, std::span<const Rational> x, std::span<Rational> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_mul(a, x[i]);
}

// ---------------------------------------------------------------------------
// Mat

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_flat(std::span<const Rational> flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw std::invalid_argument("Mat::from_flat: size mismatch");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < flat.size(); ++i) m.data_[i] = flat[i];
  return m;
}

Vector Mat::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Mat::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat::apply: dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const { return halfder::is_zero(data_); }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat product: shape mismatch");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      axpy(aik, b.row(k), out.row(i));
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat sum: shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat difference: shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Mat operator*(const Rational& s, const Mat& m) {
  Mat out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(Mat m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    const Rational inv = Rational(1) / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(lead, k).is_zero()) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead, k).is_zero()) m(r, k).sub_mul(f, m(lead, k));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto [reduced, pivots] = rref(Mat::from_rows(vectors, ambient_dim));
  s.pivots_ = pivots;
  s.basis_.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto row = reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector e(ambient_dim);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return full(ambient_);
  return kernel_basis(basis_matrix());
}

Subspace kernel_basis(const Mat& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span_of(n, vecs);
}

Membership member(const Subspace& s, std::span<const Rational> v) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("member: ambient dimension mismatch");
  Membership out;
  out.coefficients.resize(s.dim());
  Vector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    out.coefficients[k] = v[s.pivots()[k]];
    axpy(-out.coefficients[k], s.basis()[k], residual);
  }
  out.member = is_zero(residual);
  if (!out.member) out.coefficients.clear();
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  std::vector<Vector> constraints = a.annihilator().basis();
  const Subspace bb = b.annihilator();
  const auto& more = bb.basis();
  constraints.insert(constraints.end(), more.begin(), more.end());
  if (constraints.empty()) return Subspace::full(a.ambient_dim());
  return kernel_basis(Mat::from_rows(constraints, a.ambient_dim()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<Vector> vecs = a.basis();
  vecs.insert(vecs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span_of(a.ambient_dim(), vecs);
}

std::optional<Vector> solve(const Mat& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto [reduced, pivots] = rref(std::move(aug));
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = reduced(i, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// RowReducer

bool RowReducer::add_row(Vector row) {
  if (row.size() != cols_) throw std::invalid_argument("RowReducer: row length mismatch");
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p].is_zero()) continue;
    const Rational f = row[p];
    const Vector& prow = rows_[k];
    for (std::size_t c = 0; c < cols_; ++c)
      if (!prow[c].is_zero()) row[c].sub_mul(f, prow[c]);
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead].is_zero()) ++lead;
  if (lead == cols_) return false;
  const Rational inv = Rational(1) / row[lead];
  for (auto& x : row)
    if (!x.is_zero()) x *= inv;
  for (auto& other : rows_) {
    if (other[lead].is_zero()) continue;
    const Rational f = other[lead];
    for (std::size_t c = 0; c < cols_; ++c)
      if (!row[c].is_zero()) other[c].sub_mul(f, row[c]);
  }
  pivot_row_[lead] = rows_.size();
  pivots_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

Subspace RowReducer::kernel() const {
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_[f] != npos) continue;
    Vector v(cols_);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots_.size(); ++k) v[pivots_[k]] = -rows_[k][f];
    vecs.push_back(std::move(v));
  }
  return Subspace::span_of(cols_, vecs);
}

}  // namespace halfder
