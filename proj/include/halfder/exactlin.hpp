#pragma once

#include "halfder/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace halfder {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
/// y += a * x
void axpy(const Rational& a, std::span<const Rational> x, std::span<Rational> y);

/// Dense row-major matrix of exact rationals.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Reshapes a rows*cols vector in row-major order.
  static Mat from_flat(std::span<const Rational> flat, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  std::span<const Rational> flat() const { return data_; }

  Vector apply(std::span<const Rational> v) const;
  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rational& s, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape
/// matches the input.
RrefResult rref(Mat m);
std::size_t rank(const Mat& m);

/// A linear subspace of Q^n held in canonical form: its basis is the nonzero
/// part of the RREF of any spanning set, so two subspaces are equal iff their
/// bases are equal.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  /// Canonicalizes an arbitrary (possibly dependent) spanning set.
  static Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Mat basis_matrix() const { return Mat::from_rows(basis_, ambient_); }
  /// Orthogonal complement under the standard bilinear form.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0}.
Subspace kernel_basis(const Mat& m);

struct Membership {
  bool member = false;
  /// Coefficients on s.basis() when member is true.
  Vector coefficients;
};

Membership member(const Subspace& s, std::span<const Rational> v);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Mat& m, std::span<const Rational> b);

/// Incremental Gauss-Jordan elimination over a fixed number of columns.
///
/// Rows are kept fully reduced against every pivot, which keeps the kernel
/// readable straight off the stored rows. Intended for tall, sparse systems
/// where only the independent rows are worth storing.
class RowReducer {
public:
  explicit RowReducer(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  /// Returns true when the row was independent of those already added.
  bool add_row(Vector row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Subspace kernel() const;

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace halfder
