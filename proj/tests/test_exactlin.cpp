#include "halfder/exactlin.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace halfder;
using testing_helpers::Gen;
using testing_helpers::vec;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("4/8").str() == "1/2");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rref examples") {
  auto id = rref(Mat::identity(3));
  CHECK(id.reduced == Mat::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(Mat(2, 4));
  CHECK(z.reduced == Mat(2, 4));
  CHECK(z.pivots.empty());

  // hand elimination: R2 -= R1/2, then scale R1 by 1/2
  auto r = rref(Mat::from_rows({vec({2, 4}), vec({1, 2})}, 2));
  CHECK(r.reduced == Mat::from_rows({vec({1, 2}), vec({0, 0})}, 2));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat::identity(3)).dim() == 0);
  CHECK(kernel_basis(Mat(2, 3)).dim() == 3);

  const Mat m = Mat::from_rows({vec({1, 1, 0})}, 3);
  const auto k = kernel_basis(m);
  REQUIRE(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
  CHECK(k == Subspace::span_of(3, {vec({1, -1, 0}), vec({0, 0, 1})}));
}

TEST_CASE("membership examples") {
  const auto s = Subspace::span_of(2, {vec({1, 1}), vec({1, -1})});
  auto zero = member(s, vec({0, 0}));
  CHECK(zero.member);
  for (const auto& c : zero.coefficients) CHECK(c.is_zero());

  CHECK_FALSE(member(Subspace::span_of(2, {vec({1, 0})}), vec({0, 1})).member);

  // coefficients on the spanning set {(1,1),(1,-1)}: a + b = 3, a - b = 5 -> (4, -1)
  const Vector v = vec({3, 5});
  const Mat span = Mat::from_rows({vec({1, 1}), vec({1, -1})}, 2).transpose();
  auto coeffs = solve(span, v);
  REQUIRE(coeffs);
  CHECK(*coeffs == Vector{Rational(4), Rational(-1)});
  auto mm = member(s, v);
  REQUIRE(mm.member);
  Vector back = zero_vector(2);
  for (std::size_t k = 0; k < s.dim(); ++k) axpy(mm.coefficients[k], s.basis()[k], back);
  CHECK(back == v);
}

TEST_CASE("intersection examples") {
  const auto a = Subspace::span_of(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(Subspace::span_of(2, {vec({1, 0})}), Subspace::span_of(2, {vec({1, 1})})).dim() == 0);
  const auto b = Subspace::span_of(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  const auto ab = intersect(a, b);
  CHECK(ab == Subspace::span_of(3, {vec({0, 1, 0})}));
}

TEST_CASE("row reducer agrees with dense kernel") {
  Gen g(11);
  for (int t = 0; t < 20; ++t) {
    const std::size_t rows = 1 + g.index(5), cols = 1 + g.index(6);
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = (g.index(3) == 0) ? Rational(0) : g.any();
    RowReducer rr(cols);
    for (std::size_t r = 0; r < rows; ++r) rr.add_row(Vector(m.row(r).begin(), m.row(r).end()));
    CHECK(rr.rank() == rank(m));
    CHECK(rr.kernel() == kernel_basis(m));
  }
}

TEST_CASE("linear algebra properties on random matrices") {
  Gen g(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 1 + g.index(5), cols = 1 + g.index(5);
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = (g.index(2) == 0) ? Rational(0) : g.any();
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == cols);
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
    const auto once = rref(m).reduced;
    CHECK(rref(once).reduced == once);

    std::vector<Vector> va, vb;
    for (std::size_t i = 0; i < 1 + g.index(3); ++i) va.push_back(g.vector(cols));
    for (std::size_t i = 0; i < 1 + g.index(3); ++i) vb.push_back(g.vector(cols));
    const auto a = Subspace::span_of(cols, va), b = Subspace::span_of(cols, vb);
    const auto ab = intersect(a, b);
    CHECK(ab == intersect(b, a));
    CHECK(ab.dim() == a.dim() + b.dim() - sum(a, b).dim());
    for (const auto& v : ab.basis()) {
      CHECK(member(a, v).member);
      CHECK(member(b, v).member);
    }
    const Vector probe = g.vector(cols);
    auto mm = member(a, probe);
    if (mm.member) {
      Vector back = zero_vector(cols);
      for (std::size_t i = 0; i < a.dim(); ++i) axpy(mm.coefficients[i], a.basis()[i], back);
      CHECK(back == probe);
    }
  }
}
