#include "halfder/dersolve.hpp"
#include "halfder/forms.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace halfder;
using namespace testing_helpers;

namespace {

const Rational kHalf(1, 2);

/// Checks D[u,v] = delta([Du,v] + [u,Dv]) on random vectors, not basis pairs.
bool delta_identity_on_samples(const LieAlgebra& a, const Mat& op, const Rational& delta, Gen& g, int samples) {
  for (int t = 0; t < samples; ++t) {
    const Vector u = g.vector(a.dim()), v = g.vector(a.dim());
    Vector lhs = op.apply(a.bracket(u, v));
    Vector rhs = a.bracket(op.apply(u), v);
    axpy(Rational(1), a.bracket(u, op.apply(v)), rhs);
    axpy(-delta, rhs, lhs);
    if (!is_zero(lhs)) return false;
  }
  return true;
}

Mat op_from(const LieAlgebra& a, std::initializer_list<std::tuple<const char*, const char*, Rational>> entries) {
  Mat m(a.dim(), a.dim());
  for (const auto& [src, dst, c] : entries) m(*a.index_of(dst), *a.index_of(src)) += c;
  return m;
}

std::vector<FamilySpec> sample_specs() {
  std::vector<FamilySpec> out;
  for (auto f : {Family::S1, Family::S2, Family::S3, Family::S4, Family::SN2, Family::Tau1, Family::Tau2,
                 Family::Tau3})
    for (int n : {4, 5, 6}) out.push_back(spec(f, n));
  out.push_back(s1(5, Rational(2)));
  out.push_back(s1(6, Rational(2)));
  for (int n : {2, 3}) {
    out.push_back(spec(Family::Tau2N2, n));
    out.push_back(spec(Family::HeisSolv, n));
    out.push_back(spec(Family::AbelianSolv, n));
    out.push_back(spec(Family::Oscillator, n));
  }
  for (int n : {1, 2, 3}) out.push_back(spec(Family::Schrodinger, n));
  for (int m : {2, 3, 4}) out.push_back(sl2(m));
  return out;
}

}  // namespace

TEST_CASE("Der_{1/2} dimension examples") {
  CHECK(derivation_space(build(spec(Family::SN2, 5)), kHalf).dim() == 2);
  CHECK(derivation_space(build(spec(Family::AbelianSolv, 3)), kHalf).dim() == 6);
  CHECK(derivation_space(build(sl2(3)), kHalf).dim() == 1);
  CHECK(derivation_space(build(spec(Family::Oscillator, 2)), kHalf).dim() == 6);
}

TEST_CASE("trivial spaces") {
  const auto s3 = derivation_space(build(spec(Family::Schrodinger, 3)), kHalf);
  CHECK(is_trivial_space(s3));
  CHECK(s3.dim() == 1);
  const auto s2 = derivation_space(build(spec(Family::Schrodinger, 2)), kHalf);
  CHECK_FALSE(is_trivial_space(s2));
  CHECK(s2.dim() == 2);
  const auto l2 = derivation_space(build(sl2(2)), kHalf);
  CHECK_FALSE(is_trivial_space(l2));
  CHECK(l2.dim() == 2);
  CHECK(is_trivial_space(derivation_space(build(sl2(3)), kHalf)));
}

TEST_CASE("identity lies in Der_{1/2}, every basis element satisfies the identity") {
  Gen g(7);
  for (const auto& s : sample_specs()) {
    const auto a = build(s);
    CAPTURE(a.name());
    const auto der = derivation_space(a, kHalf);
    CHECK(der.contains(Mat::identity(a.dim())).member);
    CHECK(is_delta_derivation(a, Mat::identity(a.dim()), kHalf));
    for (const auto& b : der.basis()) {
      CHECK(is_delta_derivation(a, b, kHalf));
      CHECK(delta_identity_on_samples(a, b, kHalf, g, 2));
    }
  }
}

TEST_CASE("a random operator is not a 1/2-derivation") {
  Gen g(99);
  const auto a = build(spec(Family::S2, 5));
  Mat m(a.dim(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = g.any();
  m(0, 0) = Rational(3);
  CHECK_FALSE(is_delta_derivation(a, m, kHalf));
  CHECK_FALSE(derivation_space(a, kHalf).contains(m).member);
}

TEST_CASE("an abelian algebra has every operator as a delta-derivation") {
  const auto a = build(spec(Family::AbelianSolv, 3));
  const auto nil = restrict_to(a, {0, 1, 2});
  for (const Rational delta : {Rational(1), kHalf, Rational(-3)}) CHECK(derivation_space(nil, delta).dim() == 9);
}

TEST_CASE("Der_1 of the Heisenberg algebra H_3") {
  // gl-type derivations of h_3: dim 6
  const auto a = build(spec(Family::HeisSolv, 1));
  const auto h = restrict_to(a, {0, 1, 2});
  CHECK(derivation_space(h, Rational(1)).dim() == 6);
  // D(e_1), D(e_2) free, D(e_3) = (a_11 + a_22)/2 e_3
  CHECK(derivation_space(h, kHalf).dim() == 6);
}

TEST_CASE("commutators of delta-derivations") {
  for (const auto& s : {spec(Family::SN2, 5), spec(Family::Oscillator, 2), spec(Family::AbelianSolv, 2),
                        s1(5, Rational(2))}) {
    const auto a = build(s);
    const auto d1 = derivation_space(a, Rational(1));
    const auto dh = derivation_space(a, kHalf);
    const auto r11 = commutator_degrades(a, d1, d1);
    CHECK(r11.product_delta == Rational(1));
    CHECK(r11.ok());
    const auto r1h = commutator_degrades(a, d1, dh);
    CHECK(r1h.product_delta == kHalf);
    CHECK(r1h.ok());
    const auto rhh = commutator_degrades(a, dh, dh);
    CHECK(rhh.product_delta == Rational(1, 4));
    CHECK(rhh.ok());
    CHECK(rhh.pairs_checked == dh.dim() * dh.dim());
  }
}

TEST_CASE("Der dimension is invariant under basis permutation") {
  Gen g(3);
  for (const auto& s : {spec(Family::Tau2, 4), spec(Family::HeisSolv, 2), sl2(3)}) {
    const auto a = build(s);
    std::vector<std::size_t> perm(a.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
    std::swap(perm[0], perm[g.index(perm.size())]);
    CHECK(derivation_space(permuted(a, perm), kHalf).dim() == derivation_space(a, kHalf).dim());
  }
}

TEST_CASE("printed Der forms instantiate to 1/2-derivations") {
  Gen g(2024);
  for (const auto& s : sample_specs()) {
    const auto form = expected_der_form(s);
    const auto a = build(s);
    CAPTURE(a.name());
    const auto der = derivation_space(a, kHalf);
    for (int t = 0; t < 3; ++t) {
      const Mat op = form.instantiate(g.vector(form.parameters.size()));
      CHECK(der.contains(op).member);
      CHECK(delta_identity_on_samples(a, op, kHalf, g, 2));
    }
  }
}

TEST_CASE("the literal tau sign is not a 1/2-derivation") {
  for (auto f : {Family::Tau1, Family::Tau2}) {
    for (int n : {3, 4}) {
      const auto a = build(spec(f, n));
      const auto e = [](int i) { return "e_" + std::to_string(i); };
      const std::string top = e(2 * n), below = e(2 * n - 1);
      Mat literal = op_from(a, {{"e_2", top.c_str(), Rational(1)}});
      literal(*a.index_of(below), 0) = Rational(2 * n - 3);
      CHECK_FALSE(is_delta_derivation(a, literal, kHalf));
      literal(*a.index_of(below), 0) = Rational(3 - 2 * n);
      CHECK(is_delta_derivation(a, literal, kHalf));
    }
  }
}

TEST_CASE("extra 1/2-derivations of s^1_{4,2}") {
  const auto a = build(s1(4, Rational(2)));
  const auto der = derivation_space(a, kHalf);
  CHECK(der.dim() == 7);
  Gen g(4);
  // on (e_2, x): D(2 e_2) = 2 e_3 and ([e_3, x] + [e_2, e_1]) / 2 = (3 e_3 + e_3) / 2
  const Mat shift = op_from(a, {{"x", "e_1", Rational(1)}, {"e_2", "e_3", Rational(1)}, {"e_3", "e_4", Rational(1, 2)}});
  const Mat e2_to_e4 = op_from(a, {{"e_2", "e_4", Rational(1)}});
  for (const Mat* m : {&shift, &e2_to_e4}) {
    CHECK(der.contains(*m).member);
    CHECK(delta_identity_on_samples(a, *m, kHalf, g, 4));
  }
  CHECK_FALSE(expected_der_form(s1(4, Rational(2))).span().contains(shift).member);
  CHECK_FALSE(derivation_space(build(s1(5, Rational(2))), kHalf)
                  .contains(op_from(build(s1(5, Rational(2))), {{"x", "e_1", Rational(1)}}))
                  .member);
}
