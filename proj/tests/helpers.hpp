#pragma once

#include "halfder/catalog.hpp"

#include <random>

namespace testing_helpers {

using halfder::Rational;
using halfder::Vector;

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Small random rationals for property tests (zero allowed).
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  Rational any() {
    std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
    return Rational(num(rng_), den(rng_));
  }
  Vector vector(std::size_t n) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(any());
    return v;
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

private:
  std::mt19937_64 rng_;
};

inline halfder::FamilySpec spec(halfder::Family f, int n, int m = 0) {
  halfder::FamilySpec s;
  s.family = f;
  s.n = n;
  s.m = m;
  return s;
}

inline halfder::FamilySpec s1(int n, Rational beta) {
  auto s = spec(halfder::Family::S1, n);
  s.beta = beta;
  return s;
}

inline halfder::FamilySpec sl2(int m) { return spec(halfder::Family::Sl2Module, 0, m); }

}  // namespace testing_helpers
