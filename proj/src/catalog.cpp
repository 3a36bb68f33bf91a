#include "halfder/catalog.hpp"

#include "halfder/errors.hpp"

#include <sstream>

namespace halfder {

namespace {

const std::vector<FamilyInfo> kFamilies = {
    {Family::NFiliform, "nfiliform", "n", "n_{n,1}"},
    {Family::QFiliform, "qfiliform", "n", "Q_{2n}"},
    {Family::S1, "s1", "n, beta", "s^1_{n,1}(beta)"},
    {Family::S2, "s2", "n", "s^2_{n,1}"},
    {Family::S3, "s3", "n", "s^3_{n,1}"},
    {Family::S4, "s4", "n, alphas (alpha_3..alpha_{n-1})", "s^4_{n,1}(alpha_3,..,alpha_{n-1})"},
    {Family::SN2, "sn2", "n", "s_{n,2}"},
    {Family::Tau1, "tau1", "n, beta (the alpha parameter)", "tau^1_{2n,1}(alpha)"},
    {Family::Tau2, "tau2", "n", "tau^2_{2n,1}"},
    {Family::Tau3, "tau3", "n, alphas (alpha_4,alpha_6,..,alpha_{2n-2})", "tau^3_{2n,1}(alpha_4,..,alpha_{2n-2})"},
    {Family::Tau2N2, "tau2n2", "n", "tau_{2n,2}"},
    {Family::HeisSolv, "heis", "n", "L_{n,n+1}"},
    {Family::AbelianSolv, "abelian", "n", "L_n"},
    {Family::Oscillator, "oscillator", "n, lambdas", "L_lambda"},
    {Family::Sl2Module, "sl2module", "m", "L^m"},
    {Family::Schrodinger, "schrodinger", "n", "S_n"},
};

std::string idx_name(const std::string& stem, int i) { return stem + "_" + std::to_string(i); }

[[noreturn]] void bad(const FamilySpec& s, const std::string& what) {
  throw ParameterError(family_info(s.family).id + ": " + what);
}

bool takes_beta(Family f) { return f == Family::S1 || f == Family::Tau1; }
bool takes_alphas(Family f) { return f == Family::S4 || f == Family::Tau3; }
bool takes_n(Family f) { return f != Family::Sl2Module; }

int min_n(Family f) {
  switch (f) {
    case Family::NFiliform:
    case Family::S1:
    case Family::S2:
    case Family::S3:
    case Family::S4:
    case Family::SN2:
      return 3;
    case Family::QFiliform:
    case Family::Tau1:
    case Family::Tau2:
    case Family::Tau3:
    case Family::Tau2N2:
      return 2;
    default:
      return 1;
  }
}

std::size_t expected_alpha_count(const FamilySpec& s) {
  return s.family == Family::S4 ? static_cast<std::size_t>(s.n - 3) : static_cast<std::size_t>(s.n - 2);
}

void validate(const FamilySpec& s) {
  if (takes_n(s.family)) {
    if (s.n < min_n(s.family)) bad(s, "requires n >= " + std::to_string(min_n(s.family)));
    if (s.m != 0) bad(s, "parameter m is not used by this family");
  } else {
    if (s.m < 2) bad(s, "requires m >= 2");
    if (s.n != 0) bad(s, "parameter n is not used by this family");
  }
  if (!takes_beta(s.family) && s.beta) bad(s, "parameter beta is not used by this family");
  if (takes_beta(s.family) && !s.beta) bad(s, "missing beta");
  if (!takes_alphas(s.family) && !s.alphas.empty()) bad(s, "parameter alphas is not used by this family");
  if (takes_alphas(s.family) && s.alphas.size() != expected_alpha_count(s))
    bad(s, "expects " + std::to_string(expected_alpha_count(s)) + " alphas, got " + std::to_string(s.alphas.size()));
  if (s.family != Family::Oscillator && !s.lambdas.empty()) bad(s, "parameter lambdas is not used by this family");
  if (s.family == Family::Oscillator) {
    if (s.lambdas.size() != static_cast<std::size_t>(s.n))
      bad(s, "expects " + std::to_string(s.n) + " lambdas, got " + std::to_string(s.lambdas.size()));
    if (s.lambdas.front().sign() <= 0) bad(s, "requires 0 < lambda_1");
    for (std::size_t j = 1; j < s.lambdas.size(); ++j)
      if (s.lambdas[j] < s.lambdas[j - 1]) bad(s, "requires lambda_1 <= .. <= lambda_n");
  }
}

// Brackets on the naturally graded filiform algebra n_{n,1}; e_i sits at index i + shift.
void add_n_filiform(StructureBuilder& b, int n, int shift) {
  const auto e = [&](int i) { return static_cast<std::size_t>(i + shift); };
  for (int i = 2; i <= n - 1; ++i) b.add(e(i), e(1), e(i + 1), 1);
}

// Brackets on Q_{2n}; e_i sits at index i + shift.
void add_q_filiform(StructureBuilder& b, int n, int shift) {
  const auto e = [&](int i) { return static_cast<std::size_t>(i + shift); };
  for (int i = 2; i <= 2 * n - 2; ++i) b.add(e(i), e(1), e(i + 1), 1);
  for (int i = 2; i <= n; ++i) b.add(e(i), e(2 * n + 1 - i), e(2 * n), i % 2 == 0 ? 1 : -1);
}

std::vector<std::string> x_then_e(const std::vector<std::string>& xs, int count) {
  std::vector<std::string> names = xs;
  for (int i = 1; i <= count; ++i) names.push_back(idx_name("e", i));
  return names;
}

LieAlgebra build_s_family(const FamilySpec& s) {
  const int n = s.n;
  StructureBuilder b(x_then_e({"x"}, n));
  add_n_filiform(b, n, 0);
  const std::size_t x = 0;
  const auto e = [](int i) { return static_cast<std::size_t>(i); };
  switch (s.family) {
    case Family::S1:
      for (int i = 2; i <= n; ++i) b.add(e(i), x, e(i), Rational(i - 2) + *s.beta);
      b.add(e(1), x, e(1), 1);
      break;
    case Family::S2:
      for (int i = 2; i <= n; ++i) b.add(e(i), x, e(i), 1);
      break;
    case Family::S3:
      for (int i = 2; i <= n; ++i) b.add(e(i), x, e(i), i - 1);
      b.add(e(1), x, e(1), 1).add(e(1), x, e(2), 1);
      break;
    case Family::S4:
      for (int i = 2; i <= n; ++i) {
        b.add(e(i), x, e(i), 1);
        for (int l = i + 2; l <= n; ++l) b.add(e(i), x, e(l), s.alphas[static_cast<std::size_t>(l + 1 - i - 3)]);
      }
      break;
    default:
      break;
  }
  return b.build(describe(s));
}

LieAlgebra build_sn2(const FamilySpec& s) {
  const int n = s.n;
  StructureBuilder b(x_then_e({"x_1", "x_2"}, n));
  add_n_filiform(b, n, 1);
  const auto e = [](int i) { return static_cast<std::size_t>(i + 1); };
  for (int i = 3; i <= n; ++i) b.add(e(i), 0, e(i), i - 2);
  b.add(e(1), 0, e(1), 1);
  for (int i = 2; i <= n; ++i) b.add(e(i), 1, e(i), 1);
  return b.build(describe(s));
}

LieAlgebra build_tau(const FamilySpec& s) {
  const int n = s.n;
  StructureBuilder b(x_then_e({"x"}, 2 * n));
  add_q_filiform(b, n, 0);
  const std::size_t x = 0;
  const auto e = [](int i) { return static_cast<std::size_t>(i); };
  switch (s.family) {
    case Family::Tau1: {
      const Rational& alpha = *s.beta;
      b.add(e(1), x, e(1), 1);
      for (int i = 2; i <= 2 * n - 1; ++i) b.add(e(i), x, e(i), Rational(i - 2) + alpha);
      b.add(e(2 * n), x, e(2 * n), Rational(2 * n - 3) + Rational(2) * alpha);
      break;
    }
    case Family::Tau2:
      b.add(e(1), x, e(1), 1).add(e(1), x, e(2 * n), 1);
      for (int i = 2; i <= 2 * n - 1; ++i) b.add(e(i), x, e(i), i - n);
      b.add(e(2 * n), x, e(2 * n), 1);
      break;
    case Family::Tau3:
      // [e_j, x] = e_j + sum_k alpha_{2k} e_{2k-1+j}, truncated at e_{2n-1}.
      for (int j = 2; j <= 2 * n - 1; ++j) {
        b.add(e(j), x, e(j), 1);
        for (int k = 2; 2 * k - 1 + j <= 2 * n - 1; ++k)
          b.add(e(j), x, e(2 * k - 1 + j), s.alphas[static_cast<std::size_t>(k - 2)]);
      }
      b.add(e(2 * n), x, e(2 * n), 2);
      break;
    default:
      break;
  }
  return b.build(describe(s));
}

LieAlgebra build_tau2n2(const FamilySpec& s) {
  const int n = s.n;
  StructureBuilder b(x_then_e({"x_1", "x_2"}, 2 * n));
  add_q_filiform(b, n, 1);
  const auto e = [](int i) { return static_cast<std::size_t>(i + 1); };
  for (int i = 1; i <= 2 * n - 1; ++i) b.add(e(i), 0, e(i), i);
  b.add(e(2 * n), 0, e(2 * n), 2 * n + 1);
  // [e_1, x_2] = 0
  for (int i = 2; i <= 2 * n - 1; ++i) b.add(e(i), 1, e(i), 1);
  b.add(e(2 * n), 1, e(2 * n), 2);
  return b.build(describe(s));
}

LieAlgebra build_heis(const FamilySpec& s) {
  const int n = s.n;
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * n + 1; ++i) names.push_back(idx_name("e", i));
  for (int i = 1; i <= n + 1; ++i) names.push_back(idx_name("x", i));
  StructureBuilder b(names);
  const auto e = [](int i) { return static_cast<std::size_t>(i - 1); };
  const auto x = [n](int i) { return static_cast<std::size_t>(2 * n + i); };
  for (int i = 1; i <= n; ++i) {
    b.add(e(n + i), e(i), e(2 * n + 1), 1);
    b.add(e(i), x(i), e(i), 1);
    b.add(e(n + i), x(i), e(n + i), -1);
    b.add(e(i), x(n + 1), e(i), 1);
  }
  b.add(e(2 * n + 1), x(n + 1), e(2 * n + 1), 1);
  return b.build(describe(s));
}

LieAlgebra build_abelian(const FamilySpec& s) {
  const int n = s.n;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(idx_name("e", i));
  for (int i = 1; i <= n; ++i) names.push_back(idx_name("x", i));
  StructureBuilder b(names);
  for (int i = 0; i < n; ++i) b.add(static_cast<std::size_t>(i), static_cast<std::size_t>(n + i), static_cast<std::size_t>(i), 1);
  return b.build(describe(s));
}

LieAlgebra build_oscillator(const FamilySpec& s) {
  const int n = s.n;
  std::vector<std::string> names = {"e_-1", "e_0"};
  for (int j = 1; j <= n; ++j) names.push_back(idx_name("e", j));
  for (int j = 1; j <= n; ++j) names.push_back(idx_name("ec", j));
  StructureBuilder b(names);
  const std::size_t em1 = 0, e0 = 1;
  for (int j = 1; j <= n; ++j) {
    const auto ej = static_cast<std::size_t>(1 + j);
    const auto ecj = static_cast<std::size_t>(1 + n + j);
    const Rational& lam = s.lambdas[static_cast<std::size_t>(j - 1)];
    b.add(em1, ej, ecj, lam);
    b.add(em1, ecj, ej, -lam);
    b.add(ej, ecj, e0, 1);
  }
  return b.build(describe(s));
}

LieAlgebra build_sl2module(const FamilySpec& s) {
  const int m = s.m;
  std::vector<std::string> names = {"e", "f", "h"};
  for (int k = 0; k <= m; ++k) names.push_back(idx_name("x", k));
  StructureBuilder b(names);
  const std::size_t e = 0, f = 1, h = 2;
  const auto x = [](int k) { return static_cast<std::size_t>(3 + k); };
  b.add(e, f, h, 1).add(h, e, e, 2).add(f, h, f, 2);
  for (int k = 0; k <= m; ++k) b.add(x(k), h, x(k), 2 * k - m);
  for (int k = 0; k <= m - 1; ++k) b.add(x(k), f, x(k + 1), 1);
  for (int k = 1; k <= m; ++k) b.add(x(k), e, x(k - 1), k * (m + 1 - k));
  return b.build(describe(s));
}

LieAlgebra build_schrodinger(const FamilySpec& s) {
  const int n = s.n;
  std::vector<std::string> names = {"e", "f", "h", "z"};
  for (int i = 1; i <= n; ++i) {
    names.push_back(idx_name("x", i));
    names.push_back(idx_name("y", i));
  }
  // s_{jk} for j < k in lexicographic order.
  std::vector<std::vector<std::size_t>> s_index(static_cast<std::size_t>(n + 1), std::vector<std::size_t>(static_cast<std::size_t>(n + 1)));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      s_index[j][k] = names.size();
      names.push_back(n <= 9 ? "s_" + std::to_string(j) + std::to_string(k)
                             : "s_" + std::to_string(j) + "_" + std::to_string(k));
    }
  StructureBuilder b(names);
  const std::size_t e = 0, f = 1, h = 2, z = 3;
  const auto x = [](int i) { return static_cast<std::size_t>(4 + 2 * (i - 1)); };
  const auto y = [](int i) { return static_cast<std::size_t>(5 + 2 * (i - 1)); };
  // s(j,k) as a signed basis element; s_kj = -s_jk, s_jj = 0.
  struct Signed {
    std::size_t idx;
    int sign;
  };
  const auto sgen = [&](int j, int k) -> Signed {
    if (j == k) return {0, 0};
    if (j < k) return {s_index[j][k], 1};
    return {s_index[k][j], -1};
  };
  const auto delta = [](int a, int c) { return a == c ? 1 : 0; };

  b.add(e, f, h, 1).add(h, e, e, 2).add(f, h, f, 2);
  for (int i = 1; i <= n; ++i) {
    b.add(x(i), y(i), z, 1);
    b.add(h, x(i), x(i), 1);
    b.add(h, y(i), y(i), -1);
    b.add(e, y(i), x(i), 1);
    b.add(f, x(i), y(i), 1);
  }
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      const std::size_t sjk = s_index[j][k];
      for (int i = 1; i <= n; ++i) {
        if (delta(k, i)) b.add(sjk, x(i), x(j), 1).add(sjk, y(i), y(j), 1);
        if (delta(j, i)) b.add(sjk, x(i), x(k), -1).add(sjk, y(i), y(k), -1);
      }
    }
  // [s_jk, s_lm] = d_lk s_jm + d_jm s_kl + d_mk s_lj + d_lj s_mk, each stored pair once.
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        for (int mm = l + 1; mm <= n; ++mm) {
          const std::size_t a = s_index[j][k], c = s_index[l][mm];
          if (a >= c) continue;
          const auto put = [&](int dlt, Signed t) {
            if (dlt && t.sign) b.add(a, c, t.idx, t.sign);
          };
          put(delta(l, k), sgen(j, mm));
          put(delta(j, mm), sgen(k, l));
          put(delta(mm, k), sgen(l, j));
          put(delta(l, j), sgen(mm, k));
        }
  return b.build(describe(s));
}

}  // namespace

const std::vector<FamilyInfo>& list_families() { return kFamilies; }

const FamilyInfo& family_info(Family f) {
  for (const auto& info : kFamilies)
    if (info.family == f) return info;
  throw std::logic_error("unknown family");
}

std::optional<Family> family_from_id(const std::string& id) {
  for (const auto& info : kFamilies)
    if (info.id == id) return info.family;
  return std::nullopt;
}

FamilySpec with_defaults(FamilySpec spec) {
  if (takes_beta(spec.family) && !spec.beta) spec.beta = Rational(5, 3);
  if (takes_alphas(spec.family) && spec.alphas.empty() && spec.n >= min_n(spec.family)) {
    const std::size_t count = expected_alpha_count(spec);
    for (std::size_t t = 0; t < count; ++t) spec.alphas.push_back(Rational(static_cast<long>(t) + 2, 3));
  }
  if (spec.family == Family::Oscillator && spec.lambdas.empty())
    for (int j = 1; j <= spec.n; ++j) spec.lambdas.push_back(Rational(j));
  validate(spec);
  return spec;
}

std::size_t family_dimension(const FamilySpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n);
  switch (spec.family) {
    case Family::NFiliform: return n;
    case Family::QFiliform: return 2 * n;
    case Family::S1:
    case Family::S2:
    case Family::S3:
    case Family::S4: return n + 1;
    case Family::SN2: return n + 2;
    case Family::Tau1:
    case Family::Tau2:
    case Family::Tau3: return 2 * n + 1;
    case Family::Tau2N2:
    case Family::Oscillator: return 2 * n + 2;
    case Family::HeisSolv: return 3 * n + 2;
    case Family::AbelianSolv: return 2 * n;
    case Family::Sl2Module: return static_cast<std::size_t>(spec.m) + 4;
    case Family::Schrodinger: return 4 + 2 * n + n * (n - 1) / 2;
  }
  return 0;
}

LieAlgebra build(const FamilySpec& input) {
  const FamilySpec s = with_defaults(input);
  switch (s.family) {
    case Family::NFiliform: {
      StructureBuilder b(x_then_e({}, s.n));
      add_n_filiform(b, s.n, -1);
      return b.build(describe(s));
    }
    case Family::QFiliform: {
      StructureBuilder b(x_then_e({}, 2 * s.n));
      add_q_filiform(b, s.n, -1);
      return b.build(describe(s));
    }
    case Family::S1:
    case Family::S2:
    case Family::S3:
    case Family::S4: return build_s_family(s);
    case Family::SN2: return build_sn2(s);
    case Family::Tau1:
    case Family::Tau2:
    case Family::Tau3: return build_tau(s);
    case Family::Tau2N2: return build_tau2n2(s);
    case Family::HeisSolv: return build_heis(s);
    case Family::AbelianSolv: return build_abelian(s);
    case Family::Oscillator: return build_oscillator(s);
    case Family::Sl2Module: return build_sl2module(s);
    case Family::Schrodinger: return build_schrodinger(s);
  }
  throw std::logic_error("unknown family");
}

std::string describe(const FamilySpec& s) {
  std::ostringstream os;
  os << family_info(s.family).id;
  if (s.family == Family::Sl2Module)
    os << "_m" << s.m;
  else
    os << "_n" << s.n;
  auto list = [&](const std::vector<Rational>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  if (s.beta) os << "(" << *s.beta << ")";
  if (!s.alphas.empty()) list(s.alphas);
  if (!s.lambdas.empty()) list(s.lambdas);
  return os.str();
}

}  // namespace halfder
