#include "halfder/twolocal.hpp"

#include "halfder/locder.hpp"

#include <stdexcept>

namespace halfder {

namespace {

/// Column k holds (B_k q_1; ...; B_k q_t).
Mat stacked_evaluation(const OperatorSpace& s, const std::vector<Vector>& tuple) {
  const std::size_t d = s.ambient_dim();
  Mat m(d * tuple.size(), s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    for (std::size_t t = 0; t < tuple.size(); ++t) {
      if (tuple[t].size() != d) throw std::invalid_argument("tuple element has wrong length");
      const Vector img = s.basis()[k].apply(tuple[t]);
      for (std::size_t r = 0; r < d; ++r) m(t * d + r, k) = img[r];
    }
  }
  return m;
}

Vector element(const LieAlgebra& a, const std::vector<std::string>& names) {
  Vector v = zero_vector(a.dim());
  for (const auto& nm : names) {
    auto i = a.index_of(nm);
    if (!i) throw std::logic_error("no basis element " + nm + " in " + a.name());
    v[*i] = v[*i] + Rational(1);
  }
  return v;
}

}  // namespace

Injectivity evaluation_injective(const OperatorSpace& s, const std::vector<Vector>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("evaluation_injective needs a nonempty tuple");
  const Mat m = stacked_evaluation(s, tuple);
  Injectivity out;
  out.stacked_rank = rank(m);
  out.injective = out.stacked_rank == s.dim();
  if (!out.injective) out.kernel = kernel_basis(m).basis();
  return out;
}

std::vector<TupleCandidate> suggested_tuples(const FamilySpec& input, const LieAlgebra& a) {
  const FamilySpec s = with_defaults(input);
  const int n = s.n;
  switch (s.family) {
    case Family::S1:
    case Family::S2:
    case Family::S3:
    case Family::S4:
    case Family::Tau1:
    case Family::Tau2: return {{"(x, e_1)", {element(a, {"x"}), element(a, {"e_1"})}}};
    // D(e_2) carries its own e_{2n} coefficient here, invisible on (x, e_1)
    case Family::Tau3: return {{"(x, e_2)", {element(a, {"x"}), element(a, {"e_2"})}}};
    case Family::SN2:
    case Family::Tau2N2: return {{"(x_1, e_1)", {element(a, {"x_1"}), element(a, {"e_1"})}}};
    case Family::HeisSolv: {
      const std::string xl = "x_" + std::to_string(n + 1);
      return {{"(e_1, " + xl + " + e_1)", {element(a, {"e_1"}), element(a, {xl, "e_1"})}}};
    }
    case Family::AbelianSolv: {
      std::vector<std::string> xs;
      for (int i = 1; i <= n; ++i) xs.push_back("x_" + std::to_string(i));
      return {{"(q = x_1 + .. + x_n)", {element(a, xs)}}};
    }
    case Family::Oscillator: return {{"(e_-1)", {element(a, {"e_-1"})}}};
    case Family::Sl2Module: return {{"(e)", {element(a, {"e"})}}};
    case Family::Schrodinger:
      if (n == 2) return {{"(e, s_12 + e)", {element(a, {"e"}), element(a, {"s_12", "e"})}}};
      return {{"(e)", {element(a, {"e"})}}};
    default: return {};
  }
}

std::optional<SeparatingCertificate> find_separating_tuple(const OperatorSpace& s, const SearchOptions& options) {
  if (options.max_tuple_len < 1 || options.max_tuple_len > 2)
    throw std::invalid_argument("max_tuple_len must be 1 or 2");
  const std::size_t d = s.ambient_dim();

  auto try_tuple = [&](const std::vector<Vector>& tuple, std::string label,
                       bool suggested) -> std::optional<SeparatingCertificate> {
    if (tuple.size() > options.max_tuple_len) return std::nullopt;
    const auto inj = evaluation_injective(s, tuple);
    if (!inj.injective) return std::nullopt;
    return SeparatingCertificate{tuple, std::move(label), inj.stacked_rank, s.dim(), suggested};
  };
  auto unit = [&](std::size_t i) {
    Vector v = zero_vector(d);
    v[i] = Rational(1);
    return v;
  };

  for (const auto& c : options.suggestions)
    if (auto cert = try_tuple(c.tuple, c.label, true)) return cert;
  for (std::size_t i = 0; i < d; ++i)
    if (auto cert = try_tuple({unit(i)}, "basis " + std::to_string(i), false)) return cert;
  if (options.max_tuple_len >= 2)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (auto cert = try_tuple({unit(i), unit(j)}, "basis pair " + std::to_string(i) + "," + std::to_string(j),
                                  false))
          return cert;
  PointSampler sampler(options.seed);
  for (std::size_t b = 0; b < options.random_budget; ++b) {
    const bool pair = options.max_tuple_len >= 2 && b % 2 == 1;
    std::vector<Vector> tuple{sampler.any(d)};
    if (pair) tuple.push_back(sampler.any(d));
    if (auto cert = try_tuple(tuple, pair ? "random pair" : "random single", false)) return cert;
  }
  return std::nullopt;
}

TwoLocalReport certify_two_local_rigidity(const LieAlgebra& a, const OperatorSpace& s, const SearchOptions& options) {
  TwoLocalReport r;
  r.algebra = a.name();
  r.der_dim = s.dim();
  r.certificate = find_separating_tuple(s, options);
  const std::size_t d = a.dim();
  r.candidates_tried = options.suggestions.size() + d + (options.max_tuple_len >= 2 ? d * (d - 1) / 2 : 0) +
                       options.random_budget;
  r.status = r.certificate ? TwoLocalStatus::Pass : TwoLocalStatus::Inconclusive;
  return r;
}

std::optional<Mat> derivation_from_values(const OperatorSpace& s, const std::vector<Vector>& tuple,
                                          const std::vector<Vector>& values) {
  if (tuple.size() != values.size()) throw std::invalid_argument("tuple and values differ in length");
  const std::size_t d = s.ambient_dim();
  Vector rhs;
  rhs.reserve(d * values.size());
  for (const auto& v : values) rhs.insert(rhs.end(), v.begin(), v.end());
  auto coeffs = solve(stacked_evaluation(s, tuple), rhs);
  if (!coeffs) return std::nullopt;
  return s.combine(*coeffs);
}

std::string to_string(TwoLocalStatus s) { return s == TwoLocalStatus::Pass ? "PASS" : "INCONCLUSIVE"; }

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

nlohmann::json to_json(const SeparatingCertificate& c, const LieAlgebra& a) {
  nlohmann::json tuple = nlohmann::json::array();
  nlohmann::json readable = nlohmann::json::array();
  for (const auto& v : c.tuple) {
    tuple.push_back(vector_to_json(v));
    readable.push_back(format_element(a, v));
  }
  return {{"tuple", tuple},
          {"elements", readable},
          {"label", c.label},
          {"suggested", c.suggested},
          {"stacked_rank", c.stacked_rank},
          {"der_dim", c.der_dim}};
}

nlohmann::json to_json(const TwoLocalReport& r, const LieAlgebra& a) {
  nlohmann::json out = {{"algebra", r.algebra}, {"der_dim", r.der_dim}, {"status", to_string(r.status)}};
  if (r.certificate) {
    out["tuple"] = to_json(*r.certificate, a)["tuple"];
    out["certificate"] = to_json(*r.certificate, a);
  } else {
    out["tuple"] = nlohmann::json::array();
    out["candidates_tried"] = r.candidates_tried;
  }
  // A separating tuple is sufficient, not necessary, so there is no FAIL status.
  out["negative_path"] = "none";
  return out;
}

}  // namespace halfder
