#include "halfder/locder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace halfder {

namespace {

std::string pattern_label(const std::string& kind, const std::vector<std::size_t>& idx) {
  std::string s = kind + "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

std::vector<std::size_t> complement(std::size_t d, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d; ++i)
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) out.push_back(i);
  return out;
}

}  // namespace

SamplingPlan default_plan(const OperatorSpace& der, std::uint64_t seed, std::size_t trials, std::size_t window,
                          std::size_t depth) {
  const std::size_t d = der.ambient_dim();
  SamplingPlan plan;
  plan.seed = seed;
  plan.trials_per_stratum = trials;
  plan.stabilization_window = window;

  std::set<std::vector<std::size_t>> seen;
  auto add_pattern = [&](const std::string& label, std::vector<std::size_t> zeros) {
    std::sort(zeros.begin(), zeros.end());
    if (zeros.size() >= d) return;  // only the zero vector
    if (!seen.insert(zeros).second) return;
    plan.strata.push_back({label, std::move(zeros), {}});
  };

  add_pattern("free", {});
  const std::size_t lead = std::min(d, depth);
  for (std::size_t mask = 1; mask < (std::size_t{1} << lead); ++mask) {
    std::vector<std::size_t> zeros;
    for (std::size_t b = 0; b < lead; ++b)
      if (mask & (std::size_t{1} << b)) zeros.push_back(b);
    add_pattern(pattern_label("zero", zeros), zeros);
  }
  for (std::size_t i = 0; i < d; ++i) add_pattern(pattern_label("zero", {i}), {i});
  for (std::size_t i = 0; i < d; ++i) add_pattern(pattern_label("support", {i}), complement(d, {i}));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) add_pattern(pattern_label("support", {i, j}), complement(d, {i, j}));

  std::vector<Subspace> kernels;
  for (std::size_t k = 0; k < der.dim(); ++k) {
    Subspace ker = kernel_basis(der.basis()[k]);
    if (ker.dim() == 0 || ker.dim() == d) continue;
    if (std::find(kernels.begin(), kernels.end(), ker) != kernels.end()) continue;
    kernels.push_back(ker);
    plan.strata.push_back({"ker(D" + std::to_string(k) + ")", {}, ker.basis()});
  }
  return plan;
}

void validate_plan(const SamplingPlan& plan, std::size_t d) {
  if (plan.trials_per_stratum < 1) throw std::invalid_argument("sampling plan needs trials_per_stratum >= 1");
  if (plan.stabilization_window < 2) throw std::invalid_argument("sampling plan needs stabilization_window >= 2");
  bool has_free = false;
  for (const auto& s : plan.strata) {
    if (s.span.empty() && s.forced_zero.empty()) has_free = true;
    for (auto i : s.forced_zero)
      if (i >= d) throw std::invalid_argument("stratum '" + s.label + "' forces a coordinate out of range");
    for (const auto& v : s.span)
      if (v.size() != d) throw std::invalid_argument("stratum '" + s.label + "' has a spanning vector of wrong length");
  }
  if (!has_free) throw std::invalid_argument("sampling plan must include the all-free pattern");
}

// ---------------------------------------------------------------------------

Rational PointSampler::nonzero() {
  std::uniform_int_distribution<long> num(1, 18);
  std::uniform_int_distribution<long> den(1, 4);
  long p = num(rng_) - 10;  // 1..18 -> -9..8, shift 0..8 up to 1..9
  if (p >= 0) ++p;
  return Rational(p, den(rng_));
}

Vector PointSampler::draw(const Stratum& s, std::size_t d) {
  Vector x(d);
  if (!s.span.empty()) {
    for (const auto& v : s.span) axpy(nonzero(), v, x);
    return x;
  }
  std::vector<bool> zero(d, false);
  for (auto i : s.forced_zero) zero[i] = true;
  for (std::size_t i = 0; i < d; ++i)
    if (!zero[i]) x[i] = nonzero();
  return x;
}

Vector PointSampler::any(std::size_t d) {
  Vector x(d);
  for (auto& v : x) v = nonzero();
  return x;
}

// ---------------------------------------------------------------------------

Subspace evaluation_space(const OperatorSpace& s, std::span<const Rational> x) {
  if (x.size() != s.ambient_dim()) throw std::invalid_argument("evaluation_space: element dimension mismatch");
  std::vector<Vector> images;
  images.reserve(s.dim());
  for (const auto& b : s.basis()) images.push_back(b.apply(x));
  return Subspace::span_of(s.ambient_dim(), images);
}

LocalMembership local_membership(const OperatorSpace& s, const Mat& delta_op, std::span<const Rational> x) {
  const std::size_t d = s.ambient_dim();
  LocalMembership out;
  Mat evals(d, s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vector bx = s.basis()[k].apply(x);
    for (std::size_t r = 0; r < d; ++r) evals(r, k) = bx[r];
  }
  auto c = solve(evals, delta_op.apply(x));
  if (!c) return out;
  out.member = true;
  out.coefficients = std::move(*c);
  out.witness = s.combine(out.coefficients);
  return out;
}

namespace {

// Restricts the flat candidate space to {Delta : Delta x in S_x}. Returns
// true when the space shrank.
bool impose_point(Subspace& cand, const OperatorSpace& der, std::span<const Rational> x) {
  const std::size_t d = der.ambient_dim();
  const Subspace normals = evaluation_space(der, x).annihilator();
  if (normals.dim() == 0 || cand.dim() == 0) return false;

  const std::size_t u = cand.dim();
  Mat constraint(normals.dim(), u);
  bool any = false;
  for (std::size_t l = 0; l < u; ++l) {
    const Vector& flat = cand.basis()[l];
    Vector img(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& v = flat[r * d + c];
        if (!v.is_zero() && !x[c].is_zero()) img[r].add_mul(v, x[c]);
      }
    for (std::size_t p = 0; p < normals.dim(); ++p) {
      constraint(p, l) = dot(normals.basis()[p], img);
      if (!constraint(p, l).is_zero()) any = true;
    }
  }
  if (!any) return false;

  const Subspace keep = kernel_basis(constraint);
  std::vector<Vector> gens;
  gens.reserve(keep.dim());
  for (const auto& coeffs : keep.basis()) {
    Vector g(d * d);
    for (std::size_t l = 0; l < u; ++l) axpy(coeffs[l], cand.basis()[l], g);
    gens.push_back(std::move(g));
  }
  cand = Subspace::span_of(d * d, gens);
  return true;
}

}  // namespace

LocalSpaceResult sampled_locder_space(const LieAlgebra& a, const OperatorSpace& der, const SamplingPlan& plan) {
  const std::size_t d = a.dim();
  if (der.ambient_dim() != d) throw std::invalid_argument("sampled_locder_space: space does not act on this algebra");
  validate_plan(plan, d);

  // Basis-vector points in closed form: column j of Delta must lie in S_{e_j}.
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < d; ++j) {
    const Subspace sj = evaluation_space(der, a.unit(j));
    for (const auto& v : sj.basis()) {
      Vector g(d * d);
      for (std::size_t r = 0; r < d; ++r) g[r * d + j] = v[r];
      gens.push_back(std::move(g));
    }
  }
  Subspace cand = Subspace::span_of(d * d, gens);

  LocalSpaceResult res;
  res.dim_history.push_back(cand.dim());
  for (const auto& s : plan.strata) res.per_stratum_certified.push_back({s.label, true});

  const auto der_inside = [&] {
    for (const auto& b : der.basis())
      if (!member(cand, flatten(b)).member) return false;
    return true;
  };

  PointSampler sampler(plan.seed);
  std::size_t quiet_batches = 0;
  for (std::size_t t = 0; t < plan.trials_per_stratum; ++t) {
    bool changed = false;
    for (std::size_t si = 0; si < plan.strata.size(); ++si) {
      const Vector x = sampler.draw(plan.strata[si], d);
      ++res.samples_used;
      if (is_zero(x)) continue;
      if (impose_point(cand, der, x)) {
        changed = true;
        if (!der_inside()) res.per_stratum_certified[si].passed = false;
      }
    }
    res.dim_history.push_back(cand.dim());
    quiet_batches = changed ? 0 : quiet_batches + 1;
  }
  res.stabilized = quiet_batches >= plan.stabilization_window;
  res.upper_space = OperatorSpace(a.name(), d, der.delta(), cand);
  return res;
}

LocalCertificate stratified_certify(const LieAlgebra& a, const OperatorSpace& der, const Mat& delta_op,
                                    const SamplingPlan& plan) {
  const std::size_t d = a.dim();
  validate_plan(plan, d);
  LocalCertificate cert;
  PointSampler sampler(plan.seed);
  for (std::size_t t = 0; t < plan.trials_per_stratum; ++t)
    for (const auto& s : plan.strata) {
      const Vector x = sampler.draw(s, d);
      ++cert.checks;
      if (!local_membership(der, delta_op, x).member) {
        cert.counterexample = x;
        cert.failing_stratum = s.label;
        return cert;
      }
    }
  cert.pass = true;
  return cert;
}

nlohmann::json to_json(const SamplingPlan& plan) {
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& s : plan.strata) strata.push_back(s.label);
  return {{"seed", plan.seed},
          {"trials_per_stratum", plan.trials_per_stratum},
          {"stabilization_window", plan.stabilization_window},
          {"strata", strata}};
}

}  // namespace halfder
