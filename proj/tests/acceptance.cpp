// Acceptance suite: one PASS/FAIL line per criterion.
//
//   halfder_acceptance                  exit 0 iff every criterion passes
//   halfder_acceptance --expect-fail 1,4,7
//                                       exit 0 iff exactly the listed criteria fail

#include "halfder/errors.hpp"
#include "halfder/forms.hpp"
#include "halfder/locder.hpp"
#include "halfder/reports.hpp"
#include "halfder/twolocal.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace halfder;

namespace {

constexpr std::uint64_t kSeed = 2024;
const Rational kHalf(1, 2);
constexpr double kRuntimeBudgetSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
};

FamilySpec make(Family f, int n, int m = 0) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.m = m;
  return s;
}

FamilySpec with_beta(FamilySpec s, Rational beta) {
  s.beta = beta;
  return s;
}

/// Replaces the default alphas with seeded random nonzero values.
FamilySpec random_alphas(FamilySpec s, PointSampler& rng) {
  s = with_defaults(s);
  for (auto& a : s.alphas) a = rng.nonzero();
  return s;
}

std::vector<FamilySpec> filiform_instances() {
  PointSampler rng(kSeed);
  std::vector<FamilySpec> out;
  for (int n = 4; n <= 8; ++n) {
    out.push_back(with_beta(make(Family::S1, n), Rational(2)));
    out.push_back(with_beta(make(Family::S1, n), Rational(5, 3)));
    out.push_back(make(Family::S2, n));
    out.push_back(make(Family::S3, n));
    out.push_back(random_alphas(make(Family::S4, n), rng));
    out.push_back(make(Family::SN2, n));
    out.push_back(with_beta(make(Family::Tau1, n), Rational(5, 3)));
    out.push_back(make(Family::Tau2, n));
    out.push_back(random_alphas(make(Family::Tau3, n), rng));
    out.push_back(make(Family::Tau2N2, n));
  }
  return out;
}

std::vector<FamilySpec> other_instances() {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= 3; ++n) out.push_back(make(Family::HeisSolv, n));
  for (int n = 2; n <= 4; ++n) out.push_back(make(Family::AbelianSolv, n));
  for (int n = 1; n <= 3; ++n) out.push_back(make(Family::Oscillator, n));
  for (int m = 2; m <= 5; ++m) out.push_back(make(Family::Sl2Module, 0, m));
  for (int n = 1; n <= 3; ++n) out.push_back(make(Family::Schrodinger, n));
  return out;
}

bool buildable(const FamilySpec& s) {
  try {
    with_defaults(s);
    return true;
  } catch (const ParameterError&) {
    return false;
  }
}

std::string label(const FamilySpec& s) { return describe(with_defaults(s)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome dimension_rows(const std::vector<FamilySpec>& specs) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  RunOptions run;
  for (const auto& s : specs) {
    const TableRow r = compute_row(s, run);
    if (!r.match || !r.stabilized) {
      std::ostringstream os;
      os << label(s) << ": expected (" << r.der_expected << ", " << r.locder_expected << "), computed ("
         << r.der_computed << ", " << r.locder_computed << ")" << (r.stabilized ? "" : " not stabilized");
      o.fail(os.str());
    }
  }
  const double secs = seconds_since(t0);
  if (secs > kRuntimeBudgetSeconds) o.fail("runtime " + std::to_string(secs) + " s over budget");
  o.details.push_back("runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t trivial = 0;
  PointSampler rng(kSeed);
  for (const auto& info : list_families()) {
    for (int size = 2; size <= 5; ++size) {
      FamilySpec s = make(info.family, size);
      if (info.family == Family::Sl2Module) s = make(info.family, 0, size);
      if (info.family == Family::Schrodinger) s.n = size - 1;
      if (!buildable(s)) continue;
      const LieAlgebra a = build(s);
      const OperatorSpace der = derivation_space(a, kHalf);
      if (!is_trivial_space(der)) continue;
      ++trivial;
      const auto loc = sampled_locder_space(a, der, default_plan(der, kSeed));
      if (!loc.stabilized) o.fail(a.name() + ": sampling not stabilized");
      if (!(loc.upper_space.flat() == der.flat()))
        o.fail(a.name() + ": sampled local space has dim " + std::to_string(loc.upper_space.dim()));
      if (!evaluation_injective(der, {rng.any(a.dim())}).injective)
        o.fail(a.name() + ": a random single vector does not separate");
    }
  }
  if (trivial == 0) o.fail("no trivial instances found");
  o.details.push_back(std::to_string(trivial) + " trivial instances");
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<FamilySpec> specs = filiform_instances();
  for (const auto& s : other_instances())
    if (s.family != Family::Sl2Module || s.m == 2)
      if (s.family != Family::Schrodinger || s.n == 2) specs.push_back(s);
  std::set<std::string> suggested_hits;
  for (const auto& s : specs) {
    const LieAlgebra a = build(s);
    const OperatorSpace der = derivation_space(a, kHalf);
    SearchOptions so;
    so.seed = kSeed;
    so.suggestions = suggested_tuples(s, a);
    const auto rep = certify_two_local_rigidity(a, der, so);
    if (rep.status != TwoLocalStatus::Pass || !rep.certificate) {
      o.fail(a.name() + ": INCONCLUSIVE");
      continue;
    }
    if (!evaluation_injective(der, rep.certificate->tuple).injective) o.fail(a.name() + ": certificate not injective");
    if (!rep.certificate->suggested)
      o.fail(a.name() + ": suggested tuple " + (so.suggestions.empty() ? "-" : so.suggestions.front().label) +
             " not separating; certified " + rep.certificate->label);
    else
      suggested_hits.insert(rep.certificate->label);
  }
  std::string hits;
  for (const auto& h : suggested_hits) hits += (hits.empty() ? "" : " ") + h;
  o.details.push_back(std::to_string(specs.size()) + " instances; suggested tuples certified: " + hits);
  return o;
}

Outcome criterion5() {
  Outcome o;
  RunOptions run;
  run.seed = kSeed;
  PointSampler rng(kSeed);
  const std::vector<FamilySpec> produce{with_beta(make(Family::S1, 5), Rational(2)),
                                        with_beta(make(Family::S1, 5), Rational(5, 3)),
                                        make(Family::S2, 5),
                                        make(Family::S3, 5),
                                        random_alphas(make(Family::S4, 5), rng),
                                        make(Family::Tau1, 4),
                                        make(Family::Tau2, 4),
                                        make(Family::AbelianSolv, 3),
                                        make(Family::Oscillator, 2)};
  for (const auto& s : produce) {
    const auto w = find_witness(s, run);
    if (w.refused || !w.delta_op) {
      o.fail(label(s) + ": refused (" + w.reason + ")");
      continue;
    }
    const LieAlgebra a = build(s);
    const OperatorSpace der = derivation_space(a, kHalf);
    if (der.contains(*w.delta_op).member) o.fail(label(s) + ": witness lies in Der");
    if (!stratified_certify(a, der, *w.delta_op, default_plan(der, kSeed)).pass)
      o.fail(label(s) + ": witness fails stratified_certify");
  }
  for (const auto& s : {make(Family::SN2, 5), make(Family::Tau3, 4), make(Family::Tau2N2, 3),
                        make(Family::HeisSolv, 2)}) {
    const auto w = find_witness(s, run);
    if (!w.refused) o.fail(label(s) + ": expected refusal");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  PointSampler rng(kSeed);
  std::vector<LieAlgebra> algebras;
  for (const auto& info : list_families()) {
    for (int size : {2, 3, 4}) {
      FamilySpec s = make(info.family, size + 2);
      if (info.family == Family::Sl2Module) s = make(info.family, 0, size);
      if (info.family == Family::Schrodinger) s.n = size - 1;
      if (info.family == Family::HeisSolv || info.family == Family::Oscillator || info.family == Family::Tau2N2 ||
          info.family == Family::AbelianSolv)
        s.n = size;
      if (buildable(s)) algebras.push_back(build(s));
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, algebras.size() - 1);
  std::mt19937_64 gen(kSeed);

  std::size_t bad_bracket = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& a = algebras[pick(gen)];
    const Vector u = rng.any(a.dim()), v = rng.any(a.dim()), w = rng.any(a.dim());
    const Rational c = rng.nonzero();
    Vector anti = a.bracket(u, v);
    axpy(Rational(1), a.bracket(v, u), anti);
    Vector cuw = w;
    axpy(c, u, cuw);
    Vector lin = a.bracket(cuw, v);
    axpy(Rational(-1), a.bracket(w, v), lin);
    axpy(-c, a.bracket(u, v), lin);
    if (!is_zero(anti) || !is_zero(lin)) ++bad_bracket;
  }
  if (bad_bracket) o.fail(std::to_string(bad_bracket) + " nonzero antisymmetry/bilinearity residuals");

  std::vector<OperatorSpace> ders;
  for (const auto& a : algebras) {
    ders.push_back(derivation_space(a, kHalf));
    if (!ders.back().contains(Mat::identity(a.dim())).member) o.fail(a.name() + ": identity not in Der_{1/2}");
  }

  std::size_t bad_comm = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = pick(gen);
    const auto& a = algebras[k];
    const auto& der = ders[k];
    std::uniform_int_distribution<std::size_t> b(0, der.dim() - 1);
    const Mat& b1 = der.basis()[b(gen)];
    const Mat& b2 = der.basis()[b(gen)];
    if (!is_delta_derivation(a, b1 * b2 - b2 * b1, Rational(1, 4))) ++bad_comm;
  }
  if (bad_comm) o.fail(std::to_string(bad_comm) + " commutators fail the 1/4-derivation identity");

  std::size_t strata = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = pick(gen);
    if (algebras[k].dim() > 12) continue;
    const auto loc = sampled_locder_space(algebras[k], ders[k], default_plan(ders[k], kSeed + t));
    for (const auto& c : loc.per_stratum_certified) {
      ++strata;
      if (!c.passed) o.fail(algebras[k].name() + ": Der left the sampled space in stratum " + c.label);
    }
  }
  o.details.push_back(std::to_string(strata) + " strata checked for Der containment");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t compared = 0;
  std::vector<FamilySpec> specs = filiform_instances();
  const auto more = other_instances();
  specs.insert(specs.end(), more.begin(), more.end());
  for (const auto& s : specs) {
    if (s.family == Family::Tau2N2) continue;
    const LieAlgebra a = build(s);
    const OperatorSpace der = derivation_space(a, kHalf);
    const auto loc = sampled_locder_space(a, der, default_plan(der, kSeed));
    const auto form = expected_locder_form(s);
    ++compared;
    if (!(form.span().flat() == loc.upper_space.flat()))
      o.fail(a.name() + ": printed span dim " + std::to_string(form.span().dim()) + ", sampled dim " +
             std::to_string(loc.upper_space.dim()));
  }
  for (int n = 4; n <= 8; ++n) {
    const auto j = table_to_json({compute_row(make(Family::Tau2N2, n), RunOptions{})});
    bool noted = false;
    for (const auto& id : j["rows"][0]["notes"]) noted = noted || id == "tau2n2_local_display";
    if (!noted) o.fail("tau2n2 n=" + std::to_string(n) + ": discrepancy note missing");
    if (j["rows"][0]["locder_dim_computed"] != 2) o.fail("tau2n2 n=" + std::to_string(n) + ": computed dim not 2");
  }
  o.details.push_back(std::to_string(compared) + " spans compared");
  return o;
}

std::set<int> parse_expected(int argc, char** argv) {
  std::set<int> out;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) != "--expect-fail") continue;
    std::stringstream ss(argv[i + 1]);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.insert(std::stoi(tok));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<int> expected_fail = parse_expected(argc, argv);
  struct Criterion {
    int id;
    std::string name;
    std::string tolerance;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "filiform dimension table n=4..8", "exact integer equality, < 60 s",
       [] { return dimension_rows(filiform_instances()); }},
      {2, "non-filiform dimension table", "exact integer equality, < 60 s",
       [] { return dimension_rows(other_instances()); }},
      {3, "trivial spaces: local = scalars, single vector separates", "100% of trivial instances", criterion3},
      {4, "2-local rigidity certificates", "PASS with suggested tuple on every instance", criterion4},
      {5, "witness suite", "exact Der non-membership, stratified_certify at seed 2024", criterion5},
      {6, "algebraic property suite", "exact zero residuals, 100 cases per property", criterion6},
      {7, "printed local forms vs sampled spans", "exact span equality", criterion7},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const Outcome o = c.run();
    if (!o.pass) failed.insert(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << c.tolerance
              << "]\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
  }
  if (failed == expected_fail) return 0;
  std::cout << "unexpected outcome: failing set differs from --expect-fail\n";
  return 1;
}
