#include "halfder/reports.hpp"

#include "halfder/errors.hpp"

#include <sstream>

namespace halfder {

namespace {

std::string params_text(const FamilySpec& s) {
  std::ostringstream os;
  if (s.family == Family::Sl2Module)
    os << "m=" << s.m;
  else
    os << "n=" << s.n;
  if (s.beta) os << (s.family == Family::Tau1 ? " alpha=" : " beta=") << *s.beta;
  auto list = [&](const char* name, const std::vector<Rational>& v) {
    if (v.empty()) return;
    os << " " << name << "=";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  };
  list("alphas", s.alphas);
  list("lambdas", s.lambdas);
  return os.str();
}

nlohmann::json spec_json(const FamilySpec& s) {
  nlohmann::json j = {{"family", family_info(s.family).id}};
  if (s.family == Family::Sl2Module)
    j["m"] = s.m;
  else
    j["n"] = s.n;
  if (s.beta) j["beta"] = s.beta->str();
  auto list = [](const std::vector<Rational>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
  };
  if (!s.alphas.empty()) j["alphas"] = list(s.alphas);
  if (!s.lambdas.empty()) j["lambdas"] = list(s.lambdas);
  return j;
}

std::vector<FormNote> notes_for(const FamilySpec& s) {
  std::vector<FormNote> out;
  auto take = [&](const ParametricForm& f) {
    for (const auto& n : f.notes) {
      bool seen = false;
      for (const auto& o : out) seen = seen || o.id == n.id;
      if (!seen) out.push_back(n);
    }
  };
  try {
    take(expected_der_form(s));
    take(expected_locder_form(s));
  } catch (const UnsupportedFamily&) {
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

SamplingPlan plan_for(const OperatorSpace& der, const RunOptions& o) {
  return default_plan(der, o.seed, o.trials, o.window, o.strata_depth);
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "md" || s == "markdown") return Format::Markdown;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ParameterError("unknown format '" + s + "' (expected md, csv or json)");
}

std::pair<std::size_t, std::size_t> expected_dimensions(const FamilySpec& input) {
  const FamilySpec s = with_defaults(input);
  const auto n = static_cast<std::size_t>(s.n);
  switch (s.family) {
    case Family::S1:
      if (*s.beta == Rational(2)) return {n + 1, 2 * n};
      return {n, 2 * n - 1};
    case Family::S2:
    case Family::S4: return {n, 2 * n - 1};
    case Family::S3: return {n, 2 * n - 2};
    case Family::SN2: return {2, 2};
    case Family::Tau1:
    case Family::Tau2: return {3, 4};
    case Family::Tau3: return {3, 3};
    case Family::Tau2N2: return {2, 2};
    case Family::HeisSolv: return {2, 2};
    case Family::AbelianSolv: return {2 * n, 3 * n};
    case Family::Oscillator: return {2 * n + 2, 4 * n + 4};
    case Family::Sl2Module: return s.m == 2 ? std::pair<std::size_t, std::size_t>{2, 2} : std::pair<std::size_t, std::size_t>{1, 1};
    case Family::Schrodinger: return n == 2 ? std::pair<std::size_t, std::size_t>{2, 2} : std::pair<std::size_t, std::size_t>{1, 1};
    default: throw ParameterError(family_info(s.family).id + ": no published dimension row");
  }
}

TableRow compute_row(const FamilySpec& input, const RunOptions& options) {
  const FamilySpec s = with_defaults(input);
  if (s.family != Family::Sl2Module && s.n > kMaxTableN)
    throw ParameterError("n = " + std::to_string(s.n) + " exceeds the table bound " + std::to_string(kMaxTableN));
  TableRow row;
  row.spec = s;
  row.label = family_info(s.family).label;
  std::tie(row.der_expected, row.locder_expected) = expected_dimensions(s);

  const LieAlgebra a = build(s);
  const OperatorSpace der = derivation_space(a, options.delta);
  const auto plan = plan_for(der, options);
  const auto loc = sampled_locder_space(a, der, plan);
  row.der_computed = der.dim();
  row.locder_computed = loc.upper_space.dim();
  row.stabilized = loc.stabilized;
  row.match = row.der_computed == row.der_expected && row.locder_computed == row.locder_expected;

  SearchOptions so;
  so.seed = options.seed;
  so.random_budget = options.twolocal_budget;
  so.suggestions = suggested_tuples(s, a);
  row.twolocal = certify_two_local_rigidity(a, der, so).status;
  row.notes = notes_for(s);
  return row;
}

nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  nlohmann::json notes = nlohmann::json::array();
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.match;
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& n : r.notes) {
      ids.push_back(n.id);
      bool seen = false;
      for (const auto& e : notes) seen = seen || e["id"] == n.id;
      if (!seen) notes.push_back(to_json(n));
    }
    out.push_back({{"family", r.label},
                   {"params", spec_json(r.spec)},
                   {"der_dim_expected", r.der_expected},
                   {"der_dim_computed", r.der_computed},
                   {"locder_dim_expected", r.locder_expected},
                   {"locder_dim_computed", r.locder_computed},
                   {"stabilized", r.stabilized},
                   {"match", r.match},
                   {"twolocal_status", to_string(r.twolocal)},
                   {"notes", ids}});
  }
  return {{"rows", out}, {"all_match", all}, {"paper_notes", notes}};
}

std::string render_table(const std::vector<TableRow>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: os << table_to_json(rows).dump(2) << "\n"; break;
    case Format::Csv:
      os << "family,params,der_expected,der_computed,locder_expected,locder_computed,stabilized,match,twolocal\n";
      for (const auto& r : rows)
        os << csv_escape(r.label) << "," << csv_escape(params_text(r.spec)) << "," << r.der_expected << ","
           << r.der_computed << "," << r.locder_expected << "," << r.locder_computed << ","
           << (r.stabilized ? "yes" : "no") << "," << (r.match ? "yes" : "no") << "," << to_string(r.twolocal)
           << "\n";
      break;
    case Format::Markdown: {
      std::vector<FormNote> notes;
      os << "| family | params | Der expected | Der computed | LocDer expected | LocDer computed | match | 2-local |\n";
      os << "|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : rows) {
        std::string marks;
        for (const auto& n : r.notes) {
          std::size_t k = 0;
          while (k < notes.size() && notes[k].id != n.id) ++k;
          if (k == notes.size()) notes.push_back(n);
          marks += "[" + std::to_string(k + 1) + "]";
        }
        os << "| " << r.label << marks << " | " << params_text(r.spec) << " | " << r.der_expected << " | "
           << r.der_computed << " | " << r.locder_expected << " | " << r.locder_computed
           << (r.stabilized ? "" : " (not stabilized)") << " | " << (r.match ? "yes" : "**no**") << " | "
           << to_string(r.twolocal) << " |\n";
      }
      if (!notes.empty()) {
        os << "\n";
        for (std::size_t k = 0; k < notes.size(); ++k)
          os << "[" << k + 1 << "] `" << notes[k].id << "`: " << notes[k].message << "\n";
      }
      break;
    }
  }
  return os.str();
}

nlohmann::json locder_report(const std::string& family, const OperatorSpace& der, const SamplingPlan& plan,
                             const LocalSpaceResult& result, const std::optional<Mat>& witness) {
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& c : result.per_stratum_certified) strata.push_back({{"label", c.label}, {"der_contained", c.passed}});
  nlohmann::json history = nlohmann::json::array();
  for (auto h : result.dim_history) history.push_back(h);
  nlohmann::json out = {{"family", family},
                        {"der_dim", der.dim()},
                        {"locder_dim", result.upper_space.dim()},
                        {"stabilized", result.stabilized},
                        {"samples", result.samples_used},
                        {"strata", strata},
                        {"dim_history", history},
                        {"plan", to_json(plan)},
                        {"basis", to_json(result.upper_space)["basis"]}};
  if (witness) out["witness"] = matrix_to_json(*witness);
  return out;
}

AnalyzeResult analyze(const LieAlgebra& a, const RunOptions& options, const std::vector<TupleCandidate>& suggestions) {
  AnalyzeResult r;
  auto& rep = r.report;
  rep["algebra"] = a.name();
  rep["dim"] = a.dim();
  rep["seed"] = options.seed;

  if (auto v = check_jacobi(a)) {
    rep["jacobi"] = {{"ok", false},
                     {"triple", {v->triple[0], v->triple[1], v->triple[2]}},
                     {"residual", format_element(a, v->residual)}};
    r.exit_code = 2;
    return r;
  }
  rep["jacobi"] = {{"ok", true}};

  const OperatorSpace der = derivation_space(a, options.delta);
  rep["der"] = to_json(der);
  rep["der"]["trivial"] = options.delta == Rational(1, 2) && is_trivial_space(der);

  const auto plan = plan_for(der, options);
  const auto loc = sampled_locder_space(a, der, plan);
  rep["locder"] = locder_report(a.name(), der, plan, loc);

  SearchOptions so;
  so.seed = options.seed;
  so.random_budget = options.twolocal_budget;
  so.suggestions = suggestions;
  const auto two = certify_two_local_rigidity(a, der, so);
  rep["twolocal"] = to_json(two, a);

  if (!loc.stabilized || two.status != TwoLocalStatus::Pass) r.exit_code = 3;
  return r;
}

std::string render_analyze(const nlohmann::json& rep, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    os << rep.dump(2) << "\n";
    return os.str();
  }
  const bool jac = rep["jacobi"]["ok"].get<bool>();
  if (format == Format::Csv) {
    os << "section,key,value\n";
    os << "jacobi,ok," << (jac ? "yes" : "no") << "\n";
    if (!jac) return os.str();
    os << "der,dim," << rep["der"]["dim"] << "\n";
    os << "der,trivial," << (rep["der"]["trivial"].get<bool>() ? "yes" : "no") << "\n";
    os << "locder,dim," << rep["locder"]["locder_dim"] << "\n";
    os << "locder,stabilized," << (rep["locder"]["stabilized"].get<bool>() ? "yes" : "no") << "\n";
    os << "locder,samples," << rep["locder"]["samples"] << "\n";
    os << "twolocal,status," << rep["twolocal"]["status"].get<std::string>() << "\n";
    return os.str();
  }
  os << "# " << rep["algebra"].get<std::string>() << " (dim " << rep["dim"] << ", seed " << rep["seed"] << ")\n\n";
  os << "## Jacobi\n\n";
  if (!jac) {
    const auto& t = rep["jacobi"]["triple"];
    os << "violated at (" << t[0] << ", " << t[1] << ", " << t[2] << "), residual "
       << rep["jacobi"]["residual"].get<std::string>() << "\n";
    return os.str();
  }
  os << "ok\n\n## Der (delta = " << rep["der"]["delta"].get<std::string>() << ")\n\n";
  os << "dim " << rep["der"]["dim"] << (rep["der"]["trivial"].get<bool>() ? " (scalars only)" : "") << "\n\n";
  os << "## Local derivations (sampled upper bound)\n\n";
  os << "dim " << rep["locder"]["locder_dim"] << ", " << rep["locder"]["samples"] << " samples over "
     << rep["locder"]["strata"].size() << " strata, "
     << (rep["locder"]["stabilized"].get<bool>() ? "stabilized" : "NOT stabilized") << "\n\n";
  os << "## 2-local\n\n" << rep["twolocal"]["status"].get<std::string>();
  if (rep["twolocal"].contains("certificate")) {
    const auto& c = rep["twolocal"]["certificate"];
    os << " with tuple (";
    for (std::size_t i = 0; i < c["elements"].size(); ++i)
      os << (i ? ", " : "") << c["elements"][i].get<std::string>();
    os << "), stacked rank " << c["stacked_rank"] << (c["suggested"].get<bool>() ? ", suggested" : "");
  }
  os << "\n";
  return os.str();
}

WitnessResult find_witness(const FamilySpec& input, const RunOptions& options) {
  const FamilySpec s = with_defaults(input);
  const LieAlgebra a = build(s);
  const OperatorSpace der = derivation_space(a, Rational(1, 2));
  const auto plan = plan_for(der, options);
  const auto loc = sampled_locder_space(a, der, plan);
  WitnessResult w;
  w.der_dim = der.dim();
  w.locder_dim = loc.upper_space.dim();
  if (loc.upper_space.dim() == der.dim()) {
    w.refused = true;
    w.reason = "every sampled local 1/2-derivation is a 1/2-derivation (LocDer = Der, dim " +
               std::to_string(der.dim()) + "), so no witness exists";
    return w;
  }

  std::vector<Mat> candidates;
  const std::size_t d = a.dim();
  auto idx = [&](const std::string& nm) { return *a.index_of(nm); };
  if (s.family == Family::S1 && *s.beta == Rational(2)) {
    Mat m(d, d);
    for (int i = 2; i <= s.n; ++i) m(idx("e_" + std::to_string(i)), idx("e_" + std::to_string(i))) = 1;
    candidates.push_back(m);
  }
  if (s.family == Family::AbelianSolv) {
    Mat m(d, d);
    m(idx("e_1"), idx("e_1")) = 1;
    candidates.push_back(m);
  }
  for (const auto& b : loc.upper_space.basis()) candidates.push_back(b);

  for (const auto& c : candidates) {
    if (der.contains(c).member) continue;
    auto cert = stratified_certify(a, der, c, plan);
    if (!cert.pass) continue;
    w.delta_op = c;
    w.certificate = cert;
    return w;
  }
  w.refused = true;
  w.reason = "no candidate outside Der passed stratified certification";
  return w;
}

std::string format_operator(const LieAlgebra& a, const Mat& op) {
  std::ostringstream os;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const Vector img = op.column(c);
    if (is_zero(img)) continue;
    os << "D(" << a.basis_names()[c] << ") = " << format_element(a, img) << "\n";
  }
  std::string s = os.str();
  return s.empty() ? "0\n" : s;
}

nlohmann::json to_json(const WitnessResult& w, const LieAlgebra& a) {
  nlohmann::json out = {{"algebra", a.name()}, {"der_dim", w.der_dim}, {"locder_dim", w.locder_dim}};
  if (w.refused) {
    out["refused"] = true;
    out["reason"] = w.reason;
    return out;
  }
  out["refused"] = false;
  out["delta"] = matrix_to_json(*w.delta_op);
  out["certificate"] = {{"pass", w.certificate.pass},
                        {"checks", w.certificate.checks},
                        {"probabilistic", true}};
  out["non_membership"] = {{"member_of_der", false}, {"rank_with_der", w.der_dim + 1}};
  return out;
}

std::string render_witness(const WitnessResult& w, const LieAlgebra& a, Format format) {
  if (format == Format::Json) return to_json(w, a).dump(2) + "\n";
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "algebra,refused,der_dim,locder_dim,checks\n"
       << a.name() << "," << (w.refused ? "yes" : "no") << "," << w.der_dim << "," << w.locder_dim << ","
       << w.certificate.checks << "\n";
    return os.str();
  }
  os << "# Witness for " << a.name() << "\n\n";
  if (w.refused) {
    os << "refused: " << w.reason << "\n";
    return os.str();
  }
  os << "```\n" << format_operator(a, *w.delta_op) << "```\n\n";
  os << "- local: passed " << w.certificate.checks << " stratified membership checks (probabilistic evidence)\n";
  os << "- not a 1/2-derivation: outside Der (dim " << w.der_dim << "), rank rises to " << w.der_dim + 1 << "\n";
  return os.str();
}

}  // namespace halfder
