// halfder: command-line front end.
#include "halfder/catalog.hpp"
#include "halfder/errors.hpp"
#include "halfder/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace halfder;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kJacobi = 2;
constexpr int kInconclusive = 3;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& s, const char* flag) {
  try {
    auto colon = s.find(':');
    if (colon == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    Range r{std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    if (r.hi < r.lo) throw ParameterError(std::string(flag) + " range is empty: " + s);
    return r;
  } catch (const std::logic_error& ex) {
    if (dynamic_cast<const ParameterError*>(&ex)) throw;
    throw ParameterError(std::string(flag) + " expects an integer or lo:hi, got '" + s + "'");
  }
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

struct Inputs {
  std::string file;
  std::string family;
  std::string n;
  std::string m;
  std::string beta;
  std::string alphas;
  std::string lambdas;
};

void add_family_flags(CLI::App* sub, Inputs& in, bool with_file) {
  if (with_file) sub->add_option("file", in.file, "algebra JSON file");
  sub->add_option("--family", in.family, "catalog family id (see `list`)");
  sub->add_option("--n", in.n, "family size n");
  sub->add_option("--m", in.m, "module dimension parameter m (sl2module)");
  sub->add_option("--beta", in.beta, "beta for s1, alpha for tau1 (p/q)");
  sub->add_option("--alphas", in.alphas, "comma separated alpha list (s4, tau3)");
  sub->add_option("--lambdas", in.lambdas, "comma separated lambda list (oscillator)");
}

FamilySpec spec_from(const Inputs& in, int n, int m) {
  auto f = family_from_id(in.family);
  if (!f) throw ParameterError("unknown family '" + in.family + "'");
  FamilySpec s;
  s.family = *f;
  if (s.family == Family::Sl2Module)
    s.m = m;
  else
    s.n = n;
  if (!in.beta.empty()) s.beta = Rational::parse(in.beta);
  if (!in.alphas.empty()) s.alphas = parse_list(in.alphas);
  if (!in.lambdas.empty()) s.lambdas = parse_list(in.lambdas);
  return with_defaults(s);
}

FamilySpec single_spec(const Inputs& in) {
  const int n = in.n.empty() ? 0 : parse_range(in.n, "--n").lo;
  const int m = in.m.empty() ? 0 : parse_range(in.m, "--m").lo;
  return spec_from(in, n, m);
}

struct Loaded {
  LieAlgebra algebra;
  std::optional<FamilySpec> spec;
};

Loaded load(const Inputs& in) {
  if (!in.file.empty() && !in.family.empty()) throw ParameterError("give either an algebra file or --family, not both");
  if (!in.file.empty()) return {load_algebra(in.file), std::nullopt};
  if (in.family.empty()) throw ParameterError("an algebra file or --family is required");
  auto s = single_spec(in);
  return {build(s), s};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParameterError("cannot write '" + out + "'");
  f << text;
}

std::string operator_space_md(const LieAlgebra& a, const OperatorSpace& s) {
  std::ostringstream os;
  os << "# Der_" << s.delta() << "(" << a.name() << "): dim " << s.dim() << "\n";
  for (std::size_t k = 0; k < s.dim(); ++k) os << "\n## B" << k << "\n\n```\n" << format_operator(a, s.basis()[k]) << "```\n";
  return os.str();
}

// Default instance ranges for the table command.
struct TableFamily {
  std::string token;
  Family family;
  std::optional<Rational> beta;
  Range range;
};

std::vector<TableFamily> default_table_families() {
  return {{"s1", Family::S1, Rational(2), {4, 8}},
          {"s1(5/3)", Family::S1, Rational(5, 3), {4, 8}},
          {"s2", Family::S2, std::nullopt, {4, 8}},
          {"s3", Family::S3, std::nullopt, {4, 8}},
          {"s4", Family::S4, std::nullopt, {4, 8}},
          {"sn2", Family::SN2, std::nullopt, {4, 8}},
          {"tau1", Family::Tau1, std::nullopt, {4, 8}},
          {"tau2", Family::Tau2, std::nullopt, {4, 8}},
          {"tau3", Family::Tau3, std::nullopt, {4, 8}},
          {"tau2n2", Family::Tau2N2, std::nullopt, {4, 8}},
          {"heis", Family::HeisSolv, std::nullopt, {1, 3}},
          {"abelian", Family::AbelianSolv, std::nullopt, {2, 4}},
          {"oscillator", Family::Oscillator, std::nullopt, {1, 3}},
          {"sl2module", Family::Sl2Module, std::nullopt, {2, 5}},
          {"schrodinger", Family::Schrodinger, std::nullopt, {1, 3}}};
}

/// Accepts an id from `list`, optionally with a beta in parentheses: "s1(5/3)".
TableFamily table_family(const std::string& token) {
  for (const auto& t : default_table_families())
    if (t.token == token) return t;
  auto open = token.find('(');
  const std::string id = token.substr(0, open);
  auto f = family_from_id(id);
  if (!f) throw ParameterError("unknown family '" + token + "'");
  TableFamily out{token, *f, std::nullopt, {4, 8}};
  for (const auto& t : default_table_families())
    if (t.family == *f) out.range = t.range;
  if (open != std::string::npos) {
    if (token.back() != ')') throw ParameterError("malformed family token '" + token + "'");
    out.beta = Rational::parse(token.substr(open + 1, token.size() - open - 2));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation of delta-derivations, local and 2-local 1/2-derivations of Lie algebras"};
  app.require_subcommand(1);

  RunOptions run;
  std::string format = "md";
  std::string out;
  app.add_option("--seed", run.seed, "random seed for sampling")->capture_default_str();
  app.add_option("--format", format, "md, csv or json")->capture_default_str();
  app.add_option("--out", out, "write output to FILE instead of stdout");

  Inputs in;
  std::string delta = "1/2";
  std::size_t budget = 64;

  auto* list = app.add_subcommand("list", "list catalog families");
  auto* build_cmd = app.add_subcommand("build", "build a catalog algebra and print its JSON file");
  auto* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity");
  auto* der = app.add_subcommand("der", "compute Der_delta");
  auto* locder = app.add_subcommand("locder", "sampled space of local delta-derivations");
  auto* twolocal = app.add_subcommand("twolocal", "certify 2-local rigidity by a separating tuple");
  auto* analyze_cmd = app.add_subcommand("analyze", "Jacobi, Der, LocDer and 2-local report");
  auto* table = app.add_subcommand("table", "reproduce the dimension table");
  auto* witness = app.add_subcommand("witness", "a local 1/2-derivation that is not a 1/2-derivation");

  for (auto* sub : {list, build_cmd, jacobi, der, locder, twolocal, analyze_cmd, table, witness}) sub->fallthrough();
  add_family_flags(build_cmd, in, false);
  add_family_flags(witness, in, false);
  for (auto* sub : {jacobi, der, locder, twolocal, analyze_cmd}) add_family_flags(sub, in, true);
  for (auto* sub : {der, locder, analyze_cmd}) sub->add_option("--delta", delta, "delta as p/q")->capture_default_str();
  for (auto* sub : {locder, analyze_cmd, table, witness}) {
    sub->add_option("--trials", run.trials, "trials per stratum")->capture_default_str();
    sub->add_option("--strata-depth", run.strata_depth, "leading coordinates for zero patterns")->capture_default_str();
    sub->add_option("--window", run.window, "stabilization window")->capture_default_str();
  }
  for (auto* sub : {twolocal, analyze_cmd, table}) sub->add_option("--budget", budget, "random tuple budget")->capture_default_str();

  std::vector<std::string> families;
  table->add_option("--families", families, "family tokens, e.g. s1 s1(5/3) tau2")->delimiter(',');
  table->add_option("--n", in.n, "n or lo:hi");
  table->add_option("--m", in.m, "m or lo:hi (sl2module)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    const Format fmt = parse_format(format);
    run.delta = Rational::parse(delta);
    run.twolocal_budget = budget;

    if (list->parsed()) {
      std::ostringstream os;
      if (fmt == Format::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& f : list_families())
          j.push_back({{"id", f.id}, {"parameters", f.parameters}, {"label", f.label}});
        os << j.dump(2) << "\n";
      } else if (fmt == Format::Csv) {
        os << "id,parameters,label\n";
        for (const auto& f : list_families()) os << f.id << ",\"" << f.parameters << "\",\"" << f.label << "\"\n";
      } else {
        os << "| id | parameters | family |\n|---|---|---|\n";
        for (const auto& f : list_families()) os << "| " << f.id << " | " << f.parameters << " | " << f.label << " |\n";
      }
      emit(os.str(), out);
      return kOk;
    }

    if (build_cmd->parsed()) {
      if (in.family.empty()) throw ParameterError("--family is required");
      emit(serialize(build(single_spec(in))), out);
      return kOk;
    }

    if (jacobi->parsed()) {
      Loaded l = load(in);
      emit(fmt == Format::Json ? nlohmann::json{{"algebra", l.algebra.name()}, {"jacobi", "ok"}}.dump(2) + "\n"
                               : "Jacobi identity holds for " + l.algebra.name() + "\n",
           out);
      return kOk;
    }

    if (der->parsed()) {
      Loaded l = load(in);
      const auto s = derivation_space(l.algebra, run.delta);
      if (fmt == Format::Json)
        emit(to_json(s).dump(2) + "\n", out);
      else if (fmt == Format::Csv)
        emit("algebra,delta,dim\n" + l.algebra.name() + "," + s.delta().str() + "," + std::to_string(s.dim()) + "\n",
             out);
      else
        emit(operator_space_md(l.algebra, s), out);
      return kOk;
    }

    if (locder->parsed()) {
      Loaded l = load(in);
      const auto s = derivation_space(l.algebra, run.delta);
      const auto plan = default_plan(s, run.seed, run.trials, run.window, run.strata_depth);
      const auto res = sampled_locder_space(l.algebra, s, plan);
      const auto rep = locder_report(l.algebra.name(), s, plan, res);
      if (fmt == Format::Json) {
        emit(rep.dump(2) + "\n", out);
      } else if (fmt == Format::Csv) {
        emit("family,der_dim,locder_dim,stabilized,samples\n" + l.algebra.name() + "," + std::to_string(s.dim()) + "," +
                 std::to_string(res.upper_space.dim()) + "," + (res.stabilized ? "yes" : "no") + "," +
                 std::to_string(res.samples_used) + "\n",
             out);
      } else {
        std::ostringstream os;
        os << "# Local " << s.delta() << "-derivations of " << l.algebra.name() << "\n\n"
           << "- Der dim: " << s.dim() << "\n- sampled LocDer dim: " << res.upper_space.dim() << "\n- samples: "
           << res.samples_used << " over " << plan.strata.size() << " strata\n- stabilized: "
           << (res.stabilized ? "yes" : "no") << "\n";
        emit(os.str(), out);
      }
      return res.stabilized ? kOk : kInconclusive;
    }

    if (twolocal->parsed()) {
      Loaded l = load(in);
      const auto s = derivation_space(l.algebra, Rational(1, 2));
      SearchOptions so;
      so.seed = run.seed;
      so.random_budget = budget;
      if (l.spec) so.suggestions = suggested_tuples(*l.spec, l.algebra);
      const auto rep = certify_two_local_rigidity(l.algebra, s, so);
      if (fmt == Format::Json) {
        emit(to_json(rep, l.algebra).dump(2) + "\n", out);
      } else {
        std::ostringstream os;
        if (fmt == Format::Csv) {
          os << "algebra,der_dim,status,tuple\n" << l.algebra.name() << "," << s.dim() << "," << to_string(rep.status) << ",";
          if (rep.certificate) os << "\"" << rep.certificate->label << "\"";
          os << "\n";
        } else {
          os << "# 2-local 1/2-derivations of " << l.algebra.name() << "\n\n" << to_string(rep.status);
          if (rep.certificate) {
            os << ": separating tuple (";
            for (std::size_t i = 0; i < rep.certificate->tuple.size(); ++i)
              os << (i ? ", " : "") << format_element(l.algebra, rep.certificate->tuple[i]);
            os << "), stacked rank " << rep.certificate->stacked_rank << " = dim Der";
          }
          os << "\n";
        }
        emit(os.str(), out);
      }
      return rep.status == TwoLocalStatus::Pass ? kOk : kInconclusive;
    }

    if (analyze_cmd->parsed()) {
      Loaded l = load(in);
      std::vector<TupleCandidate> sugg;
      if (l.spec) sugg = suggested_tuples(*l.spec, l.algebra);
      const auto res = analyze(l.algebra, run, sugg);
      emit(render_analyze(res.report, fmt), out);
      return res.exit_code;
    }

    if (table->parsed()) {
      std::vector<TableFamily> selected;
      if (families.empty())
        selected = default_table_families();
      else
        for (const auto& t : families) selected.push_back(table_family(t));
      std::optional<Range> nr, mr;
      if (!in.n.empty()) nr = parse_range(in.n, "--n");
      if (!in.m.empty()) mr = parse_range(in.m, "--m");
      std::vector<TableRow> rows;
      for (const auto& t : selected) {
        Range r = t.range;
        if (t.family == Family::Sl2Module && mr) r = *mr;
        if (t.family != Family::Sl2Module && nr) r = *nr;
        if (r.hi > kMaxTableN)
          throw ParameterError("range exceeds the table bound " + std::to_string(kMaxTableN));
        for (int v = r.lo; v <= r.hi; ++v) {
          FamilySpec s;
          s.family = t.family;
          if (t.family == Family::Sl2Module)
            s.m = v;
          else
            s.n = v;
          s.beta = t.beta;
          rows.push_back(compute_row(s, run));
        }
      }
      emit(render_table(rows, fmt), out);
      for (const auto& r : rows)
        if (!r.match) return kInconclusive;
      return kOk;
    }

    if (witness->parsed()) {
      if (in.family.empty()) throw ParameterError("--family is required");
      const auto s = single_spec(in);
      const auto a = build(s);
      const auto w = find_witness(s, run);
      emit(render_witness(w, a, fmt), out);
      return w.refused ? kInvalid : kOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kJacobi;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
