#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halfder/catalog.hpp"
#include "halfder/errors.hpp"
#include "halfder/reports.hpp"

namespace py = pybind11;
using namespace halfder;

namespace {

Vector to_vector(const std::vector<std::string>& xs) {
  Vector v;
  v.reserve(xs.size());
  for (const auto& x : xs) v.push_back(Rational::parse(x));
  return v;
}

std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

FamilySpec make_spec(const std::string& family, int n, int m, const std::optional<std::string>& beta,
                     const std::vector<std::string>& alphas, const std::vector<std::string>& lambdas) {
  auto f = family_from_id(family);
  if (!f) throw ParameterError("unknown family '" + family + "'");
  FamilySpec s;
  s.family = *f;
  s.n = n;
  s.m = m;
  if (beta) s.beta = Rational::parse(*beta);
  s.alphas = to_vector(alphas);
  s.lambdas = to_vector(lambdas);
  return with_defaults(s);
}

RunOptions options(std::uint64_t seed, std::size_t trials, std::size_t window, std::size_t depth,
                   const std::string& delta) {
  RunOptions o;
  o.seed = seed;
  o.trials = trials;
  o.window = window;
  o.strata_depth = depth;
  o.delta = Rational::parse(delta);
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact delta-derivations, local and 2-local 1/2-derivations of Lie algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<FamilySpec>(m, "FamilySpec")
      .def_property_readonly("family", [](const FamilySpec& s) { return family_info(s.family).id; })
      .def_readonly("n", &FamilySpec::n)
      .def_readonly("m", &FamilySpec::m)
      .def("__repr__", [](const FamilySpec& s) { return "<FamilySpec " + describe(s) + ">"; })
      .def("describe", [](const FamilySpec& s) { return describe(s); });

  m.def("family_spec", &make_spec, py::arg("family"), py::arg("n") = 0, py::arg("m") = 0,
        py::arg("beta") = py::none(), py::arg("alphas") = std::vector<std::string>{},
        py::arg("lambdas") = std::vector<std::string>{});

  m.def("list_families", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& f : list_families()) out.emplace_back(f.id, f.parameters, f.label);
    return out;
  });

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_property_readonly("name", &LieAlgebra::name)
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis", &LieAlgebra::basis_names)
      .def("index_of",
           [](const LieAlgebra& a, const std::string& nm) {
             auto i = a.index_of(nm);
             if (!i) throw py::key_error(nm);
             return *i;
           })
      .def("bracket",
           [](const LieAlgebra& a, const std::vector<std::string>& u, const std::vector<std::string>& v) {
             return to_strings(a.bracket(to_vector(u), to_vector(v)));
           })
      .def("jacobi_ok", [](const LieAlgebra& a) { return !check_jacobi(a).has_value(); })
      .def("to_json", [](const LieAlgebra& a) { return serialize(a); })
      .def_static("from_json", [](const std::string& text) { return deserialize(text); })
      .def("__repr__", [](const LieAlgebra& a) { return "<LieAlgebra " + a.name() + " dim " + std::to_string(a.dim()) + ">"; });

  m.def("build", &build, py::arg("spec"));

  m.def(
      "derivations",
      [](const LieAlgebra& a, const std::string& delta) { return to_json(derivation_space(a, Rational::parse(delta))).dump(); },
      py::arg("algebra"), py::arg("delta") = "1/2");

  m.def(
      "analyze",
      [](const LieAlgebra& a, std::uint64_t seed, std::size_t trials, std::size_t window, std::size_t depth,
         const std::string& delta, const std::optional<FamilySpec>& spec) {
        std::vector<TupleCandidate> sugg;
        if (spec) sugg = suggested_tuples(*spec, a);
        const auto r = analyze(a, options(seed, trials, window, depth, delta), sugg);
        return std::make_pair(r.report.dump(), r.exit_code);
      },
      py::arg("algebra"), py::arg("seed") = 2024, py::arg("trials") = 8, py::arg("window") = 3,
      py::arg("strata_depth") = 3, py::arg("delta") = "1/2", py::arg("spec") = py::none());

  m.def(
      "table_row",
      [](const FamilySpec& s, std::uint64_t seed) {
        RunOptions o;
        o.seed = seed;
        return table_to_json({compute_row(s, o)})["rows"][0].dump();
      },
      py::arg("spec"), py::arg("seed") = 2024);

  m.def(
      "witness",
      [](const FamilySpec& s, std::uint64_t seed) {
        RunOptions o;
        o.seed = seed;
        return to_json(find_witness(s, o), build(s)).dump();
      },
      py::arg("spec"), py::arg("seed") = 2024);

  m.def(
      "expected_dimensions", [](const FamilySpec& s) { return expected_dimensions(s); }, py::arg("spec"));
}
