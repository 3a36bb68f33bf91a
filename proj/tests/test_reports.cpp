#include "halfder/errors.hpp"
#include "halfder/reports.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace halfder;
using namespace testing_helpers;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("md") == Format::Markdown);
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), ParameterError);
}

TEST_CASE("published dimensions") {
  CHECK(expected_dimensions(s1(5, Rational(2))) == std::pair<std::size_t, std::size_t>{6, 10});
  CHECK(expected_dimensions(spec(Family::S3, 6)) == std::pair<std::size_t, std::size_t>{6, 10});
  CHECK(expected_dimensions(spec(Family::Tau1, 4)) == std::pair<std::size_t, std::size_t>{3, 4});
  CHECK(expected_dimensions(spec(Family::AbelianSolv, 3)) == std::pair<std::size_t, std::size_t>{6, 9});
  CHECK(expected_dimensions(spec(Family::Oscillator, 2)) == std::pair<std::size_t, std::size_t>{6, 12});
  CHECK(expected_dimensions(sl2(2)) == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(expected_dimensions(sl2(5)) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS_AS(expected_dimensions(spec(Family::NFiliform, 4)), ParameterError);
}

TEST_CASE("table rows") {
  RunOptions o;
  const auto good = compute_row(spec(Family::SN2, 5), o);
  CHECK(good.match);
  CHECK(good.stabilized);
  CHECK(good.twolocal == TwoLocalStatus::Pass);
  CHECK(good.notes.size() == 1);

  const auto bad = compute_row(s1(4, Rational(2)), o);
  CHECK_FALSE(bad.match);
  CHECK(bad.der_computed == 7);
  CHECK(bad.der_expected == 5);

  CHECK_THROWS_AS(compute_row(spec(Family::Tau1, kMaxTableN + 1), o), ParameterError);
}

TEST_CASE("table rendering") {
  RunOptions o;
  const std::vector<TableRow> rows{compute_row(spec(Family::SN2, 5), o), compute_row(spec(Family::Tau3, 4), o),
                                   compute_row(s1(4, Rational(2)), o)};
  const auto md = render_table(rows, Format::Markdown);
  CHECK(md.find("| family |") == 0);
  CHECK(md.find("[1]") != std::string::npos);
  CHECK(md.find("**no**") != std::string::npos);
  CHECK(md.find("`sn2_e1_omitted`") != std::string::npos);

  const auto csv = render_table(rows, Format::Csv);
  CHECK(count_lines(csv) == 4);
  CHECK(csv.find("family,params,") == 0);

  const auto j = nlohmann::json::parse(render_table(rows, Format::Json));
  CHECK(j["rows"].size() == 3);
  CHECK(j["all_match"] == false);
  CHECK(j["rows"][0]["match"] == true);
  CHECK(j["rows"][1]["locder_dim_computed"] == 3);
  CHECK_FALSE(j["paper_notes"].empty());
}

TEST_CASE("analyze") {
  const auto a = build(spec(Family::SN2, 5));
  const auto r = analyze(a, RunOptions{}, suggested_tuples(spec(Family::SN2, 5), a));
  CHECK(r.exit_code == 0);
  CHECK(r.report["der"]["dim"] == 2);
  CHECK(r.report["locder"]["locder_dim"] == 2);
  CHECK(r.report["twolocal"]["status"] == "PASS");
  CHECK(r.report["twolocal"]["certificate"]["suggested"] == true);
  const auto md = render_analyze(r.report, Format::Markdown);
  CHECK(md.find("PASS") != std::string::npos);
  CHECK(nlohmann::json::parse(render_analyze(r.report, Format::Json)) == r.report);

  const auto trivial = analyze(build(spec(Family::Schrodinger, 3)), RunOptions{});
  CHECK(trivial.report["der"]["trivial"] == true);
  CHECK(trivial.exit_code == 0);
}

TEST_CASE("analyze stops at a Jacobi violation") {
  auto doc = to_json(build(spec(Family::S2, 5)));
  for (auto& b : doc["brackets"])
    if (b["i"] == 0 && b["j"] == 2) b["terms"]["2"] = "1";
  std::vector<BracketEntry> entries;
  for (const auto& b : doc["brackets"]) {
    BracketEntry e{b["i"].get<std::size_t>(), b["j"].get<std::size_t>(), {}};
    for (auto it = b["terms"].begin(); it != b["terms"].end(); ++it)
      e.terms[std::stoul(it.key())] = Rational::parse(it.value().get<std::string>());
    entries.push_back(e);
  }
  const LieAlgebra broken("broken", doc["basis"].get<std::vector<std::string>>(), entries);
  const auto r = analyze(broken, RunOptions{});
  CHECK(r.exit_code == 2);
  CHECK(r.report["jacobi"]["ok"] == false);
  CHECK_FALSE(r.report.contains("der"));
}

TEST_CASE("witness search") {
  RunOptions o;
  const auto w = find_witness(s1(5, Rational(2)), o);
  REQUIRE_FALSE(w.refused);
  REQUIRE(w.delta_op);
  CHECK(w.certificate.pass);
  CHECK(w.der_dim == 6);
  CHECK(w.locder_dim == 10);
  const auto a = build(s1(5, Rational(2)));
  CHECK_FALSE(derivation_space(a, Rational(1, 2)).contains(*w.delta_op).member);
  CHECK(render_witness(w, a, Format::Markdown).find("D(e_2) = e_2") != std::string::npos);
  CHECK(to_json(w, a)["refused"] == false);

  const auto ab = find_witness(spec(Family::AbelianSolv, 2), o);
  REQUIRE_FALSE(ab.refused);
  CHECK(ab.certificate.pass);

  const auto r = find_witness(spec(Family::SN2, 5), o);
  CHECK(r.refused);
  CHECK_FALSE(r.delta_op);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("operator formatting") {
  const auto a = build(spec(Family::SN2, 4));
  const auto text = format_operator(a, Mat::identity(a.dim()));
  CHECK(text.find("D(x_1) = x_1") != std::string::npos);
  CHECK(count_lines(text) == a.dim());
}
