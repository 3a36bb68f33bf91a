#pragma once

#include "halfder/catalog.hpp"
#include "halfder/forms.hpp"
#include "halfder/locder.hpp"
#include "halfder/twolocal.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace halfder {

enum class Format { Markdown, Csv, Json };

Format parse_format(const std::string& s);

/// Options shared by every analysis command.
struct RunOptions {
  std::uint64_t seed = 2024;
  std::size_t trials = 8;
  std::size_t window = 3;
  std::size_t strata_depth = 3;
  Rational delta{1, 2};
  std::size_t twolocal_budget = 64;
};

struct TableRow {
  std::string label;
  FamilySpec spec;
  std::size_t der_expected = 0;
  std::size_t der_computed = 0;
  std::size_t locder_expected = 0;
  std::size_t locder_computed = 0;
  bool stabilized = false;
  bool match = false;
  TwoLocalStatus twolocal = TwoLocalStatus::Inconclusive;
  std::vector<FormNote> notes;
};

/// Published (Der, LocDer) dimensions for the family instance. Throws
/// ParameterError for families without a published row.
std::pair<std::size_t, std::size_t> expected_dimensions(const FamilySpec& spec);

TableRow compute_row(const FamilySpec& spec, const RunOptions& options);

/// Largest n accepted by the table command.
inline constexpr int kMaxTableN = 12;

std::string render_table(const std::vector<TableRow>& rows, Format format);
nlohmann::json table_to_json(const std::vector<TableRow>& rows);

/// The family-level report of a local-derivation run.
nlohmann::json locder_report(const std::string& family, const OperatorSpace& der, const SamplingPlan& plan,
                             const LocalSpaceResult& result, const std::optional<Mat>& witness = std::nullopt);

struct AnalyzeResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 2 Jacobi violation, 3 non-stabilized or inconclusive
};

/// Jacobi, then Der_delta, then sampled LocDer, then 2-local rigidity.
AnalyzeResult analyze(const LieAlgebra& a, const RunOptions& options,
                      const std::vector<TupleCandidate>& suggestions = {});
std::string render_analyze(const nlohmann::json& report, Format format);

struct WitnessResult {
  bool refused = false;
  std::string reason;
  std::optional<Mat> delta_op;
  LocalCertificate certificate;
  std::size_t der_dim = 0;
  std::size_t locder_dim = 0;
};

/// A local 1/2-derivation that is not a 1/2-derivation, re-checked before it
/// is returned. Refuses when the sampled local space equals Der.
WitnessResult find_witness(const FamilySpec& spec, const RunOptions& options);
nlohmann::json to_json(const WitnessResult& w, const LieAlgebra& a);
std::string render_witness(const WitnessResult& w, const LieAlgebra& a, Format format);

/// Human-readable operator: one line "D(b) = ..." per basis element.
std::string format_operator(const LieAlgebra& a, const Mat& op);

}  // namespace halfder
