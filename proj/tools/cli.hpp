#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfa/bodies.hpp"
#include "sfa/chart_body.hpp"
#include "sfa/report.hpp"
#include "sfa/scan.hpp"

namespace sfa::cli {

using nlohmann::json;

enum class Command { Compute, Verify, Scan, Sweep };
enum class Format { Json, Csv };

inline constexpr int kSchemaVersion = 1;

// Exit codes: 0 success, 1 a verdict is violated, 2 invalid input or failed evaluation.
inline constexpr int kExitViolated = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  Command command = Command::Compute;
  std::string body;    // body spec path (compute, verify, sweep)
  std::string family;  // family spec path (scan)
  int resolution = 2;
  double tol = 1e-8;   // target tolerance of the iterative solvers
  std::optional<std::uint64_t> seed;  // overrides the family seed when set
  std::string output;  // empty writes to stdout
  Format format = Format::Json;
  int threads = 1;
  std::size_t count = 10;
  std::size_t checkpoint = 100;  // scan records between checkpoint writes
  std::vector<std::string> suites = {"all"};
  std::vector<std::string> targets = {"floating_area", "entropy", "strong_bound"};
  std::vector<double> p_values = {0.0, 0.5, 1.0, 2.0, 4.0};
  std::vector<double> lambdas = {1e-1, 1e-2, 1e-3, 1e-4};
};

json to_json(const RunConfig& c);
RunConfig config_from_json(const json& j);

// Body spec: {dim, lambda, chart_center: "origin" | [..], rep: {kind, ...}}
// or a family member: {family: {...}, index}.
ChartBody body_from_json(const json& j);
json body_to_json(const ChartBody& body);
FamilySpec family_from_json(const json& j);
json family_to_json(const FamilySpec& f);

json value_to_json(const FunctionalValue& v);
json report_to_json(const InequalityReport& r);
json record_to_json(const ScanRecord& r);

// Fixed CSV columns: name, lhs, lhs_err, rhs, rhs_err, margin, verdict, flags.
std::string csv_header();
std::string csv_row(const InequalityReport& r);

struct NamedValue {
  std::string name;
  FunctionalValue value;
};

std::vector<NamedValue> compute_values(const ChartBody& body, const RunConfig& config);
std::vector<InequalityReport> verify_reports(const ChartBody& body, const RunConfig& config);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int main_entry(int argc, char** argv);

}  // namespace sfa::cli
