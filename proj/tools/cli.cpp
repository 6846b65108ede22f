#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include "sfa/analysis.hpp"
#include "sfa/centers.hpp"
#include "sfa/functionals.hpp"
#include "sfa/inequalities.hpp"
#include "sfa/stability.hpp"

namespace sfa::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void bad(const std::string& field, const std::string& what) { throw InputError(field + ": " + what); }

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double read_number(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  bad(field, "expected a number");
}

template <class T>
T get(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) bad(ctx + "." + key, "missing");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(ctx + "." + key, "wrong type");
  }
}

template <class T>
T get_or(const json& j, const std::string& key, T fallback, const std::string& ctx) {
  return j.contains(key) ? get<T>(j, key, ctx) : fallback;
}

double num(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) bad(ctx + "." + key, "missing");
  return read_number(j.at(key), ctx + "." + key);
}

double num_or(const json& j, const std::string& key, double fallback, const std::string& ctx) {
  return j.contains(key) ? read_number(j.at(key), ctx + "." + key) : fallback;
}

std::vector<double> numbers(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_number(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json numbers_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

Eigen::VectorXd vector_of(const json& j, const std::string& field) {
  const std::vector<double> v = numbers(j, field);
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Compute: return "compute";
    case Command::Verify: return "verify";
    case Command::Scan: return "scan";
    case Command::Sweep: return "sweep";
  }
  return "compute";
}

Command parse_command(const std::string& s) {
  for (Command c : {Command::Compute, Command::Verify, Command::Scan, Command::Sweep})
    if (s == command_name(c)) return c;
  bad("command", "unknown command '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  bad("format", "expected json or csv");
}

json load_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) bad(field, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(field, std::string("parse error: ") + e.what());
  }
}

std::string p_label(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream o;
  o << p;
  return o.str();
}

std::string csv_number(double x) {
  std::ostringstream o;
  o << std::setprecision(17) << x;
  return o.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string flags_text(const std::map<std::string, bool>& flags) {
  std::string out;
  for (const auto& [k, v] : flags) {
    if (!out.empty()) out += ';';
    out += k + "=" + (v ? "true" : "false");
  }
  return out;
}

std::vector<double> with_infinity(std::vector<double> p) {
  if (std::find(p.begin(), p.end(), kInf) == p.end()) p.push_back(kInf);
  return p;
}

bool wants(const RunConfig& c, const std::string& suite) {
  for (const auto& s : c.suites)
    if (s == suite || (s == "all" && suite != "conjectures")) return true;
  return false;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) bad("output", "cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

FunctionalValue scalar(double v, const std::string& formula) {
  FunctionalValue f;
  f.value = v;
  f.formula = formula;
  return f;
}

}  // namespace

json to_json(const RunConfig& c) {
  json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command_name(c.command);
  j["body"] = c.body;
  j["family"] = c.family;
  j["resolution"] = c.resolution;
  j["tol"] = c.tol;
  j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  j["output"] = c.output;
  j["format"] = c.format == Format::Json ? "json" : "csv";
  j["threads"] = c.threads;
  j["count"] = c.count;
  j["checkpoint"] = c.checkpoint;
  j["suites"] = c.suites;
  j["targets"] = c.targets;
  j["p_values"] = numbers_json(c.p_values);
  j["lambdas"] = numbers_json(c.lambdas);
  return j;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) bad("config", "expected an object");
  RunConfig c;
  const std::string ctx = "config";
  if (j.contains("command")) c.command = parse_command(get<std::string>(j, "command", ctx));
  c.body = get_or<std::string>(j, "body", c.body, ctx);
  c.family = get_or<std::string>(j, "family", c.family, ctx);
  c.resolution = get_or<int>(j, "resolution", c.resolution, ctx);
  c.tol = num_or(j, "tol", c.tol, ctx);
  if (j.contains("seed") && !j.at("seed").is_null()) c.seed = get<std::uint64_t>(j, "seed", ctx);
  c.output = get_or<std::string>(j, "output", c.output, ctx);
  if (j.contains("format")) c.format = parse_format(get<std::string>(j, "format", ctx));
  c.threads = get_or<int>(j, "threads", c.threads, ctx);
  c.count = get_or<std::size_t>(j, "count", c.count, ctx);
  c.checkpoint = get_or<std::size_t>(j, "checkpoint", c.checkpoint, ctx);
  c.suites = get_or<std::vector<std::string>>(j, "suites", c.suites, ctx);
  c.targets = get_or<std::vector<std::string>>(j, "targets", c.targets, ctx);
  if (j.contains("p_values")) c.p_values = numbers(j.at("p_values"), "config.p_values");
  if (j.contains("lambdas")) c.lambdas = numbers(j.at("lambdas"), "config.lambdas");
  if (c.resolution < 1) bad("config.resolution", "must be at least 1");
  if (!(c.tol > 0.0)) bad("config.tol", "must be positive");
  if (c.threads < 1) bad("config.threads", "must be at least 1");
  return c;
}

FamilySpec family_from_json(const json& j) {
  const std::string ctx = "family";
  if (!j.is_object()) bad(ctx, "expected an object");
  FamilySpec f;
  f.kind = parse_family(get<std::string>(j, "kind", ctx));
  f.d = get_or<int>(j, "d", f.d, ctx);
  f.lambda = num_or(j, "lambda", f.lambda, ctx);
  f.seed = get_or<std::uint64_t>(j, "seed", f.seed, ctx);
  f.alpha_min = num_or(j, "alpha_min", f.alpha_min, ctx);
  f.alpha_max = num_or(j, "alpha_max", f.alpha_max, ctx);
  f.amplitude = num_or(j, "amplitude", f.amplitude, ctx);
  f.bandwidth = get_or<int>(j, "bandwidth", f.bandwidth, ctx);
  f.ecc_min = num_or(j, "ecc_min", f.ecc_min, ctx);
  f.ecc_max = num_or(j, "ecc_max", f.ecc_max, ctx);
  f.offset = num_or(j, "offset", f.offset, ctx);
  f.sides = get_or<int>(j, "sides", f.sides, ctx);
  f.rounding = num_or(j, "rounding", f.rounding, ctx);
  f.max_retries = get_or<int>(j, "max_retries", f.max_retries, ctx);
  return f;
}

json family_to_json(const FamilySpec& f) {
  return json{{"kind", family_name(f.kind)}, {"d", f.d},           {"lambda", f.lambda},     {"seed", f.seed},
              {"alpha_min", f.alpha_min},  {"alpha_max", f.alpha_max}, {"amplitude", f.amplitude}, {"bandwidth", f.bandwidth},
              {"ecc_min", f.ecc_min},      {"ecc_max", f.ecc_max},     {"offset", f.offset},       {"sides", f.sides},
              {"rounding", f.rounding},    {"max_retries", f.max_retries}};
}

static ChartBody parse_body(const json& j) {
  if (!j.is_object()) bad("body", "expected an object");
  if (j.contains("family")) return generate(family_from_json(j.at("family")), get_or<std::uint64_t>(j, "index", 0, "body"));
  const int d = get<int>(j, "dim", "body");
  const double lambda = num_or(j, "lambda", 1.0, "body");
  const SpaceForm space{d, lambda};
  try {
    space.validate();
  } catch (const GeometryError& e) {
    bad("body.dim/lambda", e.what());
  }
  Chart chart = Chart::standard(space);
  if (j.contains("chart_center") && !(j.at("chart_center").is_string() && j.at("chart_center").get<std::string>() == "origin"))
    chart = Chart::at(space, vector_of(j.at("chart_center"), "body.chart_center"));
  if (!j.contains("rep")) bad("body.rep", "missing");
  const json& r = j.at("rep");
  const std::string kind = get<std::string>(r, "kind", "body.rep");
  const std::string ctx = "body.rep";
  if (kind == "cap") {
    const double alpha = num(r, "alpha", ctx);
    Eigen::VectorXd center = chart.center();
    if (r.contains("center") && !(r.at("center").is_string() && r.at("center").get<std::string>() == "origin"))
      center = vector_of(r.at("center"), ctx + ".center");
    return ChartBody::cap(chart, center, alpha);
  }
  if (kind == "ellipsoid") {
    EllipsoidRep e;
    const json& a = r.at("A");
    if (!a.is_array() || static_cast<int>(a.size()) != d) bad(ctx + ".A", "expected a d x d array");
    e.A.resize(d, d);
    for (int i = 0; i < d; ++i) e.A.row(i) = vector_of(a[i], ctx + ".A").transpose();
    e.c = r.contains("c") ? vector_of(r.at("c"), ctx + ".c") : Eigen::VectorXd::Zero(d);
    return ChartBody(chart, e);
  }
  if (kind == "axisymmetric") return ChartBody(chart, AxisymmetricRep{numbers(r.at("a"), ctx + ".a")});
  if (kind == "fourier2d") {
    Fourier2DRep f{numbers(r.at("a"), ctx + ".a"), r.contains("b") ? numbers(r.at("b"), ctx + ".b") : std::vector<double>{}};
    f.b.resize(f.a.size(), 0.0);
    return ChartBody(chart, f);
  }
  if (kind == "harmonic3d") return ChartBody(chart, Harmonic3DRep{get<int>(r, "L", ctx), numbers(r.at("c"), ctx + ".c")});
  bad(ctx + ".kind", "unknown representation '" + kind + "'");
}

ChartBody body_from_json(const json& j) {
  try {
    return parse_body(j);
  } catch (const GeometryError& e) {
    const std::string field = j.is_object() && j.contains("family") ? "body.family" : "body.rep";
    throw GeometryError(e.kind(), field + ": " + e.what(), e.residual());
  }
}

json body_to_json(const ChartBody& body) {
  json j;
  j["dim"] = body.dim();
  j["lambda"] = body.lambda();
  j["chart_center"] = vector_json(body.chart().center());
  json r;
  std::visit(
      [&](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, CapRep>) {
          r = {{"kind", "cap"}, {"alpha", rep.alpha}, {"center", vector_json(rep.center)}};
        } else if constexpr (std::is_same_v<T, EllipsoidRep>) {
          json a = json::array();
          for (Eigen::Index i = 0; i < rep.A.rows(); ++i) a.push_back(vector_json(rep.A.row(i).transpose()));
          r = {{"kind", "ellipsoid"}, {"A", a}, {"c", vector_json(rep.c)}};
        } else if constexpr (std::is_same_v<T, AxisymmetricRep>) {
          r = {{"kind", "axisymmetric"}, {"a", rep.a}};
        } else if constexpr (std::is_same_v<T, Fourier2DRep>) {
          r = {{"kind", "fourier2d"}, {"a", rep.a}, {"b", rep.b}};
        } else {
          r = {{"kind", "harmonic3d"}, {"L", rep.L}, {"c", rep.c}};
        }
      },
      body.rep());
  j["rep"] = r;
  return j;
}

json value_to_json(const FunctionalValue& v) {
  return json{{"value", number(v.value)}, {"abs_error", number(v.abs_error)}, {"formula", v.formula}, {"rule", v.rule_id}};
}

json report_to_json(const InequalityReport& r) {
  json flags = json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  const char* kind = r.kind == ReportKind::Equality ? "equality" : r.kind == ReportKind::Implication ? "implication" : "inequality";
  return json{{"name", r.name},
              {"kind", kind},
              {"lhs", value_to_json(r.lhs)},
              {"rhs", value_to_json(r.rhs)},
              {"margin", number(r.margin)},
              {"tolerance", number(r.tolerance)},
              {"flags", flags},
              {"verdict", verdict_name(r.verdict)}};
}

json record_to_json(const ScanRecord& r) {
  json reports = json::array();
  for (const auto& x : r.reports) reports.push_back(report_to_json(x));
  json flags = json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  json j{{"schema", kSchemaVersion}, {"index", r.index},       {"seed", r.seed},   {"body", r.body},
         {"reports", reports},       {"min_margin", number(r.min_margin)}, {"min_name", r.min_name}, {"flags", flags},
         {"persistent_violations", r.persistent_violations}};
  if (r.reverified) j["reverified_margin"] = number(r.reverified_margin);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string csv_header() { return "name,lhs,lhs_err,rhs,rhs_err,margin,verdict,flags"; }

std::string csv_row(const InequalityReport& r) {
  return csv_escape(r.name) + "," + csv_number(r.lhs.value) + "," + csv_number(r.lhs.abs_error) + "," + csv_number(r.rhs.value) +
         "," + csv_number(r.rhs.abs_error) + "," + csv_number(r.margin) + "," + verdict_name(r.verdict) + "," +
         csv_escape(flags_text(r.flags));
}

std::vector<NamedValue> compute_values(const ChartBody& body, const RunConfig& config) {
  const BodyAnalysis a(body, config.resolution);
  const int d = body.dim();
  const double lambda = body.lambda();
  std::vector<NamedValue> out;
  out.push_back({"vol", lambda > 0.0 ? volume_lambda(a) : volume_euclidean(a)});
  out.push_back({"P", perimeter_lambda(a)});
  if (lambda > 0.0) {
    out.push_back({"vol*", dual_volume(a)});
    out.push_back({"P*", dual_perimeter(a)});
    const Radii r = radii(a);
    out.push_back({"alpha_K", r.alpha_K});
    out.push_back({"alpha_P", r.alpha_P});
  } else {
    out.push_back({"vol polar", polar_volume_euclidean(a)});
  }
  for (double p : with_infinity(config.p_values)) out.push_back({"Omega_" + p_label(p), omega_p_lambda(a, p)});
  for (double p : config.p_values) out.push_back({"as_" + p_label(p), as_p_lambda_o(a, p)});
  out.push_back({"E_C", entropy_c_lambda(a)});
  out.push_back({"E_PW", entropy_pw_lambda(a)});
  if (lambda == 1.0) {
    const EntropyBundle e = entropy_spherical(a);
    out.push_back({"E^s", e.E_s});
    out.push_back({"entropy power", e.entropy_power});
    out.push_back({"D_KL", e.kl});
    out.push_back({"entropy power (probe limit)", e.probe_limit});
  }
  if (lambda == 0.0) {
    const EuclideanEntropies e = euclid_entropies(a);
    out.push_back({"E_h", e.E_h});
  }
  if (lambda > 0.0) {
    CenterOptions co;
    co.tol = config.tol;
    co.level = config.resolution;
    co.build_recentered = false;
    const CenterResult c = ghs_center(body, co);
    out.push_back({"GHS residual", scalar(c.residual, c.converged ? "converged" : "not converged")});
  }
  if (lambda == 1.0) {
    StabilityOptions so;
    so.level = config.resolution;
    so.center.tol = config.tol;
    const StabilityBundle b = stability_quantities(body, so);
    out.push_back({"stability: alpha_K", b.alpha_K});
    out.push_back({"stability: Delta_2", b.delta2});
    out.push_back({"stability: Delta", b.delta_sym});
    out.push_back({"stability: beta", scalar(b.beta, "closed form")});
    out.push_back({"stability: gamma", scalar(b.gamma, "closed form")});
    out.push_back({"stability: tau", scalar(b.tau, "closed form")});
    out.push_back({"stability: projected volume", b.projected_volume});
    out.push_back({"stability: dual volume deficit", b.deficit_dual_volume});
    out.push_back({"stability: floating area deficit", b.deficit_floating});
    out.push_back({"stability: max chart radius", scalar(b.max_chart_radius, "rule nodes")});
    out.push_back({"stability: slack ratio", scalar(stability_slack_ratio(b, d), "Delta / (omega gamma sqrt(eps))")});
  }
  return out;
}

std::vector<InequalityReport> verify_reports(const ChartBody& body, const RunConfig& config) {
  std::vector<InequalityReport> out;
  auto append = [&](std::vector<InequalityReport> r) { out.insert(out.end(), r.begin(), r.end()); };
  const double lambda = body.lambda();
  if (lambda == 0.0) {
    if (wants(config, "euclidean")) append(verify_euclidean_suite(body, config.resolution));
    if (wants(config, "conjectures")) append(euclidean_conjecture_reports(body, config.resolution));
    return out;
  }
  SuiteOptions o;
  o.level = config.resolution;
  o.center.tol = config.tol;
  std::vector<double> grid = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 16.0};
  for (double p : config.p_values)
    if (std::find(grid.begin(), grid.end(), p) == grid.end() && std::isfinite(p)) grid.push_back(p);
  std::sort(grid.begin(), grid.end());
  o.p_grid = grid;
  const SphericalSummary s = summarize(body, o);
  if (lambda == 1.0 && wants(config, "core")) append(core_reports(s));
  if (wants(config, "floating")) append(floating_reports(s, grid));
  if (lambda == 1.0 && wants(config, "entropy")) append(entropy_reports(s, grid));
  if (lambda == 1.0 && wants(config, "stability")) {
    StabilityOptions so;
    so.level = config.resolution;
    so.center.tol = config.tol;
    const StabilityBundle b = stability_quantities(body, so);
    const auto [dual, floating] = check_stability_theorems(b, body.dim());
    out.push_back(check_lemma_hr(b, body.dim()));
    out.push_back(check_deviation_chain(b, body.dim()));
    out.push_back(dual);
    out.push_back(floating);
  }
  if (lambda == 1.0 && wants(config, "conjectures")) append(conjecture_reports(s, config.p_values));
  return out;
}

namespace {

int run_compute(const RunConfig& c, std::ostream& out) {
  const ChartBody body = body_from_json(load_file(c.body, "body"));
  const std::vector<NamedValue> values = compute_values(body, c);
  Output o(c.output, out);
  if (c.format == Format::Csv) {
    o.stream() << "name,value,abs_error,formula\n";
    for (const auto& v : values)
      o.stream() << csv_escape(v.name) << "," << csv_number(v.value.value) << "," << csv_number(v.value.abs_error) << ","
                 << csv_escape(v.value.formula) << "\n";
  } else {
    json arr = json::array();
    for (const auto& v : values) {
      json e = value_to_json(v.value);
      e["name"] = v.name;
      arr.push_back(e);
    }
    o.stream() << json{{"schema", kSchemaVersion}, {"body", body_to_json(body)}, {"values", arr}}.dump(2) << "\n";
  }
  return 0;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const ChartBody body = body_from_json(load_file(c.body, "body"));
  const std::vector<InequalityReport> reports = verify_reports(body, c);
  Output o(c.output, out);
  if (c.format == Format::Csv) {
    o.stream() << csv_header() << "\n";
    for (const auto& r : reports) o.stream() << csv_row(r) << "\n";
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    o.stream() << json{{"schema", kSchemaVersion}, {"reports", arr}}.dump(2) << "\n";
  }
  for (const auto& r : reports)
    if (r.verdict == Verdict::Violated) return kExitViolated;
  return 0;
}

int run_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  ScanConfig sc;
  sc.family = family_from_json(load_file(c.family, "family"));
  if (c.seed) sc.family.seed = *c.seed;
  sc.count = c.count;
  sc.level = c.resolution;
  sc.threads = c.threads;
  sc.targets.clear();
  for (const auto& t : c.targets) {
    try {
      sc.targets.push_back(parse_target(t));
    } catch (const GeometryError& e) {
      bad("targets", e.what());
    }
  }
  sc.p_values.clear();
  for (double p : c.p_values)
    if (p > 0.0 && std::isfinite(p)) sc.p_values.push_back(p);
  Output o(c.output, out);
  if (c.format == Format::Csv) o.stream() << "index,seed," << csv_header() << "\n";
  std::size_t done = 0;
  std::size_t failed = 0;
  bool persistent_in_regime = false;
  auto checkpoint = [&] {
    if (c.output.empty()) return;
    std::ofstream cp(c.output + ".checkpoint.json");
    cp << json{{"schema", kSchemaVersion}, {"completed", done}, {"failed", failed}, {"config", to_json(c)}}.dump(2) << "\n";
  };
  scan_conjectures(sc, [&](const ScanRecord& r) {
    if (c.format == Format::Csv) {
      for (const auto& x : r.reports) o.stream() << r.index << "," << r.seed << "," << csv_row(x) << "\n";
    } else {
      o.stream() << record_to_json(r).dump() << "\n";
    }
    ++done;
    if (!r.error.empty()) {
      ++failed;
      err << "record " << r.index << ": " << r.error << "\n";
    }
    for (const auto& name : r.persistent_violations)
      for (const auto& x : r.reports) {
        const auto it = x.flags.find("info:theorem_regime");
        if (x.name == name && it != x.flags.end() && it->second) persistent_in_regime = true;
      }
    if (c.checkpoint > 0 && done % c.checkpoint == 0) {
      o.stream().flush();
      checkpoint();
    }
  });
  o.stream().flush();
  checkpoint();
  if (failed > 0) return kExitError;
  return persistent_in_regime ? kExitViolated : 0;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  const ChartBody body = body_from_json(load_file(c.body, "body"));
  if (body.space().euclidean()) bad("body.lambda", "sweep needs a body with lambda > 0");
  std::vector<double> lambdas = c.lambdas;
  lambdas.push_back(1.0);
  lambdas.push_back(0.0);
  struct Row {
    double lambda;
    std::string name;
    FunctionalValue v;
  };
  std::vector<Row> rows;
  for (double l : lambdas) {
    const ChartBody b = body.with_lambda(l);
    const BodyAnalysis a(b, c.resolution);
    for (double p : c.p_values) {
      rows.push_back({l, "as_" + p_label(p), as_p_lambda_o(a, p)});
      rows.push_back({l, "Omega_" + p_label(p), omega_p_lambda(a, p)});
    }
    rows.push_back({l, "E_C", entropy_c_lambda(a)});
    rows.push_back({l, "E_PW", entropy_pw_lambda(a)});
  }
  Output o(c.output, out);
  if (c.format == Format::Csv) {
    o.stream() << "lambda,functional,value,abs_error\n";
    for (const auto& r : rows)
      o.stream() << csv_number(r.lambda) << "," << r.name << "," << csv_number(r.v.value) << "," << csv_number(r.v.abs_error) << "\n";
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json e = value_to_json(r.v);
      e["lambda"] = r.lambda;
      e["functional"] = r.name;
      arr.push_back(e);
    }
    o.stream() << json{{"schema", kSchemaVersion}, {"rows", arr}}.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Compute: return run_compute(config, out);
      case Command::Verify: return run_verify(config, out);
      case Command::Scan: return run_scan(config, out, err);
      case Command::Sweep: return run_sweep(config, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Convex bodies in space forms: functionals, inequality checks, conjecture scans"};
  app.require_subcommand(1);
  RunConfig c;
  std::string config_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool dump = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "RunConfig JSON; command-line options override it");
    sub->add_option("--resolution", c.resolution, "quadrature level")->check(CLI::PositiveNumber);
    sub->add_option("--tol", c.tol, "target tolerance of the iterative solvers")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "seed overriding the family seed");
    sub->add_option("--output,-o", c.output, "output path, stdout when omitted");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--p", c.p_values, "p values");
    sub->add_flag("--dump-config", dump, "print the resolved RunConfig and exit");
  };
  CLI::App* compute = app.add_subcommand("compute", "functionals of one body");
  CLI::App* verify = app.add_subcommand("verify", "inequality reports for one body");
  CLI::App* scan = app.add_subcommand("scan", "conjecture scan over a seeded family");
  CLI::App* sweep = app.add_subcommand("sweep", "functionals against lambda");
  for (CLI::App* s : {compute, verify, sweep}) s->add_option("--body,-b", c.body, "body spec JSON");
  for (CLI::App* s : {compute, verify, scan, sweep}) common(s);
  verify->add_option("--suite", c.suites, "core, floating, entropy, stability, euclidean, conjectures or all");
  scan->add_option("--family,-f", c.family, "family spec JSON");
  scan->add_option("--count,-n", c.count, "number of bodies");
  scan->add_option("--target", c.targets, "floating_area, entropy, strong_bound, euclidean");
  scan->add_option("--checkpoint", c.checkpoint, "records between checkpoint writes");
  sweep->add_option("--lambda", c.lambdas, "curvatures of the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }
  CLI::App* sub = app.get_subcommands().front();
  RunConfig merged = c;
  if (!config_path.empty()) {
    try {
      merged = config_from_json(load_file(config_path, "config"));
    } catch (const InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitError;
    }
    // Options given on the command line override the file.
    auto given = [&](const char* name) { return sub->count(name) > 0; };
    if (given("--body")) merged.body = c.body;
    if (given("--family")) merged.family = c.family;
    if (given("--resolution")) merged.resolution = c.resolution;
    if (given("--tol")) merged.tol = c.tol;
    if (given("--output")) merged.output = c.output;
    if (given("--threads")) merged.threads = c.threads;
    if (given("--p")) merged.p_values = c.p_values;
    if (given("--suite")) merged.suites = c.suites;
    if (given("--count")) merged.count = c.count;
    if (given("--target")) merged.targets = c.targets;
    if (given("--checkpoint")) merged.checkpoint = c.checkpoint;
    if (given("--lambda")) merged.lambdas = c.lambdas;
    if (given("--format")) merged.format = parse_format(format);
    if (given("--seed")) merged.seed = seed;
  } else {
    merged.format = parse_format(format);
    if (sub->count("--seed") > 0) merged.seed = seed;
  }
  merged.command = parse_command(sub->get_name());
  if (dump) {
    std::cout << to_json(merged).dump(2) << "\n";
    return 0;
  }
  if (merged.command == Command::Scan && merged.family.empty()) {
    std::cerr << "error: family: missing (--family)\n";
    return kExitError;
  }
  if (merged.command != Command::Scan && merged.body.empty()) {
    std::cerr << "error: body: missing (--body)\n";
    return kExitError;
  }
  return run(merged, std::cout, std::cerr);
}

}  // namespace sfa::cli
