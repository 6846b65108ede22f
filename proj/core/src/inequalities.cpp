#include "sfa/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "sfa/analysis.hpp"
#include "sfa/functionals.hpp"
#include "sfa/geometry.hpp"
#include "sfa/space_form.hpp"

namespace sfa {

namespace {

constexpr double kHalfPi = 0.5 * kPi;

std::string fmt(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream o;
  o << p;
  return o.str();
}

// prod x_i^{a_i} with first-order relative error propagation.
FunctionalValue powprod(const std::vector<std::pair<FunctionalValue, double>>& terms, const std::string& formula) {
  FunctionalValue out;
  double v = 1.0;
  double rel = 0.0;
  for (const auto& [x, a] : terms) {
    if (a == 0.0) continue;
    v *= std::pow(x.value, a);
    rel += std::abs(a) * x.abs_error / std::abs(x.value);
    if (out.rule_id.empty()) out.rule_id = x.rule_id;
  }
  out.value = v;
  out.abs_error = std::abs(v) * rel + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
  out.formula = formula;
  return out;
}

FunctionalValue sum(const FunctionalValue& x, const FunctionalValue& y, const std::string& formula) {
  FunctionalValue out = x;
  out.value = x.value + y.value;
  out.abs_error = x.abs_error + y.abs_error;
  out.formula = formula;
  return out;
}

FunctionalValue tan_product(const FunctionalValue& x, const FunctionalValue& y, const std::string& formula) {
  return map_value2(x, y, [](double a, double b) { return std::tan(a) * std::tan(b); }, formula);
}

const FunctionalValue& omega_at(const SphericalSummary& s, double p) {
  const auto it = s.omega.find(p);
  if (it == s.omega.end()) throw GeometryError(ErrorKind::Domain, "Omega_p not tabulated for p = " + fmt(p));
  return it->second;
}

void require_sphere(const SphericalSummary& s) {
  if (s.lambda != 1.0) throw GeometryError(ErrorKind::Unsupported, "spherical suite requires lambda = 1");
}

InequalityReport swapped(const std::string& name, ReportKind kind, const FunctionalValue& lhs, const FunctionalValue& rhs,
                         std::map<std::string, bool> flags, bool swap) {
  return swap ? make_report(name, kind, rhs, lhs, std::move(flags)) : make_report(name, kind, lhs, rhs, std::move(flags));
}

FunctionalValue agreement(const std::vector<InequalityReport>& r) {
  std::set<Verdict> v;
  for (const auto& x : r) v.insert(x.verdict);
  return exact(v.size() == 1 ? 0.0 : 1.0, "distinct verdicts minus one");
}

FunctionalValue cap_omega(const SphericalSummary& s, const FunctionalValue& alpha, double p) {
  return map_value(alpha, [&](double a) { return cap_closed_form::omega_p(s.d, s.lambda, a, p); },
                   "floating area of the ball of radius " + alpha.formula);
}

bool is_symmetric(const ChartBody& body, const QuadratureRule& rule) {
  double hmax = 0.0;
  double diff = 0.0;
  for (const Vec& u : rule.nodes) {
    const double h = body.support(u);
    const Vec mu = -u;
    hmax = std::max(hmax, h);
    diff = std::max(diff, std::abs(h - body.support(mu)));
  }
  return diff <= 1e-12 * hmax;
}

}  // namespace

SphericalSummary summarize(const ChartBody& body, const SuiteOptions& options) {
  const int d = body.dim();
  const double lambda = body.lambda();
  if (!(lambda > 0.0)) throw GeometryError(ErrorKind::Unsupported, "spherical summary requires lambda > 0");
  const BodyAnalysis a(body, options.level);
  SphericalSummary s;
  s.d = d;
  s.lambda = lambda;
  s.vol = volume_lambda(a);
  s.P = perimeter_lambda(a);
  s.vol_dual = dual_volume(a);
  s.P_dual = dual_perimeter(a);
  s.alpha_K = map_value(s.vol, [&](double v) { return volume_radius(d, lambda, v); }, "alpha_K");
  s.alpha_P = map_value(s.P, [&](double v) { return perimeter_radius(d, lambda, v); }, "alpha_P");
  s.alpha_K_dual = map_value(s.vol_dual, [&](double v) { return volume_radius(d, lambda, v); }, "alpha_K*");
  s.alpha_P_dual = map_value(s.P_dual, [&](double v) { return perimeter_radius(d, lambda, v); }, "alpha_P*");

  std::set<double> ps(options.p_grid.begin(), options.p_grid.end());
  for (double p : {0.0, 0.5, 1.0, 2.0, 4.0, 16.0, static_cast<double>(d * d), -0.5 * d, kInf}) ps.insert(p);
  for (double p : ps) s.omega[p] = omega_p_lambda(a, p);

  s.E_s = entropy_c_lambda(a);
  s.entropy_power = map_value(s.E_s, [](double e) { return std::exp(-e); }, "entropy power");
  const IntegralPair num = a.boundary_integral([](const CurvaturePoint& c) { return c.sigma * c.jac * std::log(c.H_lambda); });
  const IntegralPair den = a.boundary_integral([](const CurvaturePoint& c) { return c.sigma * c.jac; });
  const FunctionalValue n = a.value(num, "boundary integral of log H");
  const FunctionalValue m = a.value(den, "perimeter");
  s.E_s_dual = map_value2(n, m, [](double x, double y) { return -x / y; }, "entropy of the dual");
  s.entropy_power_dual = map_value(s.E_s_dual, [](double e) { return std::exp(-e); }, "entropy power of the dual");

  s.symmetric = is_symmetric(body, a.rule());

  if (options.compute_center) {
    CenterOptions co = options.center;
    co.build_recentered = false;
    co.level = options.level;
    const CenterResult c = ghs_center(body, co);
    s.center_ok = c.converged;
    s.center_residual = c.residual;
    const Chart at = body.chart().recentered(c.center);
    s.max_radius_center = 0.0;
    s.min_radius_center = kInf;
    for (const Vec& u : a.rule().nodes) {
      const double r = radial_in_chart(body, at, u);
      s.max_radius_center = std::max(s.max_radius_center, r);
      s.min_radius_center = std::min(s.min_radius_center, r);
    }
  }
  return s;
}

std::vector<InequalityReport> core_reports(const SphericalSummary& s) {
  require_sphere(s);
  const int d = s.d;
  const double omega = sphere_measure(d - 1);
  const FunctionalValue half_pi = exact(kHalfPi, "pi/2");
  const FunctionalValue one = exact(1.0, "1");
  std::vector<InequalityReport> out;

  const InequalityReport ii = make_report("isoperimetric", ReportKind::Inequality, s.alpha_K, s.alpha_P);
  out.push_back(ii);
  out.push_back(make_report("isoperimetric (perimeter form)", ReportKind::Inequality,
                            map_value(s.alpha_K, [&](double a) { return omega * std::pow(std::sin(a), d - 1); }, "P(C_K)"),
                            s.P));

  std::vector<InequalityReport> dvi;
  dvi.push_back(make_report("dual volume (i)", ReportKind::Inequality, s.vol_dual,
                            map_value(s.alpha_K, [&](double a) { return cap_closed_form::volume(d, 1.0, kHalfPi - a); }, "vol(C_K*)")));
  dvi.push_back(make_report("dual volume (ii)", ReportKind::Inequality, sum(s.alpha_K, s.alpha_K_dual, "alpha_K + alpha_K*"), half_pi));
  dvi.push_back(make_report("dual volume (iii)", ReportKind::Inequality, tan_product(s.alpha_K, s.alpha_K_dual, "tan alpha_K tan alpha_K*"), one));
  out.insert(out.end(), dvi.begin(), dvi.end());
  out.push_back(make_report("dual volume forms agree", ReportKind::Equality, exact(0.0), agreement(dvi)));

  const ReportKind dii_kind = d == 2 ? ReportKind::Equality : ReportKind::Inequality;
  const std::map<std::string, bool> c2 = {{"C2_plus", true}};
  std::vector<InequalityReport> dii;
  dii.push_back(make_report("dual isoperimetric (i)", dii_kind, s.P_dual,
                            map_value(s.alpha_K, [&](double a) { return omega * std::pow(std::cos(a), d - 1); }, "P(C_K*)"), c2));
  dii.push_back(make_report("dual isoperimetric (ii)", dii_kind, sum(s.alpha_P_dual, s.alpha_K, "alpha_P* + alpha_K"), half_pi, c2));
  dii.push_back(make_report("dual isoperimetric (iii)", dii_kind, tan_product(s.alpha_K, s.alpha_P_dual, "tan alpha_K tan alpha_P*"), one, c2));
  out.insert(out.end(), dii.begin(), dii.end());
  out.push_back(make_report("dual isoperimetric forms agree", ReportKind::Equality, exact(0.0), agreement(dii)));

  const ReportKind dpi_kind = d == 3 ? ReportKind::Equality : ReportKind::Inequality;
  const bool reversed = d == 2;
  const std::map<std::string, bool> dpi_flags = {{"C2_plus", true}, {"odd_dimension_or_low", d % 2 == 1 || d == 2}};
  std::vector<InequalityReport> dpi;
  dpi.push_back(swapped("dual perimeter (i)", dpi_kind, s.P_dual,
                        map_value(s.alpha_P, [&](double a) { return omega * std::pow(std::cos(a), d - 1); }, "P(C(alpha_P)*)"),
                        dpi_flags, reversed));
  dpi.push_back(swapped("dual perimeter (ii)", dpi_kind, sum(s.alpha_P, s.alpha_P_dual, "alpha_P + alpha_P*"), half_pi, dpi_flags, reversed));
  dpi.push_back(swapped("dual perimeter (iii)", dpi_kind, tan_product(s.alpha_P, s.alpha_P_dual, "tan alpha_P tan alpha_P*"), one,
                        dpi_flags, reversed));
  out.insert(out.end(), dpi.begin(), dpi.end());
  out.push_back(make_report("dual perimeter forms agree", ReportKind::Equality, exact(0.0), agreement(dpi)));

  const bool ii_ok = ii.verdict == Verdict::Holds;
  out.push_back(make_report("isoperimetric and dual isoperimetric imply dual volume", ReportKind::Implication, s.alpha_K_dual,
                            map_value(s.alpha_K, [](double a) { return kHalfPi - a; }, "pi/2 - alpha_K"),
                            {{"premises", ii_ok && dii[1].verdict == Verdict::Holds}}));
  out.push_back(make_report("isoperimetric and dual perimeter imply dual isoperimetric", ReportKind::Implication, s.alpha_P_dual,
                            map_value(s.alpha_K, [](double a) { return kHalfPi - a; }, "pi/2 - alpha_K"),
                            {{"premises", ii_ok && dpi[1].verdict == Verdict::Holds}, {"odd_dimension", d % 2 == 1}}));
  return out;
}

std::vector<InequalityReport> floating_reports(const SphericalSummary& s, const std::vector<double>& p_grid) {
  const int d = s.d;
  const double lambda = s.lambda;
  const bool sphere = lambda == 1.0;
  const bool contained = s.center_ok && s.max_radius_center <= std::sqrt(d * (d - 2.0) / lambda);
  const bool odd = d >= 3 && d % 2 == 1;
  std::vector<InequalityReport> out;
  std::vector<double> grid(p_grid.begin(), p_grid.end());
  std::sort(grid.begin(), grid.end());

  for (double p : grid) {
    if (p >= 1.0) {
      out.push_back(make_report("floating area by the volume ball p=" + fmt(p), ReportKind::Inequality, omega_at(s, p),
                                cap_omega(s, s.alpha_K, p),
                                {{"d_at_least_3", d >= 3}, {"ghs_containment", contained}, {"sphere_or_p_one", sphere || p == 1.0}}));
    }
    if (p > 0.0 && sphere) {
      const double q = std::min(p, static_cast<double>(d * d));
      const bool inner = s.center_ok && s.min_radius_center >= std::sqrt(d / q);
      out.push_back(make_report("floating area by the volume ball (inner ball) p=" + fmt(p), ReportKind::Inequality,
                                omega_at(s, p), cap_omega(s, s.alpha_K, p),
                                {{"d_at_least_3", d >= 3}, {"ghs_containment", contained}, {"inner_ball", inner}}));
      out.push_back(make_report("floating area by the perimeter ball p=" + fmt(p), ReportKind::Inequality, omega_at(s, p),
                                cap_omega(s, s.alpha_P, p), {{"odd_dimension", odd}}));
      const bool large = std::tan(s.alpha_K.value) >= std::sqrt(d / p);
      out.push_back(make_report("floating area by the volume ball (odd dimension) p=" + fmt(p), ReportKind::Inequality,
                                omega_at(s, p), cap_omega(s, s.alpha_K, p), {{"odd_dimension", odd}, {"tan_alpha_K_large", large}}));
    }
  }
  if (!sphere) return out;

  for (double p : grid) {
    if (p == 0.0) continue;
    const FunctionalValue bound = powprod({{s.P, d / (d + p)}, {s.P_dual, p / (d + p)}}, "P^{d/(d+p)} P*^{p/(d+p)}");
    out.push_back(swapped("p-isoperimetric p=" + fmt(p), ReportKind::Inequality, omega_at(s, p), bound, {}, p < 0.0));
  }
  {
    const double p = -0.5 * d;
    const FunctionalValue bound = powprod({{s.P, d / (d + p)}, {s.P_dual, p / (d + p)}}, "P^{d/(d+p)} P*^{p/(d+p)}");
    out.push_back(swapped("p-isoperimetric p=" + fmt(p), ReportKind::Inequality, omega_at(s, p), bound, {}, true));
  }

  std::vector<double> nonneg;
  for (double p : grid)
    if (p >= 0.0) nonneg.push_back(p);
  auto dual_ratio = [&](double p) {
    return powprod({{omega_at(s, p), 1.0 + p / d}, {s.P_dual, -(1.0 + p / d)}}, "(Omega_p/P*)^{1+p/d}");
  };
  auto primal_ratio = [&](double p) {
    return powprod({{omega_at(s, p), 1.0 + d / p}, {s.P, -(1.0 + d / p)}}, "(Omega_p/P)^{1+d/p}");
  };
  for (std::size_t k = 0; k + 1 < nonneg.size(); ++k) {
    const double p = nonneg[k], q = nonneg[k + 1];
    out.push_back(make_report("monotone in p (dual normalization) " + fmt(p) + "<" + fmt(q), ReportKind::Inequality, dual_ratio(q),
                              dual_ratio(p)));
    if (p > 0.0)
      out.push_back(make_report("monotone in p (primal normalization) " + fmt(p) + "<" + fmt(q), ReportKind::Inequality,
                                primal_ratio(p), primal_ratio(q)));
  }

  const std::vector<std::array<double, 3>> triples = {
      {1.0, 2.0, 0.0}, {0.5, 1.0, 0.0}, {1.0, 4.0, 0.5}, {2.0, 16.0, 1.0}, {1.0, 16.0, 0.0}, {0.0, 1.0, -0.5 * d}};
  for (const auto& [p, q, r] : triples) {
    if (!s.omega.count(p) || !s.omega.count(q) || !s.omega.count(r)) continue;
    const double t = (q - r) * (d + p) / ((p - r) * (d + q));
    if (!(t > 1.0)) continue;
    const double tp = t / (t - 1.0);
    out.push_back(make_report("interpolation p=" + fmt(p) + " q=" + fmt(q) + " r=" + fmt(r), ReportKind::Inequality, omega_at(s, p),
                              powprod({{omega_at(s, q), 1.0 / t}, {omega_at(s, r), 1.0 / tp}}, "Omega_q^{1/t} Omega_r^{1/t'}")));
  }
  return out;
}

std::vector<InequalityReport> entropy_reports(const SphericalSummary& s, const std::vector<double>& p_grid) {
  require_sphere(s);
  const int d = s.d;
  const double omega = sphere_measure(d - 1);
  std::vector<InequalityReport> out;
  out.push_back(make_report("information inequality", ReportKind::Inequality, s.entropy_power,
                            powprod({{s.P, 1.0}, {s.P_dual, -1.0}}, "P/P*")));
  out.push_back(make_report("entropy product", ReportKind::Inequality,
                            powprod({{s.entropy_power, 1.0}, {s.entropy_power_dual, 1.0}}, "E(K) E(K*)"), exact(1.0)));
  out.push_back(make_report("dual entropy inequality", ReportKind::Inequality, s.entropy_power_dual,
                            map_value(s.alpha_K, [&](double a) { return std::pow(std::tan(a), 1 - d); }, "cot^{d-1} alpha_K"),
                            {{"C2_plus_or_d_2", true}}));

  bool premise = false;
  const FunctionalValue& aK = s.alpha_K;
  for (double p : p_grid) {
    if (!(p > 0.0) || !s.omega.count(p)) continue;
    const double lhs = omega_at(s, p).value / cap_closed_form::omega_p(d, 1.0, aK.value, p);
    const double rhs = s.P_dual.value / (omega * std::pow(std::cos(aK.value), d - 1));
    premise = premise || lhs <= rhs;
  }
  const FunctionalValue ball_power =
      map_value(aK, [&](double a) { return std::pow(std::tan(a), d - 1); }, "tan^{d-1} alpha_K");
  out.push_back(make_report("strong floating bound implies entropy inequality", ReportKind::Implication, s.entropy_power, ball_power,
                            {{"premises", premise}}));

  const bool sym2 = d == 2 && s.symmetric;
  out.push_back(make_report("symmetric S2 entropy inequality", ReportKind::Inequality, s.entropy_power, ball_power,
                            {{"d_2", d == 2}, {"symmetric", s.symmetric}}));
  out.push_back(make_report("symmetric S2 entropy positivity", ReportKind::Inequality, exact(0.0), s.E_s,
                            {{"d_2", d == 2}, {"symmetric", s.symmetric},
                             {"small_volume", sym2 && s.vol.value <= (2.0 - std::sqrt(2.0)) * kPi}}));
  return out;
}

std::vector<InequalityReport> conjecture_reports(const SphericalSummary& s, const std::vector<double>& p_values) {
  require_sphere(s);
  const int d = s.d;
  const bool contained = s.center_ok && s.max_radius_center <= std::sqrt(d * (d - 2.0));
  std::vector<InequalityReport> out;
  for (double p : p_values) {
    if (!s.omega.count(p)) continue;
    const bool regime = (d >= 3 && contained && p >= 1.0) || (d == 2 && s.symmetric && p == 1.0);
    out.push_back(make_report("conjecture floating area p=" + fmt(p), ReportKind::Inequality, omega_at(s, p), cap_omega(s, s.alpha_K, p),
                              {{"info:theorem_regime", regime}}));
  }
  out.push_back(make_report("conjecture entropy", ReportKind::Inequality, s.entropy_power,
                            map_value(s.alpha_K, [&](double a) { return std::pow(std::tan(a), d - 1); }, "tan^{d-1} alpha_K"),
                            {{"info:theorem_regime", d == 2 && s.symmetric}}));
  const double omega = sphere_measure(d - 1);
  for (double p : p_values) {
    if (!(p > 0.0) || !s.omega.count(p)) continue;
    const FunctionalValue bound = map_value2(s.alpha_K, s.alpha_K_dual, [&](double a, double b) {
      return std::pow(omega * std::pow(std::sin(a), d - 1), d / (d + p)) * std::pow(omega * std::pow(std::sin(b), d - 1), p / (d + p));
    }, "P(C_K)^{d/(d+p)} P(C_K*)^{p/(d+p)}");
    out.push_back(make_report("conjecture strong bound p=" + fmt(p), ReportKind::Inequality, omega_at(s, p), bound,
                              {{"info:theorem_regime", false}}));
  }
  return out;
}

std::vector<InequalityReport> verify_core_suite(const ChartBody& body, const SuiteOptions& options) {
  SuiteOptions o = options;
  o.compute_center = false;
  return core_reports(summarize(body, o));
}

std::vector<InequalityReport> verify_floating_suite(const ChartBody& body, const SuiteOptions& options) {
  return floating_reports(summarize(body, options), options.p_grid);
}

std::vector<InequalityReport> verify_entropy_suite(const ChartBody& body, const SuiteOptions& options) {
  SuiteOptions o = options;
  o.compute_center = false;
  return entropy_reports(summarize(body, o), options.p_grid);
}

namespace {

struct EuclidData {
  FunctionalValue vol, vol_polar;
  EuclideanEntropies e;
};

EuclidData euclid_data(const BodyAnalysis& a) {
  EuclidData x;
  x.vol = volume_euclidean(a);
  x.vol_polar = polar_volume_euclidean(a);
  x.e = euclid_entropies(a);
  return x;
}

}  // namespace

std::vector<InequalityReport> verify_euclidean_suite(const ChartBody& body, int level) {
  const int d = body.dim();
  const BodyAnalysis a(body, level);
  const EuclidData x = euclid_data(a);
  const double kd = ball_volume(d);
  const FunctionalValue logv = map_value(x.vol, [&](double v) { return std::log(v / kd); }, "log(vol/kappa_d)");
  std::vector<InequalityReport> out;
  out.push_back(make_report("Euclidean information inequality", ReportKind::Inequality,
                            map_value2(x.vol, x.vol_polar, [](double v, double w) { return -std::log(v / w); }, "-log(vol/vol polar)"),
                            x.e.E_PW));
  const std::map<std::string, bool> conv = {{"maximizer_converged", x.e.E_h_converged}};
  out.push_back(make_report("Firey entropy volume bound", ReportKind::Inequality,
                            map_value(logv, [&](double l) { return l / d; }, "(1/d) log(vol/kappa_d)"), x.e.E_h, conv));
  FunctionalValue gn = sum(x.e.E_h, map_value(logv, [](double l) { return -l; }, "-log"), "E_h - log(vol/kappa_d)");
  out.push_back(make_report("Gaussian entropy by Firey entropy", ReportKind::Inequality, gn, x.e.E_C, conv));
  out.push_back(make_report("Gaussian entropy volume bound", ReportKind::Inequality,
                            map_value(logv, [&](double l) { return -(d - 1.0) / d * l; }, "-((d-1)/d) log(vol/kappa_d)"), gn, conv));
  FunctionalValue pw = sum(map_value(x.e.E_h, [&](double e) { return -d * e; }, "-d E_h"),
                           map_value(logv, [](double l) { return -l; }, "-log"), "-d E_h - log(vol/kappa_d)");
  out.push_back(make_report("centro-affine entropy by Firey entropy", ReportKind::Inequality, pw, x.e.E_PW, conv));
  return out;
}

std::vector<InequalityReport> euclidean_conjecture_reports(const ChartBody& body, int level) {
  const int d = body.dim();
  if (body.lambda() != 0.0) throw GeometryError(ErrorKind::Unsupported, "Euclidean conjecture requires lambda = 0");
  const BodyAnalysis a0(body, level);
  const FunctionalValue v0 = volume_euclidean(a0);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < d; ++i) {
    const IntegralPair m = a0.radial_integral([&](const Vec& u, double rho) { return u[i] * std::pow(rho, d + 1) / (d + 1); });
    c[i] = m.fine.value / v0.value;
  }
  const ChartBody centered = recenter(body, body.chart().center() + c);
  const BodyAnalysis a(centered, level);
  const FunctionalValue vol = volume_euclidean(a);
  const FunctionalValue pw = entropy_pw_lambda(a);
  const double kd = ball_volume(d);
  std::vector<InequalityReport> out;
  out.push_back(make_report("conjecture centro-affine entropy", ReportKind::Inequality,
                            map_value(vol, [&](double v) { return -2.0 * std::log(v / kd); }, "-2 log(vol/kappa_d)"), pw,
                            {{"info:theorem_regime", false}}));
  return out;
}

LimitReport verify_limits(const ChartBody& body, const std::vector<double>& lambdas, const std::vector<double>& p_values, int level) {
  LimitReport rep;
  const ChartBody b0 = body.with_lambda(0.0);
  const BodyAnalysis a0(b0, level);
  struct Family {
    std::string name;
    std::function<FunctionalValue(const BodyAnalysis&)> f;
  };
  std::vector<Family> fams;
  for (double p : p_values) {
    fams.push_back({"weighted affine surface area p=" + fmt(p), [p](const BodyAnalysis& a) { return as_p_lambda_o(a, p); }});
    fams.push_back({"floating area p=" + fmt(p), [p](const BodyAnalysis& a) { return omega_p_lambda(a, p); }});
  }
  fams.push_back({"curvature entropy", [](const BodyAnalysis& a) { return entropy_c_lambda(a); }});
  fams.push_back({"centro-affine entropy", [](const BodyAnalysis& a) { return entropy_pw_lambda(a); }});

  std::vector<std::unique_ptr<ChartBody>> bodies;
  std::vector<std::unique_ptr<BodyAnalysis>> tables;
  for (double l : lambdas) {
    bodies.push_back(std::make_unique<ChartBody>(body.with_lambda(l)));
    tables.push_back(std::make_unique<BodyAnalysis>(*bodies.back(), level));
  }
  for (const Family& fam : fams) {
    LimitSeries s;
    s.name = fam.name;
    s.limit = fam.f(a0).value;
    s.lambdas = lambdas;
    for (const auto& t : tables) s.values.push_back(fam.f(*t).value);
    s.min_order = kInf;
    for (std::size_t k = 0; k + 1 < lambdas.size(); ++k) {
      const double e1 = std::abs(s.values[k] - s.limit);
      const double e2 = std::abs(s.values[k + 1] - s.limit);
      const double floor = 1e-13 * std::max(1.0, std::abs(s.limit));
      const double order = e2 <= floor ? kInf : std::log(e1 / e2) / std::log(lambdas[k] / lambdas[k + 1]);
      s.orders.push_back(order);
      s.min_order = std::min(s.min_order, order);
    }
    s.asymptotic_order = s.orders.empty() ? kInf : s.orders.back();
    rep.series.push_back(std::move(s));
  }

  const ChartBody b1 = body.with_lambda(1.0);
  const BodyAnalysis a1(b1, level);
  bool same = entropy_pw_lambda(a1).value == entropy_c_lambda(a1).value;
  for (double p : p_values) same = same && as_p_lambda_o(a1, p).value == omega_p_lambda(a1, p).value;
  rep.endpoint_bitwise = same;
  return rep;
}

}  // namespace sfa
