#include "sfa/stability.hpp"

#include <algorithm>
#include <cmath>

#include "sfa/analysis.hpp"
#include "sfa/functionals.hpp"
#include "sfa/geometry.hpp"
#include "sfa/space_form.hpp"

namespace sfa {

double jensen_H(int d, double lambda, double t) {
  const double a = j_lambda_inv(d, lambda, t);
  return std::pow(tan_lambda(lambda, a), d);
}

double jensen_G(int d, double lambda, double t) {
  const TrigLambda tr = trig_lambda(lambda, j_lambda_inv(d, lambda, t));
  return std::pow(tr.sin, d) * std::pow(tr.cos, -1.0 / d);
}

double stability_beta(int d, double alpha_K) { return d * (d + 1.0) / (2.0 * std::pow(std::tan(alpha_K), d)); }

double stability_gamma(int d, double alpha_K) {
  const double t = std::pow(std::tan(alpha_K), d);
  return 0.5 * kPi * std::sqrt((1.0 / std::sin(alpha_K)) * (1.0 + 8.0 * t / (d * (d + 1.0) * kPi * kPi)));
}

double stability_tau(int d, double alpha_K) { return std::sqrt(3.0 * std::pow(std::tan(alpha_K), d)); }

StabilityBundle stability_quantities(const ChartBody& body, const StabilityOptions& options) {
  if (body.lambda() != 1.0) throw GeometryError(ErrorKind::Unsupported, "stability quantities require lambda = 1");
  const int d = body.dim();
  StabilityBundle b;
  std::optional<ChartBody> centered;
  if (!options.assume_centered) {
    CenterOptions co = options.center;
    co.build_recentered = true;
    const CenterResult c = ghs_center(body, co);
    b.center_residual = c.residual;
    centered = *c.recentered;
  }
  const ChartBody& kb = centered ? *centered : body;
  const BodyAnalysis a(kb, options.level);
  const double omega = sphere_measure(d - 1);

  b.volume = volume_lambda(a);
  b.alpha_K = map_value(b.volume, [&](double v) { return volume_radius(d, 1.0, v); }, "volume radius");
  const double Ja = b.volume.value / omega;
  const IntegralPair sq = a.radial_integral([&](const Vec&, double rho) {
    const double t = j_lambda(d, 1.0, std::atan(rho)) - Ja;
    return t * t / omega;
  });
  const FunctionalValue d2sq = a.value(sq, "squared L2 radial deviation");
  b.delta2 = map_value(d2sq, [](double x) { return std::sqrt(std::max(x, 0.0)); }, "L2 radial deviation");
  const IntegralPair ab = a.radial_integral([&](const Vec&, double rho) {
    return std::abs(j_lambda(d, 1.0, std::atan(rho)) - Ja);
  });
  b.delta_sym = a.value(ab, "symmetric difference volume with the centered ball");

  b.beta = stability_beta(d, b.alpha_K.value);
  b.gamma = stability_gamma(d, b.alpha_K.value);
  b.tau = stability_tau(d, b.alpha_K.value);

  const FunctionalValue ve = volume_euclidean(a);
  b.projected_volume = map_value(ve, [&](double v) { return v / ball_volume(d); }, "Euclidean chart volume over kappa_d");

  const FunctionalValue dv = dual_volume(a);
  b.deficit_dual_volume = map_value2(dv, b.alpha_K, [&](double x, double alpha) {
    return 1.0 - x / cap_closed_form::volume(d, 1.0, 0.5 * kPi - alpha);
  }, "dual volume deficit");
  const FunctionalValue fa = omega_p_lambda(a, 1.0);
  b.deficit_floating = map_value2(fa, b.alpha_K, [&](double x, double alpha) {
    return 1.0 - x / cap_closed_form::omega_p(d, 1.0, alpha, 1.0);
  }, "floating area deficit");

  const auto& rho = a.radials();
  b.max_chart_radius = *std::max_element(rho.begin(), rho.end());
  return b;
}

InequalityReport check_lemma_hr(const StabilityBundle& b, int d) {
  const double alpha = b.alpha_K.value;
  const double H = std::pow(std::tan(alpha), d);
  FunctionalValue lhs;
  const double d2 = b.delta2.value;
  lhs.value = H + 0.5 * d * (d + 1.0) * d2 * d2;
  const double dH = d * std::pow(std::tan(alpha), d - 1) / std::pow(std::cos(alpha), 2);
  lhs.abs_error = std::abs(dH) * b.alpha_K.abs_error + d * (d + 1.0) * d2 * b.delta2.abs_error +
                  0.5 * d * (d + 1.0) * b.delta2.abs_error * b.delta2.abs_error;
  lhs.formula = "(1 + beta Delta_2^2) H(vol/omega)";
  return make_report("projected volume stability", ReportKind::Inequality, lhs, b.projected_volume);
}

InequalityReport check_lemma_hr(const ChartBody& body, int level) {
  StabilityOptions o;
  o.level = level;
  o.assume_centered = true;
  return check_lemma_hr(stability_quantities(body, o), body.dim());
}

namespace {

FunctionalValue bound(const FunctionalValue& eps, double constant, const std::string& formula) {
  return map_value(eps, [&](double e) { return constant * std::sqrt(std::max(e, 0.0)); }, formula);
}

}  // namespace

std::pair<InequalityReport, InequalityReport> check_stability_theorems(const StabilityBundle& b, int d) {
  const double omega = sphere_measure(d - 1);
  const bool centered = b.center_residual <= 1e-6;
  const double e1 = b.deficit_dual_volume.value;
  InequalityReport dual = make_report(
      "dual volume stability", ReportKind::Inequality, b.delta_sym,
      bound(b.deficit_dual_volume, omega * b.gamma, "omega gamma sqrt(eps)"),
      {{"ghs_center", centered}, {"eps_below_one", e1 < 1.0}});
  const double e2 = b.deficit_floating.value;
  InequalityReport floating = make_report(
      "floating area stability", ReportKind::Inequality, b.delta_sym,
      bound(b.deficit_floating, omega * b.tau, "omega tau sqrt(eps)"),
      {{"ghs_center", centered},
       {"d_at_least_3", d >= 3},
       {"eps_below_1_over_d_plus_1", e2 < 1.0 / (d + 1.0)},
       {"containment", d >= 3 && b.max_chart_radius <= std::sqrt(d * (d - 2.0))}});
  return {dual, floating};
}

InequalityReport check_deviation_chain(const StabilityBundle& b, int d) {
  const double omega = sphere_measure(d - 1);
  const FunctionalValue lhs = map_value(b.delta_sym, [&](double x) { return x / omega; }, "Delta / omega");
  return make_report("deviation chain", ReportKind::Inequality, lhs, b.delta2);
}

double stability_slack_ratio(const StabilityBundle& b, int d) {
  const double eps = b.deficit_dual_volume.value;
  if (!(eps > 0.0)) return 0.0;
  return b.delta_sym.value / (sphere_measure(d - 1) * b.gamma * std::sqrt(eps));
}

}  // namespace sfa
