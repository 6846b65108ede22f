#pragma once

#include <map>
#include <string>
#include <vector>

#include "sfa/centers.hpp"
#include "sfa/chart_body.hpp"
#include "sfa/report.hpp"

namespace sfa {

struct SuiteOptions {
  int level = 2;
  std::vector<double> p_grid = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 16.0};
  bool compute_center = true;
  CenterOptions center;
};

// Functionals of one body shared by all suites; everything is read from the body's own tables.
struct SphericalSummary {
  int d = 0;
  double lambda = 1.0;
  FunctionalValue vol, P, vol_dual, P_dual;
  FunctionalValue alpha_K, alpha_P, alpha_K_dual, alpha_P_dual;
  std::map<double, FunctionalValue> omega;  // p -> Omega_p; infinity included
  FunctionalValue E_s, entropy_power, E_s_dual, entropy_power_dual;
  bool symmetric = false;
  bool center_ok = false;
  double center_residual = 0.0;
  double max_radius_center = 0.0;  // chart radii of the body about its GHS-center
  double min_radius_center = 0.0;
};

SphericalSummary summarize(const ChartBody& body, const SuiteOptions& options = {});

// Isoperimetric, dual volume, dual isoperimetric and dual perimeter inequalities with their
// equivalent forms, equality cases and implication chains. Requires lambda = 1.
std::vector<InequalityReport> core_reports(const SphericalSummary& s);
std::vector<InequalityReport> verify_core_suite(const ChartBody& body, const SuiteOptions& options = {});

// Floating-area bounds by the volume and perimeter balls, the p-isoperimetric bound,
// monotonicity in p and Hoelder interpolation.
std::vector<InequalityReport> floating_reports(const SphericalSummary& s, const std::vector<double>& p_grid);
std::vector<InequalityReport> verify_floating_suite(const ChartBody& body, const SuiteOptions& options = {});

// Information inequality, its product form, dual entropy inequality, the implication from
// the strong floating-area bound and the symmetric S^2 statements.
std::vector<InequalityReport> entropy_reports(const SphericalSummary& s, const std::vector<double>& p_grid);
std::vector<InequalityReport> verify_entropy_suite(const ChartBody& body, const SuiteOptions& options = {});

// Open statements; the flag "info:theorem_regime" marks bodies covered by a proven case.
std::vector<InequalityReport> conjecture_reports(const SphericalSummary& s, const std::vector<double>& p_values);

// Entropy inequalities for a Euclidean body (lambda = 0) about its chart origin.
std::vector<InequalityReport> verify_euclidean_suite(const ChartBody& body, int level = 2);
std::vector<InequalityReport> euclidean_conjecture_reports(const ChartBody& body, int level = 2);

// Convergence of the space-form families to their Euclidean limits; lambdas in decreasing order.
struct LimitSeries {
  std::string name;
  double limit = 0.0;
  std::vector<double> lambdas;
  std::vector<double> values;
  std::vector<double> orders;  // observed orders between consecutive lambdas
  double min_order = 0.0;
  double asymptotic_order = 0.0;  // order between the two smallest lambdas
};

struct LimitReport {
  std::vector<LimitSeries> series;
  bool endpoint_bitwise = false;  // weighted and unweighted families coincide at lambda = 1
};

LimitReport verify_limits(const ChartBody& body, const std::vector<double>& lambdas,
                          const std::vector<double>& p_values, int level = 2);

}  // namespace sfa
