#pragma once

#include <utility>

#include "sfa/centers.hpp"
#include "sfa/chart_body.hpp"
#include "sfa/report.hpp"

namespace sfa {

struct StabilityOptions {
  int level = 2;
  bool assume_centered = false;  // the body's chart is already at its GHS-center
  CenterOptions center;
};

struct StabilityBundle {
  FunctionalValue volume;
  FunctionalValue alpha_K;
  FunctionalValue delta2;     // L2 deviation of J(rho) from J(alpha_K), normalized
  FunctionalValue delta_sym;  // volume of the symmetric difference with the centered ball
  double beta = 0.0;
  double gamma = 0.0;
  double tau = 0.0;
  FunctionalValue projected_volume;  // Euclidean chart volume over kappa_d
  FunctionalValue deficit_dual_volume;
  FunctionalValue deficit_floating;
  double max_chart_radius = 0.0;
  double center_residual = 0.0;
};

// (tan J^{-1}(t))^d and the concave comparison function of the floating-area proof.
double jensen_H(int d, double lambda, double t);
double jensen_G(int d, double lambda, double t);

double stability_beta(int d, double alpha_K);
double stability_gamma(int d, double alpha_K);
double stability_tau(int d, double alpha_K);

// Requires lambda = 1. Unless assume_centered, the body is first moved to its GHS-center.
StabilityBundle stability_quantities(const ChartBody& body, const StabilityOptions& options = {});

// Projected-volume stability at the body's own chart center.
InequalityReport check_lemma_hr(const ChartBody& body, int level = 2);
InequalityReport check_lemma_hr(const StabilityBundle& b, int d);

// Dual-volume and floating-area stability bounds; hypotheses are reported as flags.
std::pair<InequalityReport, InequalityReport> check_stability_theorems(const StabilityBundle& b, int d);

// Delta / omega <= Delta_2, the Cauchy-Schwarz step between the two deviation measures.
InequalityReport check_deviation_chain(const StabilityBundle& b, int d);

// Delta / (omega gamma sqrt(eps)) for the dual-volume bound, or 0 when eps <= 0.
double stability_slack_ratio(const StabilityBundle& b, int d);

}  // namespace sfa
