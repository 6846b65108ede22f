#pragma once

#include <optional>

#include <Eigen/Core>

#include "sfa/chart_body.hpp"
#include "sfa/fit.hpp"

namespace sfa {

struct CenterOptions {
  double tol = 1e-8;
  int max_iterations = 60;
  int level = 2;
  int radial_nodes = 40;
  bool build_recentered = true;
  FitOptions fit;
};

struct CenterResult {
  Eigen::VectorXd center;                 // unit vector of R^{d+1}
  std::optional<ChartBody> recentered;    // the body in the chart at `center`
  double residual = 0.0;                  // chart centroid norm over the mean chart radius
  int iterations = 0;
  double objective = 0.0;
  bool converged = false;
};

// Minimizer of v -> int_K (w.v)^{-alpha} dw over the sphere, found by Riemannian Newton
// steps on tables of the body in its own chart.
CenterResult h_alpha_barycenter(const ChartBody& body, double alpha, const CenterOptions& options = {});

// The point whose gnomonic chart has the body's centroid at the origin (alpha = d + 1).
CenterResult ghs_center(const ChartBody& body, const CenterOptions& options = {});

// GHS-center of the dual; the chart there puts the Santalo point of the body at the origin.
CenterResult santalo_chart(const ChartBody& body, const CenterOptions& options = {});

// The barycenter objective at a point, on the same tables the minimizer uses.
double barycenter_objective(const ChartBody& body, const Eigen::VectorXd& point, double alpha, const CenterOptions& options = {});

}  // namespace sfa
