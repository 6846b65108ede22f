#pragma once

#include <Eigen/Core>

#include "sfa/chart_body.hpp"
#include "sfa/fit.hpp"

namespace sfa {

struct RadialPoint {
  double rho = 0.0;     // distance from the star center to the boundary
  Vec normal;           // outer unit normal at the boundary point
  int iterations = 0;
};

// Chart radial function about the chart origin, rho(u) = min over v of h(v)/(u.v).
RadialPoint radial_detail(const ChartBody& body, const Vec& u);
double radial(const ChartBody& body, const Vec& u);
// Radial function of the chart body about an interior chart point z.
RadialPoint radial_from(const ChartBody& body, const Vec& z, const Vec& u);
// Geodesic radial function about the chart center, arctan_lambda of the chart radial.
double spherical_radial(const ChartBody& body, const Vec& u);

// Chart radial function of the body in the chart `at`, for the direction u of that chart,
// computed through the body's own chart without refitting.
double radial_in_chart(const ChartBody& body, const Chart& at, const Vec& u);

// Supports of derived bodies, evaluated pointwise.
double polar_support(const ChartBody& body, const Vec& u);
double dual_support(const ChartBody& body, const Vec& u);
double recentered_support(const ChartBody& body, const Chart& target, const Vec& u);

// Chart polar, spherical dual (negated polar scaled by 1/lambda) and re-expression at a new center.
ChartBody polar_body(const ChartBody& body, const FitOptions& options = {});
ChartBody dual_body(const ChartBody& body, const FitOptions& options = {});
ChartBody recenter(const ChartBody& body, const Eigen::VectorXd& new_center, const FitOptions& options = {});
ChartBody recenter(const ChartBody& body, const Chart& target, const FitOptions& options = {});

// Exact ellipsoid constructions.
EllipsoidRep ellipsoid_polar(const EllipsoidRep& e);
EllipsoidRep ellipsoid_recenter(const EllipsoidRep& e, const Chart& from, const Chart& to);

}  // namespace sfa
