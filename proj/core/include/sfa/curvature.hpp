#pragma once

#include <map>
#include <vector>

#include "sfa/chart_body.hpp"
#include "sfa/types.hpp"

namespace sfa {

class BodyAnalysis;

// Boundary data at the point with outer normal u.
struct CurvaturePoint {
  Vec u;
  Vec x;               // boundary point in chart coordinates
  double h = 0.0;      // support value x.u
  double x2 = 0.0;     // |x|^2
  double jac = 0.0;    // det of the support Hessian form: Euclidean area element per unit normal measure
  double H_e = 0.0;    // Euclidean Gauss-Kronecker curvature 1/jac
  double H_lambda = 0.0;
  double sigma = 0.0;  // space-form area element relative to the Euclidean one
  double f = 0.0;      // sqrt((lambda + h^2)/(1 + lambda h^2)), the centro-affine weight ratio
};

CurvaturePoint curvature_point(const ChartBody& body, const Vec& u);

double gauss_kronecker_euclidean(const ChartBody& body, const Vec& u);
double spherical_gk(const ChartBody& body, const Vec& u);
double boundary_weight(const ChartBody& body, const Vec& u);

// Principal curvatures of the boundary inside S^d(lambda) by finite differences of the
// embedded boundary and its conormal; d in {2, 3}, lambda > 0.
std::vector<double> principal_curvatures_sphere(const ChartBody& body, const Vec& u, double step = 1e-4);

struct QuermassSet {
  int d = 0;
  std::map<int, FunctionalValue> A;  // k -> A_k
  double W(int k) const;             // W_k from A_{k-1}
  double U(int j) const;             // U_j from A_{d-1-j}
};

// A_{-1}, A_0 and, for d = 3, A_1; lambda = 1.
QuermassSet quermassintegrals(const BodyAnalysis& analysis);

enum class ExponentMode { Corrected, AsPrinted };

// Integral of the single combined chart integrand
// H_e^{p/(d+p)} (1+lambda|x|^2)^{e1} (1+lambda h^2)^{e2} over the boundary.
FunctionalValue omega_p_combined(const BodyAnalysis& analysis, double p, ExponentMode mode);
double combined_first_exponent(int d, double p, ExponentMode mode);
double combined_second_exponent(int d, double p);

}  // namespace sfa
