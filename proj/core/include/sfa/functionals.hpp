#pragma once

#include <vector>

#include "sfa/analysis.hpp"
#include "sfa/fit.hpp"
#include "sfa/types.hpp"

namespace sfa {

FunctionalValue volume_lambda(const BodyAnalysis& a);
FunctionalValue perimeter_lambda(const BodyAnalysis& a);
// Volume and perimeter of the spherical dual, from the body's own tables.
FunctionalValue dual_volume(const BodyAnalysis& a);
FunctionalValue dual_perimeter(const BodyAnalysis& a);

// L_p floating area of the space form; p = kInf gives the curvature integral.
FunctionalValue omega_p_lambda(const BodyAnalysis& a, double p);
// Weighted L_p affine surface area about the chart center.
FunctionalValue as_p_lambda_o(const BodyAnalysis& a, double p);

// Euclidean volumes of the chart body and of its polar.
FunctionalValue volume_euclidean(const BodyAnalysis& a);
FunctionalValue polar_volume_euclidean(const BodyAnalysis& a);

struct Radii {
  FunctionalValue alpha_K;  // volume radius
  FunctionalValue alpha_P;  // perimeter radius
};
Radii radii(const BodyAnalysis& a);
double volume_radius(int d, double lambda, double volume);
double perimeter_radius(int d, double lambda, double perimeter);

// Curvature entropy normalized by the curvature integral, and the centro-affine weighted variant.
FunctionalValue entropy_c_lambda(const BodyAnalysis& a);
FunctionalValue entropy_pw_lambda(const BodyAnalysis& a);

struct EntropyProbe {
  double q = 0.0;
  double log_ratio = 0.0;  // (1 + d/q) log(Omega_q(K*)/P(K*))
  double power = 0.0;      // exp(log_ratio)
};

struct EntropyBundle {
  FunctionalValue E_s;            // spherical curvature entropy
  FunctionalValue entropy_power;  // exp(-E_s)
  FunctionalValue kl;             // E_s + log(P(K)/P(K*))
  std::vector<EntropyProbe> probes;
  FunctionalValue probe_limit;    // extrapolated entropy power from the probes
};

// Requires lambda = 1. The probes are evaluated on the fitted dual body.
EntropyBundle entropy_spherical(const BodyAnalysis& a, const FitOptions& fit = {});

struct EuclideanEntropies {
  FunctionalValue E_C;
  FunctionalValue E_PW;
  FunctionalValue E_h;
  Vec E_h_point;
  bool E_h_converged = false;
};

// Requires lambda = 0.
EuclideanEntropies euclid_entropies(const BodyAnalysis& a);

// Closed forms for the geodesic ball of radius alpha centered at the chart center.
namespace cap_closed_form {
double volume(int d, double lambda, double alpha);
double perimeter(int d, double lambda, double alpha);
double omega_p(int d, double lambda, double alpha, double p);
double as_p(int d, double lambda, double alpha, double p);
double entropy_c(int d, double lambda, double alpha);
double entropy_pw(int d, double lambda, double alpha);
}  // namespace cap_closed_form

// Value and error of g(x) by symmetric perturbation of x within its error bar.
FunctionalValue map_value(const FunctionalValue& x, const std::function<double(double)>& g, const std::string& formula);
FunctionalValue map_value2(const FunctionalValue& x, const FunctionalValue& y,
                           const std::function<double(double, double)>& g, const std::string& formula);

}  // namespace sfa
