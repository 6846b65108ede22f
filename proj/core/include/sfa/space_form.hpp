#pragma once

#include <limits>

namespace sfa {

// Simply connected space form of dimension d and curvature lambda >= 0.
struct SpaceForm {
  int d = 2;
  double lambda = 1.0;

  bool euclidean() const { return lambda == 0.0; }
  void validate() const;
};

struct TrigLambda {
  double cos;
  double sin;
  double tan;
};

// cos_l t = cos(sqrt(l) t), sin_l t = sin(sqrt(l) t)/sqrt(l), tan_l = sin_l/cos_l; l = 0 is the flat limit.
TrigLambda trig_lambda(double lambda, double t);
double tan_lambda(double lambda, double t);
double arctan_lambda(double lambda, double r);

// Largest admissible geodesic radius: pi/(2 sqrt(lambda)), infinite for lambda = 0.
double max_radius(double lambda);

// J(alpha) = integral over [0, alpha] of sin_l(t)^(d-1).
double j_lambda(int d, double lambda, double alpha);
double j_lambda_inv(int d, double lambda, double value);

// Total measure of the unit sphere S^k and volume of the unit ball in R^d.
double sphere_measure(int k);
double ball_volume(int d);

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;

}  // namespace sfa
