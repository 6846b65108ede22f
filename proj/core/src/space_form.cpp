#include "sfa/space_form.hpp"

#include <cmath>
#include <string>

#include "sfa/quadrature.hpp"
#include "sfa/types.hpp"

namespace sfa {

void SpaceForm::validate() const {
  if (d < 2 || d > kMaxDim - 1) {
    throw GeometryError(ErrorKind::Domain, "dimension must lie in [2, 7], got " + std::to_string(d));
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw GeometryError(ErrorKind::Domain, "curvature must be finite and non-negative");
  }
}

double max_radius(double lambda) { return lambda == 0.0 ? kInf : kPi / (2.0 * std::sqrt(lambda)); }

TrigLambda trig_lambda(double lambda, double t) {
  if (lambda < 0.0) throw GeometryError(ErrorKind::Domain, "negative curvature");
  if (lambda == 0.0) return {1.0, t, t};
  const double s = std::sqrt(lambda);
  if (t < 0.0 || t > kPi / s * (1.0 + 1e-15)) {
    throw GeometryError(ErrorKind::Domain, "trig_lambda argument outside [0, pi/sqrt(lambda)]");
  }
  const double c = std::cos(s * t);
  const double sn = std::sin(s * t) / s;
  if (std::abs(s * t - kPi / 2.0) <= 4.0 * std::numeric_limits<double>::epsilon()) {
    return {c, sn, kInf};
  }
  return {c, sn, sn / c};
}

double tan_lambda(double lambda, double t) {
  const TrigLambda k = trig_lambda(lambda, t);
  if (!std::isfinite(k.tan)) throw GeometryError(ErrorKind::Domain, "tan_lambda at the quarter period");
  return k.tan;
}

double arctan_lambda(double lambda, double r) {
  if (lambda == 0.0) return r;
  const double s = std::sqrt(lambda);
  return std::atan(s * r) / s;
}

double j_lambda(int d, double lambda, double alpha) {
  if (alpha < 0.0) throw GeometryError(ErrorKind::Domain, "negative radius");
  if (lambda == 0.0) return std::pow(alpha, d) / d;
  if (alpha > max_radius(lambda) * (1.0 + 1e-12)) {
    throw GeometryError(ErrorKind::Domain, "radius beyond the quarter period");
  }
  const double s = std::sqrt(lambda);
  if (d == 2) return (1.0 - std::cos(s * alpha)) / lambda;
  static const GaussLegendre gl = gauss_legendre(48);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double t = 0.5 * alpha * (gl.nodes[i] + 1.0);
    sum += gl.weights[i] * std::pow(std::sin(s * t) / s, d - 1);
  }
  return 0.5 * alpha * sum;
}

double j_lambda_inv(int d, double lambda, double value) {
  if (value < 0.0) throw GeometryError(ErrorKind::Domain, "negative J value");
  if (value == 0.0) return 0.0;
  if (lambda == 0.0) return std::pow(d * value, 1.0 / d);
  const double s = std::sqrt(lambda);
  if (d == 2) {
    const double c = 1.0 - lambda * value;
    if (c <= 0.0) throw GeometryError(ErrorKind::Domain, "J value beyond a hemisphere");
    return std::acos(c) / s;
  }
  double lo = 0.0;
  double hi = max_radius(lambda);
  if (value >= j_lambda(d, lambda, hi)) throw GeometryError(ErrorKind::Domain, "J value beyond a hemisphere");
  double a = std::pow(d * value, 1.0 / d);
  if (!(a > lo && a < hi)) a = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = j_lambda(d, lambda, a) - value;
    if (f > 0.0) hi = a; else lo = a;
    const double df = std::pow(std::sin(s * a) / s, d - 1);
    double next = a - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - a) <= 1e-16 * std::max(1.0, a)) return next;
    a = next;
  }
  return a;
}

double sphere_measure(int k) {
  return 2.0 * std::pow(kPi, 0.5 * (k + 1)) / std::tgamma(0.5 * (k + 1));
}

double ball_volume(int d) { return sphere_measure(d - 1) / d; }

}  // namespace sfa
