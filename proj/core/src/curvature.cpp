#include "sfa/curvature.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>

#include "sfa/analysis.hpp"
#include "sfa/functionals.hpp"
#include "sfa/space_form.hpp"

namespace sfa {

CurvaturePoint curvature_point(const ChartBody& body, const Vec& u) {
  const int d = body.dim();
  const double lambda = body.lambda();
  const SupportDerivs s = body.derivs(u);
  const Mat S = support_form(s, tangent_basis(u));
  const double jac = d == 2 ? S(0, 0) : S.determinant();
  if (!(jac > 0.0)) throw GeometryError(ErrorKind::NotConvex, "support Hessian form is not positive definite", jac);
  CurvaturePoint p;
  p.u = u;
  p.x = s.grad;
  p.h = s.value;
  p.x2 = s.grad.squaredNorm();
  p.jac = jac;
  p.H_e = 1.0 / jac;
  if (lambda == 0.0) {
    p.H_lambda = p.H_e;
    p.sigma = 1.0;
    p.f = p.h;
  } else {
    const double a = 1.0 + lambda * p.x2;
    const double b = 1.0 + lambda * p.h * p.h;
    p.H_lambda = p.H_e * std::pow(a / b, 0.5 * (d + 1));
    p.sigma = std::pow(a, -0.5 * d) * std::sqrt(b);
    p.f = lambda == 1.0 ? 1.0 : std::sqrt((lambda + p.h * p.h) / b);
  }
  return p;
}

double gauss_kronecker_euclidean(const ChartBody& body, const Vec& u) { return curvature_point(body, u).H_e; }
double spherical_gk(const ChartBody& body, const Vec& u) { return curvature_point(body, u).H_lambda; }
double boundary_weight(const ChartBody& body, const Vec& u) { return curvature_point(body, u).sigma; }

namespace {

// Boundary point on the sphere of radius 1/sqrt(lambda) and the unit conormal, in ambient coordinates.
void embedded(const ChartBody& body, const Vec& u, Eigen::VectorXd& P, Eigen::VectorXd& N) {
  const int d = body.dim();
  const double sl = std::sqrt(body.lambda());
  const SupportDerivs s = body.derivs(u);
  P = body.chart().unproject(s.grad) / sl;
  Eigen::VectorXd n(d + 1);
  n.head(d) = u;
  n[d] = -sl * s.value;
  N = body.chart().frame() * n.normalized();
}

}  // namespace

std::vector<double> principal_curvatures_sphere(const ChartBody& body, const Vec& u, double step) {
  const int d = body.dim();
  if (d != 2 && d != 3) throw GeometryError(ErrorKind::Unsupported, "principal curvatures require d in {2, 3}");
  if (!(body.lambda() > 0.0)) throw GeometryError(ErrorKind::Unsupported, "principal curvatures require lambda > 0");
  const Mat B = tangent_basis(u);
  Eigen::MatrixXd DP(d + 1, d - 1);
  Eigen::MatrixXd DN(d + 1, d - 1);
  for (int i = 0; i < d - 1; ++i) {
    auto diff = [&](double hs, Eigen::VectorXd& dp, Eigen::VectorXd& dn) {
      Eigen::VectorXd Pp, Np, Pm, Nm;
      embedded(body, (u + hs * B.col(i)).normalized(), Pp, Np);
      embedded(body, (u - hs * B.col(i)).normalized(), Pm, Nm);
      const double t = std::atan(hs);
      dp = (Pp - Pm) / (2.0 * t);
      dn = (Np - Nm) / (2.0 * t);
    };
    Eigen::VectorXd p1, n1, p2, n2;
    diff(step, p1, n1);
    diff(0.5 * step, p2, n2);
    DP.col(i) = (4.0 * p2 - p1) / 3.0;
    DN.col(i) = (4.0 * n2 - n1) / 3.0;
  }
  const Eigen::MatrixXd G = DP.transpose() * DP;
  Eigen::MatrixXd II = DP.transpose() * DN;
  II = 0.5 * (II + II.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(II, G);
  std::vector<double> k(d - 1);
  for (int i = 0; i < d - 1; ++i) k[i] = es.eigenvalues()[i];
  return k;
}

double QuermassSet::W(int k) const {
  const FunctionalValue& a = A.at(k - 1);
  if (k == 0) return a.value;
  const int kk = k - 1;
  double binom = 1.0;
  for (int i = 0; i < kk; ++i) binom = binom * (d - 1 - i) / (i + 1);
  return a.value / (d * binom);
}

double QuermassSet::U(int j) const {
  const int k = d - 1 - j;
  const FunctionalValue& a = A.at(k);
  if (k == -1) return a.value / sphere_measure(d);
  return a.value / (sphere_measure(k) * sphere_measure(d - 1 - k));
}

QuermassSet quermassintegrals(const BodyAnalysis& a) {
  const ChartBody& body = a.body();
  const int d = body.dim();
  if (d != 2 && d != 3) throw GeometryError(ErrorKind::Unsupported, "quermassintegrals require d in {2, 3}");
  if (body.lambda() != 1.0) throw GeometryError(ErrorKind::Unsupported, "quermassintegrals require lambda = 1");
  QuermassSet q;
  q.d = d;
  q.A[-1] = volume_lambda(a);
  q.A[0] = perimeter_lambda(a);
  if (d == 3) {
    const IntegralPair mean = a.boundary_integral([&](const CurvaturePoint& p) {
      const std::vector<double> k = principal_curvatures_sphere(body, p.u);
      return 0.5 * (k[0] + k[1]) * p.sigma * p.jac;
    });
    const FunctionalValue& vol = q.A[-1];
    FunctionalValue m = a.value(mean, "mean curvature integral");
    FunctionalValue a1;
    a1.value = (d - 1) * (m.value + vol.value);
    a1.abs_error = (d - 1) * (m.abs_error + vol.abs_error + 1e-6 * std::abs(m.value));
    a1.formula = "A_1 = (d-1)(int H_1 + vol)";
    a1.rule_id = m.rule_id;
    q.A[1] = a1;
  }
  return q;
}

double combined_first_exponent(int d, double p, ExponentMode mode) {
  if (mode == ExponentMode::Corrected) return -(d * d - p) / (2.0 * (d + p));
  return -d * (d - p) / (2.0 * (d + p));
}

double combined_second_exponent(int d, double p) { return d * (1.0 - p) / (2.0 * (d + p)); }

FunctionalValue omega_p_combined(const BodyAnalysis& a, double p, ExponentMode mode) {
  const int d = a.body().dim();
  const double lambda = a.body().lambda();
  const double e0 = p / (d + p);
  const double e1 = combined_first_exponent(d, p, mode);
  const double e2 = combined_second_exponent(d, p);
  const IntegralPair r = a.boundary_integral([&](const CurvaturePoint& c) {
    return std::pow(c.H_e, e0) * std::pow(1.0 + lambda * c.x2, e1) * std::pow(1.0 + lambda * c.h * c.h, e2) * c.jac;
  });
  return a.value(r, mode == ExponentMode::Corrected ? "combined chart integrand (corrected exponent)"
                                                    : "combined chart integrand (printed exponent)");
}

}  // namespace sfa
