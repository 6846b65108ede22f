#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sfa/analysis.hpp"
#include "sfa/curvature.hpp"
#include "sfa/functionals.hpp"

namespace {

using namespace sfa;

Vec unit(std::initializer_list<double> v) {
  Vec u(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) u[i++] = x;
  return u / u.norm();
}

ChartBody axis_ellipse(double a, double b, double lambda = 1.0) {
  EllipsoidRep e;
  e.A = Eigen::MatrixXd::Zero(2, 2);
  e.A(0, 0) = a * a;
  e.A(1, 1) = b * b;
  e.c = Eigen::VectorXd::Zero(2);
  return ChartBody(Chart::standard(SpaceForm{2, lambda}), e);
}

TEST(Curvature, EuclideanEllipseCurvature) {
  const double a = 0.8, b = 0.5;
  const ChartBody e = axis_ellipse(a, b);
  for (double t : {0.0, 0.7, 2.0}) {
    const Vec u = unit({std::cos(t), std::sin(t)});
    const double h = std::sqrt(a * a * u[0] * u[0] + b * b * u[1] * u[1]);
    EXPECT_NEAR(gauss_kronecker_euclidean(e, u), h * h * h / (a * a * b * b), 1e-12);
  }
}

TEST(Curvature, CapCurvatureIsCotangentPower) {
  for (int d : {2, 3, 5}) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      const double alpha = 0.35 * max_radius(lambda);
      const ChartBody cap = ChartBody::centered_cap(SpaceForm{d, lambda}, alpha);
      Vec u = Vec::Zero(d);
      u[0] = 0.6;
      u[d - 1] = 0.8;
      const double k = oracle::cos_l(lambda, alpha) / oracle::sin_l(lambda, alpha);
      EXPECT_LT(oracle::rel(spherical_gk(cap, u), std::pow(k, d - 1)), 1e-12) << d << " " << lambda;
    }
  }
}

TEST(Curvature, PrincipalCurvaturesOfCap) {
  for (int d : {2, 3}) {
    const double alpha = 0.6;
    const ChartBody cap = ChartBody::centered_cap(SpaceForm{d, 1.0}, alpha);
    Vec u = Vec::Zero(d);
    u[0] = 1.0;
    for (double k : principal_curvatures_sphere(cap, u)) EXPECT_NEAR(k, 1.0 / std::tan(alpha), 1e-6);
  }
}

TEST(Curvature, GaussKroneckerIsProductOfPrincipalCurvatures) {
  EllipsoidRep e;
  e.A = Eigen::MatrixXd(3, 3);
  e.A << 0.36, 0.05, 0.0, 0.05, 0.25, 0.02, 0.0, 0.02, 0.16;
  e.c = Eigen::VectorXd(3);
  e.c << 0.05, -0.02, 0.03;
  const ChartBody b(Chart::standard(SpaceForm{3, 1.0}), e);
  for (const Vec& u : {unit({1, 2, 3}), unit({-1, 0.5, 0.2}), unit({0.1, -1, -2})}) {
    const std::vector<double> k = principal_curvatures_sphere(b, u);
    ASSERT_EQ(k.size(), 2u);
    EXPECT_NEAR(k[0] * k[1], spherical_gk(b, u), 1e-6 * spherical_gk(b, u));
  }
}

TEST(Curvature, BoundaryDataAreConsistent) {
  const ChartBody e = axis_ellipse(0.8, 0.5, 2.0);
  const Vec u = unit({0.3, 0.9});
  const CurvaturePoint c = curvature_point(e, u);
  EXPECT_NEAR(c.x.dot(u), c.h, 1e-14);
  EXPECT_NEAR(c.x.squaredNorm(), c.x2, 1e-14);
  EXPECT_NEAR(c.H_e * c.jac, 1.0, 1e-14);
  const double lam = 2.0;
  EXPECT_NEAR(c.f, std::sqrt((lam + c.h * c.h) / (1 + lam * c.h * c.h)), 1e-14);
  EXPECT_NEAR(c.H_lambda, c.H_e * std::pow((1 + lam * c.x2) / (1 + lam * c.h * c.h), 1.5), 1e-12);
}

TEST(Curvature, CombinedExponentReproducesFloatingArea) {
  EllipsoidRep e;
  e.A = Eigen::MatrixXd(2, 2);
  e.A << 0.64, 0.1, 0.1, 0.25;
  e.c = Eigen::VectorXd(2);
  e.c << 0.05, 0.0;
  const ChartBody b(Chart::standard(SpaceForm{2, 1.0}), e);
  const BodyAnalysis a(b);
  for (double p : {0.5, 1.0, 3.0}) {
    EXPECT_LT(oracle::rel(omega_p_combined(a, p, ExponentMode::Corrected).value, omega_p_lambda(a, p).value), 1e-12);
    EXPECT_GT(oracle::rel(omega_p_combined(a, p, ExponentMode::AsPrinted).value, omega_p_lambda(a, p).value), 1e-4);
  }
  EXPECT_NEAR(combined_first_exponent(2, 1.0, ExponentMode::Corrected), (1.0 - 4.0) / 6.0, 1e-15);
}

TEST(Curvature, QuermassintegralsOfCapInS3) {
  const double alpha = 0.5;
  const ChartBody cap = ChartBody::centered_cap(SpaceForm{3, 1.0}, alpha);
  const BodyAnalysis a(cap);
  const QuermassSet q = quermassintegrals(a);
  const oracle::Cap c{3, 1.0, alpha};
  // A_{-1} is the volume, A_0 the boundary area.
  EXPECT_LT(oracle::rel(q.A.at(-1).value, c.volume()), 1e-12);
  EXPECT_LT(oracle::rel(q.A.at(0).value, c.perimeter()), 1e-12);
  // A_1 = 2 int H_1 + 2 vol, with normalized mean curvature cot(alpha) on the boundary sphere.
  EXPECT_LT(oracle::rel(q.A.at(1).value, 2.0 / std::tan(alpha) * c.perimeter() + 2.0 * c.volume()), 1e-9);
}

}  // namespace
