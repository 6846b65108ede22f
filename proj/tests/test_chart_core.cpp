#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sfa/geometry.hpp"

namespace {

using namespace sfa;

Vec dir2(double t) {
  Vec u(2);
  u << std::cos(t), std::sin(t);
  return u;
}

ChartBody ellipse(double lambda) {
  EllipsoidRep e;
  e.A = Eigen::MatrixXd(2, 2);
  e.A << 0.64, 0.1, 0.1, 0.25;
  e.c = Eigen::VectorXd(2);
  e.c << 0.05, 0.0;
  return ChartBody(Chart::standard(SpaceForm{2, lambda}), e);
}

// Boundary point x(u) = grad H(u); the radial function in direction v is the distance to the
// boundary, found by marching over a fine set of normals and intersecting segments with the ray.
double brute_radial(const ChartBody& b, const Vec& v) {
  const int n = 20000;
  double best = 0.0;
  Vec prev = b.derivs(dir2(0.0)).grad;
  for (int i = 1; i <= n; ++i) {
    const Vec cur = b.derivs(dir2(2 * oracle::pi * i / n)).grad;
    const double c0 = prev[0] * v[1] - prev[1] * v[0];
    const double c1 = cur[0] * v[1] - cur[1] * v[0];
    if (c0 * c1 <= 0.0 && c0 != c1) {
      const double s = c0 / (c0 - c1);
      const Vec x = prev + s * (cur - prev);
      if (x.dot(v) > 0) best = x.norm();
    }
    prev = cur;
  }
  return best;
}

TEST(Chart, GnomonicRoundTrip) {
  Eigen::VectorXd c(4);
  c << 0.2, -0.3, 0.1, 0.9;
  c.normalize();
  const Chart ch = Chart::at(SpaceForm{3, 1.0}, c);
  EXPECT_NEAR((ch.center() - c).norm(), 0.0, 1e-15);
  EXPECT_NEAR(ch.gnomonic(c).norm(), 0.0, 1e-15);
  Vec x(3);
  x << 0.3, -0.7, 0.2;
  const Eigen::VectorXd p = ch.unproject(x);
  EXPECT_NEAR(p.norm(), 1.0, 1e-15);
  EXPECT_NEAR((ch.gnomonic(p) - x).norm(), 0.0, 1e-14);
  // Chart distance of a point from the center is tan of its geodesic distance.
  EXPECT_NEAR(std::tan(std::acos(p.dot(c))), x.norm(), 1e-13);
}

TEST(Chart, RecenteredMapsCenterToOrigin) {
  const Chart ch = Chart::standard(SpaceForm{2, 1.0});
  Eigen::VectorXd c(3);
  c << 0.3, 0.1, 1.0;
  c.normalize();
  const Chart moved = ch.recentered(c);
  EXPECT_NEAR(moved.gnomonic(c).norm(), 0.0, 1e-15);
}

TEST(ChartBody, CapChartSupportIsTanAlpha) {
  for (double lambda : {0.5, 1.0, 2.0}) {
    const double alpha = 0.4 * max_radius(lambda);
    const ChartBody cap = ChartBody::centered_cap(SpaceForm{3, lambda}, alpha);
    Vec u(3);
    u << 0.48, -0.6, 0.64;
    EXPECT_NEAR(cap.support(u), oracle::tan_l(lambda, alpha), 1e-14);
  }
}

TEST(ChartBody, AuditRejectsNonConvexSupport) {
  Fourier2DRep f;
  f.a = {0.3, 0.0, 0.0, 0.2};
  f.b = {0.0, 0.0, 0.0, 0.0};
  EXPECT_THROW(ChartBody(Chart::standard(SpaceForm{2, 1.0}), f), GeometryError);
  f.a = {0.3, 0.0, 0.0, 0.01};
  EXPECT_NO_THROW(ChartBody(Chart::standard(SpaceForm{2, 1.0}), f));
}

TEST(ChartBody, AuditRejectsNonPositiveSupport) {
  EllipsoidRep e;
  e.A = Eigen::MatrixXd::Identity(2, 2) * 0.01;
  e.c = Eigen::VectorXd(2);
  e.c << 0.5, 0.0;
  EXPECT_THROW(ChartBody(Chart::standard(SpaceForm{2, 1.0}), e), GeometryError);
}

TEST(Radial, CapIsTanAlpha) {
  const ChartBody cap = ChartBody::centered_cap(SpaceForm{2, 1.0}, 0.7);
  for (double t : {0.0, 1.0, 2.5}) {
    EXPECT_NEAR(radial(cap, dir2(t)), std::tan(0.7), 1e-12);
    EXPECT_NEAR(spherical_radial(cap, dir2(t)), 0.7, 1e-12);
  }
}

TEST(Radial, EllipseMatchesBruteForceMarch) {
  const ChartBody e = ellipse(1.0);
  for (double t : {0.1, 1.3, 2.9, 4.4}) {
    const Vec v = dir2(t);
    EXPECT_NEAR(radial(e, v), brute_radial(e, v), 2e-6) << t;
  }
}

TEST(Radial, ProjectedBoundaryPointHasTheSupportValue) {
  const ChartBody e = ellipse(1.0);
  const Vec v = dir2(0.8);
  const RadialPoint rp = radial_detail(e, v);
  EXPECT_NEAR((rp.rho * v).dot(rp.normal), e.support(rp.normal), 1e-12);
}

TEST(Polar, SupportIsReciprocalRadial) {
  const ChartBody e = ellipse(1.0);
  for (double t : {0.2, 2.0, 5.0}) EXPECT_NEAR(polar_support(e, dir2(t)) * radial(e, dir2(t)), 1.0, 1e-13);
}

TEST(Polar, EllipsoidPolarIsInvolution) {
  EllipsoidRep e;
  e.A = Eigen::MatrixXd(2, 2);
  e.A << 0.64, 0.1, 0.1, 0.25;
  e.c = Eigen::VectorXd(2);
  e.c << 0.05, -0.02;
  const EllipsoidRep pp = ellipsoid_polar(ellipsoid_polar(e));
  EXPECT_NEAR((pp.A - e.A).norm(), 0.0, 1e-12);
  EXPECT_NEAR((pp.c - e.c).norm(), 0.0, 1e-12);
}

TEST(Polar, FittedPolarAgreesWithPointwisePolar) {
  Fourier2DRep f;
  f.a = {0.5, 0.02, 0.01, 0.004};
  f.b = {0.0, -0.01, 0.003, 0.002};
  const ChartBody b(Chart::standard(SpaceForm{2, 1.0}), f);
  const ChartBody p = polar_body(b);
  for (double t : {0.3, 1.7, 4.0}) EXPECT_NEAR(p.support(dir2(t)), polar_support(b, dir2(t)), 1e-10);
  EXPECT_LT(p.fit_residual(), 1e-10);
}

TEST(Dual, CapDualIsComplementaryCap) {
  for (double lambda : {0.5, 1.0, 2.0}) {
    const double alpha = 0.3 * max_radius(lambda);
    const ChartBody cap = ChartBody::centered_cap(SpaceForm{2, lambda}, alpha);
    const double beta = max_radius(lambda) - alpha;
    for (double t : {0.0, 2.0}) EXPECT_NEAR(dual_support(cap, dir2(t)), oracle::tan_l(lambda, beta), 1e-12) << lambda;
  }
}

TEST(Recenter, CapMovesToCenteredCap) {
  const SpaceForm s{2, 1.0};
  Eigen::VectorXd c(3);
  c << 0.2, 0.0, 1.0;
  c.normalize();
  const ChartBody off = ChartBody::cap(s, c, 0.5);
  const ChartBody moved = recenter(off, c);
  for (double t : {0.4, 3.0}) EXPECT_NEAR(moved.support(dir2(t)), std::tan(0.5), 1e-12);
}

TEST(Recenter, FittedRecenterMatchesPointwise) {
  Fourier2DRep f;
  f.a = {0.5, 0.02, 0.01, 0.004};
  f.b = {0.0, -0.01, 0.003, 0.002};
  const ChartBody b(Chart::standard(SpaceForm{2, 1.0}), f);
  Eigen::VectorXd c(3);
  c << 0.05, -0.03, 1.0;
  c.normalize();
  const Chart target = b.chart().recentered(c);
  const ChartBody r = recenter(b, target);
  for (double t : {0.3, 2.2}) EXPECT_NEAR(r.support(dir2(t)), recentered_support(b, target, dir2(t)), 1e-10);
}

TEST(Recenter, RadialInChartAgreesWithRecenteredBody) {
  const ChartBody e = ellipse(1.0);
  Eigen::VectorXd c(3);
  c << 0.04, 0.02, 1.0;
  c.normalize();
  const Chart target = e.chart().recentered(c);
  const ChartBody r = recenter(e, target);
  for (double t : {0.5, 3.5}) EXPECT_NEAR(radial_in_chart(e, target, dir2(t)), radial(r, dir2(t)), 1e-10);
}

}  // namespace
