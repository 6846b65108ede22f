#include <gtest/gtest.h>

#include <cmath>

#include "sfa/bodies.hpp"
#include "sfa/centers.hpp"
#include "sfa/geometry.hpp"

namespace {

using namespace sfa;

Eigen::VectorXd point(std::initializer_list<double> v) {
  Eigen::VectorXd p(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) p[i++] = x;
  return p.normalized();
}

TEST(Centers, GhsCenterOfOffsetCapIsItsCenter) {
  for (int d : {2, 3}) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(d + 1);
    c[0] = 0.2;
    c[1] = -0.1;
    c[d] = 1.0;
    c.normalize();
    const ChartBody cap = ChartBody::cap(SpaceForm{d, 1.0}, c, 0.5);
    const CenterResult r = ghs_center(cap);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(r.residual, 1e-8);
    EXPECT_NEAR((r.center - c).norm(), 0.0, 1e-8) << d;
    ASSERT_TRUE(r.recentered.has_value());
    Vec u = Vec::Zero(d);
    u[0] = 1.0;
    EXPECT_NEAR(r.recentered->support(u), std::tan(0.5), 1e-8);
  }
}

TEST(Centers, SymmetricBodyIsCenteredAtOrigin) {
  Fourier2DRep f;
  f.a = {0.5, 0.0, 0.03, 0.0, 0.004};
  f.b = {0.0, 0.0, -0.02, 0.0, 0.001};
  const ChartBody b(Chart::standard(SpaceForm{2, 1.0}), f);
  const CenterResult r = ghs_center(b);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR((r.center - point({0, 0, 1})).norm(), 0.0, 1e-9);
}

TEST(Centers, CenterMinimizesBarycenterObjective) {
  FamilySpec s;
  s.kind = FamilyKind::RandomSmooth2D;
  s.seed = 41;
  const ChartBody b = generate(s, 3);
  CenterOptions o;
  o.build_recentered = false;
  const CenterResult r = ghs_center(b, o);
  ASSERT_TRUE(r.converged);
  const double f0 = barycenter_objective(b, r.center, 3.0, o);
  EXPECT_NEAR(f0, r.objective, 1e-10 * std::abs(f0));
  for (const Eigen::VectorXd& dir : {point({1, 0, 0}), point({0, 1, 0}), point({1, -1, 0})}) {
    const Eigen::VectorXd moved = (r.center + 0.02 * dir).normalized();
    EXPECT_GT(barycenter_objective(b, moved, 3.0, o), f0);
  }
}

TEST(Centers, HAlphaBarycenterAtDPlusOneIsGhsCenter) {
  FamilySpec s;
  s.kind = FamilyKind::OffsetBall;
  s.seed = 5;
  const ChartBody b = generate(s, 0);
  CenterOptions o;
  o.build_recentered = false;
  const CenterResult g = ghs_center(b, o);
  const CenterResult h = h_alpha_barycenter(b, 3.0, o);
  EXPECT_NEAR((g.center - h.center).norm(), 0.0, 1e-8);
}

TEST(Centers, SantaloChartOfCapIsItsCenter) {
  const Eigen::VectorXd c = point({0.1, 0.15, 1.0});
  const ChartBody cap = ChartBody::cap(SpaceForm{2, 1.0}, c, 0.6);
  const CenterResult r = santalo_chart(cap);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR((r.center - c).norm(), 0.0, 1e-7);
}

TEST(Centers, RejectsFlatSpace) {
  const ChartBody b = ChartBody::centered_cap(SpaceForm{2, 0.0}, 0.5);
  EXPECT_THROW(ghs_center(b), GeometryError);
}

}  // namespace
