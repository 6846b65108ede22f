#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "sfa/bodies.hpp"
#include "sfa/geometry.hpp"

namespace {

using namespace sfa;

Vec dir2(double t) {
  Vec u(2);
  u << std::cos(t), std::sin(t);
  return u;
}

Vec random_dir(int d, int k) {
  Vec u(d);
  for (int i = 0; i < d; ++i) u[i] = std::sin(1.7 * (i + 1) * (k + 1) + 0.3 * i);
  return u.normalized();
}

const FamilyKind kAll[] = {FamilyKind::Cap,           FamilyKind::OffsetBall,     FamilyKind::Ellipsoid,
                           FamilyKind::Axisymmetric,  FamilyKind::RandomSmooth2D, FamilyKind::RandomSmooth3D,
                           FamilyKind::Symmetric2Sphere, FamilyKind::RoundedPolygon};

int family_dim(FamilyKind k) { return k == FamilyKind::RandomSmooth3D ? 3 : k == FamilyKind::Axisymmetric ? 4 : 2; }

TEST(Bodies, FamilyNamesRoundTrip) {
  for (FamilyKind k : kAll) EXPECT_EQ(parse_family(family_name(k)), k);
  EXPECT_THROW(parse_family("blob"), GeometryError);
}

TEST(Bodies, DerivedSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 20; ++s)
    for (std::uint64_t i = 0; i < 50; ++i) seen.insert(derive_seed(s, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Bodies, GenerationIsDeterministicPerIndex) {
  for (FamilyKind k : kAll) {
    FamilySpec s;
    s.kind = k;
    s.d = family_dim(k);
    s.seed = 123;
    const ChartBody a = generate(s, 4), b = generate(s, 4), c = generate(s, 5);
    const Vec u = random_dir(s.d, 1);
    EXPECT_EQ(a.support(u), b.support(u)) << family_name(k);
    if (k != FamilyKind::RoundedPolygon || s.alpha_min != s.alpha_max) EXPECT_NE(a.support(u), c.support(u)) << family_name(k);
  }
}

TEST(Bodies, GeneratedBodiesPassTheAudit) {
  for (FamilyKind k : kAll) {
    FamilySpec s;
    s.kind = k;
    s.d = family_dim(k);
    s.seed = 9;
    for (std::uint64_t i = 0; i < 5; ++i) {
      const ChartBody b = generate(s, i);
      EXPECT_EQ(b.dim(), s.d);
      EXPECT_GT(b.audit().min_support, 0.0) << family_name(k);
      EXPECT_GT(b.audit().min_eigen_ratio, 0.0) << family_name(k);
    }
  }
}

TEST(Bodies, ZeroAmplitudeGivesCenteredCap) {
  FamilySpec s;
  s.kind = FamilyKind::RandomSmooth2D;
  s.amplitude = 0.0;
  s.alpha_min = 0.5;
  s.alpha_max = 0.5;
  const ChartBody b = generate(s, 0);
  for (double t : {0.0, 1.0, 4.0}) EXPECT_NEAR(b.support(dir2(t)), std::tan(0.5), 1e-15);
}

TEST(Bodies, CapFamilyStaysWithinRadiusRange) {
  FamilySpec s;
  s.kind = FamilyKind::Cap;
  s.d = 3;
  s.alpha_min = 0.3;
  s.alpha_max = 0.6;
  s.offset = 0.0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const double rho = radial(generate(s, i), random_dir(3, static_cast<int>(i)));
    EXPECT_GE(std::atan(rho), 0.3 - 1e-12);
    EXPECT_LE(std::atan(rho), 0.6 + 1e-12);
  }
}

TEST(Bodies, SymmetricFamilyIsOriginSymmetric) {
  FamilySpec s;
  s.kind = FamilyKind::Symmetric2Sphere;
  s.seed = 3;
  s.amplitude = 0.1;
  const ChartBody b = generate(s, 2);
  for (double t : {0.2, 1.1, 2.9}) EXPECT_NEAR(b.support(dir2(t)), b.support(dir2(t + oracle::pi)), 1e-15);
}

TEST(Bodies, RoundedPolygonApproachesRegularPolygon) {
  const int n = 5;
  const double alpha = 0.6, r = std::tan(alpha), vertex = r / std::cos(oracle::pi / n);
  // Facet normals at multiples of 2 pi / n, vertex normals in between; deviations shrink with the rounding.
  double facet_err = oracle::inf, vertex_err = oracle::inf;
  for (double rounding : {0.4, 0.3, 0.2}) {
    const ChartBody b = rounded_polygon(1.0, n, alpha, rounding);
    const double fe = std::abs(b.support(dir2(0.0)) - r), ve = std::abs(b.support(dir2(oracle::pi / n)) - vertex);
    EXPECT_LT(fe, facet_err);
    EXPECT_LT(ve, vertex_err);
    facet_err = fe;
    vertex_err = ve;
    for (double t : {0.1, 0.5}) EXPECT_NEAR(b.support(dir2(t)), b.support(dir2(t + 2 * oracle::pi / n)), 1e-12);
    // The mean support is the Euclidean perimeter over 2 pi.
    const auto& f = std::get<Fourier2DRep>(b.rep());
    EXPECT_NEAR(2 * oracle::pi * f.a[0], 2 * n * r * std::tan(oracle::pi / n), 1e-12);
  }
  EXPECT_LT(facet_err, 0.06 * r);
  EXPECT_LT(vertex_err, 0.01 * r);
  EXPECT_THROW(rounded_polygon(1.0, 2, alpha, 0.2), GeometryError);
}

TEST(Bodies, RejectsBadParameters) {
  FamilySpec s;
  s.alpha_max = 2.0;
  EXPECT_THROW(generate(s, 0), GeometryError);
  s = FamilySpec{};
  s.kind = FamilyKind::RandomSmooth3D;
  s.d = 2;
  EXPECT_THROW(generate(s, 0), GeometryError);
}

TEST(Bodies, DescribeNamesRepresentation) {
  FamilySpec s;
  EXPECT_NE(describe(generate(s, 0)).find("fourier2d"), std::string::npos);
}

}  // namespace
