#pragma once

#include <cstdint>
#include <string>

#include "sfa/chart_body.hpp"

namespace sfa {

enum class FamilyKind {
  Cap,
  OffsetBall,
  Ellipsoid,
  Axisymmetric,
  RandomSmooth2D,
  RandomSmooth3D,
  Symmetric2Sphere,
  RoundedPolygon,
};

const char* family_name(FamilyKind kind);
FamilyKind parse_family(const std::string& name);

// Parameters of a seeded body family. Base radius alpha0 is drawn uniformly from
// [alpha_min, alpha_max]; perturbations scale with tan_lambda(alpha0).
struct FamilySpec {
  FamilyKind kind = FamilyKind::RandomSmooth2D;
  int d = 2;
  double lambda = 1.0;
  std::uint64_t seed = 0;
  double alpha_min = 0.4;
  double alpha_max = 0.9;
  double amplitude = 0.05;  // relative size of the series perturbation; 0 gives a centered cap
  int bandwidth = 6;
  double ecc_min = 0.7;     // ellipsoid semi-axis ratios to the base radius
  double ecc_max = 1.3;
  double offset = 0.3;      // center offset as a fraction of the base radius
  int sides = 5;            // rounded_polygon
  double rounding = 0.2;    // rounded_polygon smoothing width in radians
  int max_retries = 50;
};

// Body number `index` of the family; the stream is derived from (seed, index) only.
ChartBody generate(const FamilySpec& spec, std::uint64_t index = 0);

// Per-body generator seed derived from the family seed and the body index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Short human-readable description of the generated body.
std::string describe(const ChartBody& body);

// Regular n-gon with inradius tan_lambda(alpha0) at the chart origin, its curvature-radius
// measure smoothed by a von Mises kernel of width `rounding`.
ChartBody rounded_polygon(double lambda, int sides, double alpha0, double rounding);

}  // namespace sfa
