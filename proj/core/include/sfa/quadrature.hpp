#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfa/types.hpp"

namespace sfa {

class ChartBody;

struct GaussLegendre {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

// Cached n-point Gauss-Legendre rule.
const GaussLegendre& gauss_legendre(int n);

enum class RuleKind { Circle, ProductGauss, Zonal, QuasiMonteCarlo };

// Nodes and weights on S^{d-1} in R^d. Weights sum to the sphere measure.
struct QuadratureRule {
  int d = 2;
  RuleKind kind = RuleKind::Circle;
  int n = 0;                // resolution parameter (points, latitude count or points per group)
  int groups = 1;           // replicate groups for quasi-Monte-Carlo
  std::uint64_t seed = 0;
  int degree = 0;           // exact polynomial degree, 0 when not applicable
  std::vector<Vec> nodes;
  std::vector<double> weights;
  std::vector<int> group;   // replicate index per node

  std::size_t size() const { return nodes.size(); }
  std::string id() const;
};

QuadratureRule circle_rule(int n);
// Gauss-Legendre in the height times a trapezoid rule in longitude, n_theta x 2 n_theta nodes.
QuadratureRule s2_rule(int n_theta);
// Rule for integrands depending only on the last coordinate; nodes lie in the (e_1, e_d) plane.
QuadratureRule zonal_rule(int d, int n);
// Randomly shifted Halton points pushed to the sphere, `groups` independent shifts of n points.
QuadratureRule qmc_rule(int d, int n, int groups, std::uint64_t seed);

// Default rule for a body of the given dimension; bandwidth raises the density when needed.
QuadratureRule sphere_rule(int d, int level, int bandwidth = 0, bool zonal = false, std::uint64_t seed = 0);

// Half-resolution companion used for error estimation.
QuadratureRule coarsened(const QuadratureRule& rule);

// Fine-node index of each coarse node when the coarse rule reuses fine nodes; empty otherwise.
std::vector<std::size_t> coarse_subset_indices(const QuadratureRule& rule);

struct Integral {
  double value = 0.0;
  double stat_error = 0.0;  // replicate standard error, zero for deterministic rules
  double abs_sum = 0.0;     // sum of |w f|, for round-off bounds
};

Integral integrate(const QuadratureRule& rule, const std::vector<double>& values);

// Compensated summation.
class NeumaierSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Chart-box sampling estimate of the lambda-volume; abs_error is one standard deviation.
FunctionalValue monte_carlo_volume(const ChartBody& body, std::size_t samples, std::uint64_t seed);

}  // namespace sfa
