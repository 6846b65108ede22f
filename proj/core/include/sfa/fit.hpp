#pragma once

#include <functional>

#include "sfa/support.hpp"
#include "sfa/types.hpp"

namespace sfa {

class ChartBody;

enum class FitFamily { Fourier2D, Harmonic3D, Axisymmetric };

struct FitOptions {
  double tol = 0.0;        // relative sup-norm residual; 0 selects the family default
  int min_bandwidth = 0;   // 0 selects max(2 x source bandwidth, 8)
  int max_bandwidth = 0;   // 0 selects the family default
};

struct FitResult {
  SupportRep rep;
  double residual = 0.0;
  int bandwidth = 0;
};

FitFamily fit_family_for(const ChartBody& body);
double default_fit_tol(FitFamily family);
int default_max_bandwidth(FitFamily family);

// Quadrature projection of a support function onto the family, doubling the bandwidth
// until the residual on an independent grid is below tolerance.
FitResult fit_support(const std::function<double(const Vec&)>& h, int d, FitFamily family,
                      int source_bandwidth, const FitOptions& options = {});

}  // namespace sfa
