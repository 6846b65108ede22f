#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sfa/chart_body.hpp"
#include "sfa/curvature.hpp"
#include "sfa/quadrature.hpp"

namespace sfa {

struct IntegralPair {
  Integral fine;
  Integral coarse;
};

// Quadrature tables of one body at one resolution level: boundary curvature data and
// radial values on a fine rule and its half-resolution companion.
class BodyAnalysis {
 public:
  explicit BodyAnalysis(const ChartBody& body, int level = 2, std::uint64_t seed = 0);
  BodyAnalysis(const BodyAnalysis&) = delete;
  BodyAnalysis& operator=(const BodyAnalysis&) = delete;

  const ChartBody& body() const { return body_; }
  int level() const { return level_; }
  const QuadratureRule& rule(bool coarse = false) const { return coarse ? coarse_ : fine_; }

  const std::vector<CurvaturePoint>& boundary(bool coarse = false) const;
  const std::vector<double>& radials(bool coarse = false) const;

  IntegralPair boundary_integral(const std::function<double(const CurvaturePoint&)>& f) const;
  IntegralPair radial_integral(const std::function<double(const Vec& u, double rho)>& f) const;

  // Error bar from the fine/coarse spread, replicate error, round-off and the fit residual.
  FunctionalValue value(double fine, double coarse, double stat, double abs_sum, const std::string& formula) const;
  FunctionalValue value(const IntegralPair& p, const std::string& formula) const;

 private:
  ChartBody body_;
  int level_;
  QuadratureRule fine_;
  QuadratureRule coarse_;
  mutable std::once_flag boundary_once_[2];
  mutable std::once_flag radial_once_[2];
  mutable std::vector<CurvaturePoint> boundary_[2];
  mutable std::vector<double> radial_[2];
};

}  // namespace sfa
