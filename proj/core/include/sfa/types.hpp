#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace sfa {

// Small fixed-capacity vectors and matrices; every dimension in the library is at most 8.
inline constexpr int kMaxDim = 8;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

enum class ErrorKind {
  Domain,
  OutsideHalfSpace,
  NotConvex,
  NonConvergence,
  FitResidual,
  Unsupported,
  Parse,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what, double residual = 0.0)
      : std::runtime_error(what), kind_(kind), residual_(residual) {}
  ErrorKind kind() const { return kind_; }
  double residual() const { return residual_; }

 private:
  ErrorKind kind_;
  double residual_;
};

// Scalar result with an absolute error bar and provenance.
struct FunctionalValue {
  double value = 0.0;
  double abs_error = 0.0;
  std::string formula;
  std::string rule_id;
};

}  // namespace sfa
