#pragma once

#include <Eigen/Core>
#include <string>
#include <variant>
#include <vector>

#include "sfa/types.hpp"

namespace sfa {

// h(u) = c.u + sqrt(u^T A u), A symmetric positive definite.
struct EllipsoidRep {
  Eigen::MatrixXd A;
  Eigen::VectorXd c;
};

// Geodesic ball of radius alpha. For lambda > 0 the center is a unit vector in R^{d+1}
// (the model-sphere point is center / sqrt(lambda)); for lambda = 0 it is a point of R^d.
// `chart` caches the exact chart support, an offset ellipsoid.
struct CapRep {
  double alpha = 0.0;
  Eigen::VectorXd center;
  EllipsoidRep chart;
};

// h = sum_k a_k T_k(u_d): a cosine series in the angle to the last chart axis.
struct AxisymmetricRep {
  std::vector<double> a;
};

// h(theta) = a_0 + sum_k a_k cos(k theta) + b_k sin(k theta); b[0] is unused.
struct Fourier2DRep {
  std::vector<double> a;
  std::vector<double> b;
};

// Real orthonormal spherical harmonics, coefficient of Y_lm at index l*l + l + m.
struct Harmonic3DRep {
  int L = 0;
  std::vector<double> c;
};

using SupportRep = std::variant<CapRep, EllipsoidRep, AxisymmetricRep, Fourier2DRep, Harmonic3DRep>;

std::string rep_kind(const SupportRep& rep);
int rep_bandwidth(const SupportRep& rep);

struct SupportDerivs {
  double value;
  Vec grad;
  Mat hess;
};

// One-homogeneous extension H(x) = |x| h(x/|x|) and its derivatives.
double support_value(const SupportRep& rep, int d, const Vec& x);
SupportDerivs support_derivs(const SupportRep& rep, int d, const Vec& x);

// Real spherical harmonic Y_lm and Chebyshev/Fourier basis values at a unit vector.
double harmonic_basis(int l, int m, const Eigen::Vector3d& u);
void harmonic_basis_all(int L, const Eigen::Vector3d& u, std::vector<double>& out);

}  // namespace sfa
