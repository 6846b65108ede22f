#pragma once

#include <Eigen/Core>

#include "sfa/space_form.hpp"
#include "sfa/support.hpp"
#include "sfa/types.hpp"

namespace sfa {

// Gnomonic chart of S^d(lambda) at a center, or a translated copy of R^d when lambda = 0.
// Points of S^d(lambda) are passed as unit vectors of R^{d+1}.
class Chart {
 public:
  Chart() = default;
  static Chart standard(const SpaceForm& space);
  static Chart at(const SpaceForm& space, const Eigen::VectorXd& center);

  const SpaceForm& space() const { return space_; }
  // Orthonormal frame whose last column is the center (lambda > 0).
  const Eigen::MatrixXd& frame() const { return frame_; }
  Eigen::VectorXd center() const;

  Vec gnomonic(const Eigen::VectorXd& point) const;
  Eigen::VectorXd unproject(const Vec& x) const;

  // Same space, centered at `new_center`, frame moved by the minimal rotation.
  Chart recentered(const Eigen::VectorXd& new_center) const;
  // Same frame read in a space form of another positive curvature.
  Chart with_lambda(double lambda) const;

 private:
  SpaceForm space_;
  Eigen::MatrixXd frame_;
  Eigen::VectorXd origin_;
};

struct AuditReport {
  double min_support = 0.0;
  double min_eigen_ratio = 0.0;  // smallest eigenvalue of the support Hessian form divided by h
  double max_boundary_radius = 0.0;
  std::size_t nodes = 0;
};

// A proper convex body of class C^2_+ given by the support function of its chart image.
class ChartBody {
 public:
  ChartBody(const Chart& chart, SupportRep rep, double fit_residual = 0.0);

  static ChartBody cap(const SpaceForm& space, const Eigen::VectorXd& center, double alpha);
  static ChartBody cap(const Chart& chart, const Eigen::VectorXd& center, double alpha);
  static ChartBody centered_cap(const SpaceForm& space, double alpha);

  int dim() const { return chart_.space().d; }
  double lambda() const { return chart_.space().lambda; }
  const SpaceForm& space() const { return chart_.space(); }
  const Chart& chart() const { return chart_; }
  const SupportRep& rep() const { return rep_; }

  double support(const Vec& u) const;
  SupportDerivs derivs(const Vec& u) const;

  double properness_bound() const { return properness_bound_; }
  double fit_residual() const { return fit_residual_; }
  const AuditReport& audit() const { return audit_; }
  bool zonal() const { return zonal_; }
  int bandwidth() const { return rep_bandwidth(rep_); }

  // The same chart support read in a space form of another curvature.
  ChartBody with_lambda(double lambda) const;

 private:
  void run_audit();

  Chart chart_;
  SupportRep rep_;
  double fit_residual_ = 0.0;
  double properness_bound_ = 0.0;
  bool zonal_ = false;
  AuditReport audit_;
};

// Chart support of the cap with the given center and radius, as an offset ellipsoid.
EllipsoidRep cap_chart_support(const Chart& chart, const Eigen::VectorXd& center, double alpha);

// Orthonormal basis of the orthogonal complement of a unit vector, as columns.
Mat tangent_basis(const Vec& u);

// Support Hessian form B^T D^2H B restricted to the tangent space at u.
Mat support_form(const SupportDerivs& s, const Mat& basis);

}  // namespace sfa
