#include "sfa/chart_body.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "sfa/quadrature.hpp"

namespace sfa {

Chart Chart::standard(const SpaceForm& space) {
  space.validate();
  Chart c;
  c.space_ = space;
  c.frame_ = Eigen::MatrixXd::Identity(space.d + 1, space.d + 1);
  c.origin_ = Eigen::VectorXd::Zero(space.d);
  return c;
}

Chart Chart::at(const SpaceForm& space, const Eigen::VectorXd& center) {
  Chart c = standard(space);
  if (space.euclidean()) {
    if (center.size() != space.d) throw GeometryError(ErrorKind::Domain, "Euclidean chart origin must have d entries");
    c.origin_ = center;
    return c;
  }
  return c.recentered(center);
}

Eigen::VectorXd Chart::center() const {
  if (space_.euclidean()) return origin_;
  return frame_.col(space_.d);
}

Vec Chart::gnomonic(const Eigen::VectorXd& point) const {
  const int d = space_.d;
  if (space_.euclidean()) {
    if (point.size() != d) throw GeometryError(ErrorKind::Domain, "point must have d entries");
    return point - origin_;
  }
  if (point.size() != d + 1) throw GeometryError(ErrorKind::Domain, "point must have d+1 entries");
  const Eigen::VectorXd xi = frame_.transpose() * point.normalized();
  if (!(xi[d] > 0.0)) throw GeometryError(ErrorKind::OutsideHalfSpace, "point outside the open half-space of the chart center");
  return xi.head(d) / (xi[d] * std::sqrt(space_.lambda));
}

Eigen::VectorXd Chart::unproject(const Vec& x) const {
  const int d = space_.d;
  if (space_.euclidean()) return origin_ + Eigen::VectorXd(x);
  Eigen::VectorXd y(d + 1);
  y.head(d) = std::sqrt(space_.lambda) * x;
  y[d] = 1.0;
  return (frame_ * y).normalized();
}

Chart Chart::recentered(const Eigen::VectorXd& new_center) const {
  Chart c = *this;
  const int d = space_.d;
  if (space_.euclidean()) {
    c.origin_ = new_center;
    return c;
  }
  if (new_center.size() != d + 1) throw GeometryError(ErrorKind::Domain, "center must have d+1 entries");
  const Eigen::VectorXd a = frame_.col(d);
  const Eigen::VectorXd b = new_center.normalized();
  const double ab = a.dot(b);
  if (!(ab > -1.0 + 1e-12)) throw GeometryError(ErrorKind::OutsideHalfSpace, "antipodal recentering");
  const Eigen::VectorXd s = a + b;
  const Eigen::MatrixXd R = Eigen::MatrixXd::Identity(d + 1, d + 1) - s * s.transpose() / (1.0 + ab) + 2.0 * b * a.transpose();
  c.frame_ = R * frame_;
  return c;
}

Chart Chart::with_lambda(double lambda) const {
  if (space_.euclidean() || !(lambda > 0.0)) throw GeometryError(ErrorKind::Domain, "frame transfer needs positive curvatures");
  Chart c = *this;
  c.space_.lambda = lambda;
  c.space_.validate();
  return c;
}

Mat tangent_basis(const Vec& u) {
  const int d = static_cast<int>(u.size());
  Vec v = u;
  const double s = u[d - 1] >= 0.0 ? 1.0 : -1.0;
  v[d - 1] += s;
  const Mat P = Mat::Identity(d, d) - 2.0 * v * v.transpose() / v.squaredNorm();
  return P.leftCols(d - 1);
}

Mat support_form(const SupportDerivs& s, const Mat& basis) {
  return basis.transpose() * s.hess * basis;
}

EllipsoidRep cap_chart_support(const Chart& chart, const Eigen::VectorXd& center, double alpha) {
  const SpaceForm& sp = chart.space();
  const int d = sp.d;
  if (!(alpha > 0.0) || alpha >= max_radius(sp.lambda)) {
    throw GeometryError(ErrorKind::Domain, "cap radius outside (0, pi/(2 sqrt(lambda)))");
  }
  EllipsoidRep e;
  if (sp.euclidean()) {
    e.A = alpha * alpha * Eigen::MatrixXd::Identity(d, d);
    e.c = Eigen::VectorXd(chart.gnomonic(center));
    return e;
  }
  if (center.size() != d + 1) throw GeometryError(ErrorKind::Domain, "cap center must have d+1 entries");
  const Eigen::VectorXd xi = chart.frame().transpose() * center.normalized();
  const Eigen::VectorXd q = xi.head(d);
  const double q0 = xi[d];
  const double c = std::cos(std::sqrt(sp.lambda) * alpha);
  const Eigen::MatrixXd M = c * c * Eigen::MatrixXd::Identity(d, d) - q * q.transpose();
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() != Eigen::Success || q0 <= 0.0) {
    throw GeometryError(ErrorKind::OutsideHalfSpace, "cap not contained in the open half-space of the chart center");
  }
  const Eigen::MatrixXd Minv = llt.solve(Eigen::MatrixXd::Identity(d, d));
  const Eigen::VectorXd m = q0 * Minv * q;
  const double gamma = q0 * q0 - c * c + q0 * q0 * q.dot(Minv * q);
  const double sl = std::sqrt(sp.lambda);
  e.A = gamma * Minv / sp.lambda;
  e.c = m / sl;
  return e;
}

ChartBody::ChartBody(const Chart& chart, SupportRep rep, double fit_residual)
    : chart_(chart), rep_(std::move(rep)), fit_residual_(fit_residual) {
  chart_.space().validate();
  run_audit();
}

ChartBody ChartBody::cap(const Chart& chart, const Eigen::VectorXd& center, double alpha) {
  CapRep c;
  c.alpha = alpha;
  c.center = chart.space().euclidean() ? center : Eigen::VectorXd(center.normalized());
  c.chart = cap_chart_support(chart, c.center, alpha);
  return ChartBody(chart, c);
}

ChartBody ChartBody::cap(const SpaceForm& space, const Eigen::VectorXd& center, double alpha) {
  return cap(Chart::at(space, center), center, alpha);
}

ChartBody ChartBody::centered_cap(const SpaceForm& space, double alpha) {
  const Chart chart = Chart::standard(space);
  return cap(chart, chart.center(), alpha);
}

double ChartBody::support(const Vec& u) const { return support_value(rep_, dim(), u); }

SupportDerivs ChartBody::derivs(const Vec& u) const { return support_derivs(rep_, dim(), u); }

ChartBody ChartBody::with_lambda(double lambda) const {
  SpaceForm sp = space();
  sp.lambda = lambda;
  const Chart chart = lambda > 0.0 && !space().euclidean() ? chart_.with_lambda(lambda) : Chart::standard(sp);
  SupportRep rep = rep_;
  if (const auto* c = std::get_if<CapRep>(&rep_)) rep = c->chart;
  return ChartBody(chart, rep, fit_residual_);
}

namespace {

bool ellipsoid_is_zonal(const EllipsoidRep& e) {
  const int d = static_cast<int>(e.c.size());
  const double scale = e.A.cwiseAbs().maxCoeff() + e.c.cwiseAbs().maxCoeff();
  const double tol = 1e-13 * scale;
  for (int i = 0; i + 1 < d; ++i) {
    if (std::abs(e.c[i]) > tol) return false;
    if (std::abs(e.A(i, i) - e.A(0, 0)) > tol) return false;
    for (int j = 0; j < d; ++j) {
      if (j != i && std::abs(e.A(i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

void ChartBody::run_audit() {
  const int d = dim();
  const EllipsoidRep* ell = nullptr;
  if (const auto* e = std::get_if<EllipsoidRep>(&rep_)) ell = e;
  if (const auto* c = std::get_if<CapRep>(&rep_)) ell = &c->chart;
  if (ell) {
    if (ell->A.rows() != d || ell->A.cols() != d || ell->c.size() != d) {
      throw GeometryError(ErrorKind::Domain, "ellipsoid dimensions do not match d");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (ell->A + ell->A.transpose()));
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0)) throw GeometryError(ErrorKind::NotConvex, "ellipsoid matrix is not positive definite", lo);
    const double interior = ell->c.dot(es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
                                       es.eigenvectors().transpose() * ell->c);
    if (!(interior < 1.0)) {
      throw GeometryError(ErrorKind::NotConvex, "chart origin is not interior to the body", interior);
    }
    audit_.min_support = std::sqrt(lo) * (1.0 - std::sqrt(interior));
    audit_.min_eigen_ratio = lo / hi;
    audit_.max_boundary_radius = ell->c.norm() + std::sqrt(hi);
    audit_.nodes = 0;
    properness_bound_ = audit_.max_boundary_radius;
    zonal_ = d > 2 && ellipsoid_is_zonal(*ell);
    return;
  }
  if (const auto* a = std::get_if<AxisymmetricRep>(&rep_)) {
    if (a->a.empty()) throw GeometryError(ErrorKind::Domain, "empty axisymmetric profile");
    zonal_ = d > 2;
  } else if (const auto* f = std::get_if<Fourier2DRep>(&rep_)) {
    if (d != 2) throw GeometryError(ErrorKind::Unsupported, "Fourier representation requires d = 2");
    if (f->a.empty()) throw GeometryError(ErrorKind::Domain, "empty Fourier series");
    zonal_ = false;
  } else if (const auto* h = std::get_if<Harmonic3DRep>(&rep_)) {
    if (d != 3) throw GeometryError(ErrorKind::Unsupported, "spherical harmonic representation requires d = 3");
    if (static_cast<int>(h->c.size()) != (h->L + 1) * (h->L + 1)) {
      throw GeometryError(ErrorKind::Domain, "harmonic coefficient count must be (L+1)^2");
    }
    zonal_ = false;
  }
  const int B = bandwidth();
  QuadratureRule base = sphere_rule(d, 2, B, zonal_);
  QuadratureRule grid;
  switch (base.kind) {
    case RuleKind::Circle: grid = circle_rule(4 * base.n); break;
    case RuleKind::ProductGauss: grid = s2_rule(2 * base.n); break;
    case RuleKind::Zonal: grid = zonal_rule(d, 4 * base.n); break;
    case RuleKind::QuasiMonteCarlo: grid = qmc_rule(d, 4 * base.n, base.groups, 1); break;
  }
  double min_h = kInf;
  double min_ratio = kInf;
  double max_x = 0.0;
  for (const Vec& u : grid.nodes) {
    const SupportDerivs s = derivs(u);
    if (!(s.value > 0.0)) {
      throw GeometryError(ErrorKind::NotConvex, "support function is not positive", s.value);
    }
    const Mat S = support_form(s, tangent_basis(u));
    const double ev = d == 2 ? S(0, 0) : Eigen::SelfAdjointEigenSolver<Mat>(S, Eigen::EigenvaluesOnly).eigenvalues()[0];
    if (!(ev > 1e-8 * s.value)) {
      throw GeometryError(ErrorKind::NotConvex, "support Hessian form is not positive definite", ev / s.value);
    }
    min_h = std::min(min_h, s.value);
    min_ratio = std::min(min_ratio, ev / s.value);
    max_x = std::max(max_x, s.grad.norm());
  }
  audit_.min_support = min_h;
  audit_.min_eigen_ratio = min_ratio;
  audit_.max_boundary_radius = max_x;
  audit_.nodes = grid.size();
  properness_bound_ = 1.05 * max_x;
}

}  // namespace sfa
