#include "sfa/geometry.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>
#include <string>

#include "sfa/space_form.hpp"

namespace sfa {

namespace {

// Minimizes H(e + w) - z.(e + w) over w orthogonal to e.
RadialPoint minimize_ray(const ChartBody& body, const Vec& z, const Vec& e) {
  const int d = body.dim();
  const Mat B = tangent_basis(e);
  Vec w = Vec::Zero(d);
  auto phi = [&](const Vec& v) { return body.support(v) - z.dot(v); };
  double f = phi(e);
  double dec2 = kInf;
  for (int it = 0; it < 80; ++it) {
    const Vec v = e + w;
    const SupportDerivs s = body.derivs(v);
    f = s.value - z.dot(v);
    const Vec g = B.transpose() * (s.grad - z);
    const Mat Hs = B.transpose() * s.hess * B;
    Eigen::LLT<Mat> llt(Hs);
    Vec step;
    if (llt.info() == Eigen::Success) {
      step = -llt.solve(g);
    } else {
      step = -g;
    }
    dec2 = -g.dot(step);
    if (!(f > 0.0)) {
      throw GeometryError(ErrorKind::NotConvex, "star center is not interior to the body", f);
    }
    if (dec2 <= 1e-26 * f * f) {
      RadialPoint out;
      out.rho = f;
      out.normal = v.normalized();
      out.iterations = it;
      return out;
    }
    double t = 1.0;
    Vec dw = B * step;
    if (dec2 <= 1e-12 * f * f && llt.info() == Eigen::Success) {
      // Below the resolution of f: take the Newton step.
      w += dw;
      continue;
    }
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      const Vec trial = w + t * dw;
      const double ft = phi(e + trial);
      if (ft <= f - 0.25 * t * dec2 || (ft <= f && dec2 <= 1e-20 * f * f)) {
        w = trial;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (dec2 <= 1e-20 * f * f) {
        RadialPoint out;
        out.rho = f;
        out.normal = (e + w).normalized();
        out.iterations = it;
        return out;
      }
      break;
    }
  }
  throw GeometryError(ErrorKind::NonConvergence, "radial minimization did not converge", std::sqrt(std::max(dec2, 0.0)) / std::abs(f));
}

bool is_ellipsoid(const ChartBody& body, EllipsoidRep* out) {
  if (const auto* e = std::get_if<EllipsoidRep>(&body.rep())) {
    if (out) *out = *e;
    return true;
  }
  if (const auto* c = std::get_if<CapRep>(&body.rep())) {
    if (out) *out = c->chart;
    return true;
  }
  return false;
}

Vec tangent_lift(const Chart& at, const Vec& u) {
  const int d = at.space().d;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(d + 1);
  y.head(d) = u;
  return at.frame() * y;
}

ChartBody refit(const ChartBody& source, const Chart& chart, const std::function<double(const Vec&)>& h,
                const FitOptions& options) {
  const FitFamily family = fit_family_for(source);
  const FitResult r = fit_support(h, source.dim(), family, source.bandwidth(), options);
  return ChartBody(chart, r.rep, source.fit_residual() + r.residual);
}

}  // namespace

RadialPoint radial_detail(const ChartBody& body, const Vec& u) {
  return minimize_ray(body, Vec::Zero(body.dim()), u);
}

double radial(const ChartBody& body, const Vec& u) { return radial_detail(body, u).rho; }

RadialPoint radial_from(const ChartBody& body, const Vec& z, const Vec& u) { return minimize_ray(body, z, u); }

double spherical_radial(const ChartBody& body, const Vec& u) { return arctan_lambda(body.lambda(), radial(body, u)); }

double radial_in_chart(const ChartBody& body, const Chart& at, const Vec& u) {
  const int d = body.dim();
  const Chart& own = body.chart();
  if (body.space().euclidean()) {
    const Vec z = own.gnomonic(at.center());
    return radial_from(body, z, u).rho;
  }
  const double sl = std::sqrt(body.lambda());
  const Eigen::VectorXd v = at.center();
  const Eigen::VectorXd t = tangent_lift(at, u);
  const Eigen::VectorXd xv = own.frame().transpose() * v;
  const Eigen::VectorXd xt = own.frame().transpose() * t;
  if (!(xv[d] > 0.0)) throw GeometryError(ErrorKind::OutsideHalfSpace, "center outside the body's chart");
  const Vec z = xv.head(d) / (xv[d] * sl);
  Vec e = xt.head(d) * xv[d] - xv.head(d) * xt[d];
  e /= e.norm();
  const double rho = radial_from(body, z, e).rho;
  const Vec w = z + rho * e;
  const Eigen::VectorXd p = own.unproject(w);
  return p.dot(t) / (p.dot(v) * sl);
}

double polar_support(const ChartBody& body, const Vec& u) { return 1.0 / radial(body, u); }

double dual_support(const ChartBody& body, const Vec& u) {
  if (body.space().euclidean()) throw GeometryError(ErrorKind::Unsupported, "no dual body for lambda = 0");
  return 1.0 / (body.lambda() * radial(body, -u));
}

double recentered_support(const ChartBody& body, const Chart& target, const Vec& u) {
  const int d = body.dim();
  const Chart& own = body.chart();
  if (body.space().euclidean()) {
    const Vec z = own.gnomonic(target.center());
    return body.support(u) - z.dot(u);
  }
  const double sl = std::sqrt(body.lambda());
  const Eigen::MatrixXd M = own.frame().transpose() * target.frame();
  Eigen::VectorXd u0 = Eigen::VectorXd::Zero(d + 1);
  u0.head(d) = u;
  const Eigen::VectorXd a0 = M * u0;
  const Eigen::VectorXd a1 = -sl * M.col(d);
  double t = 0.0;
  for (int it = 0; it < 100; ++it) {
    const Eigen::VectorXd n = a0 + t * a1;
    const SupportDerivs s = body.derivs(n.head(d));
    const double phi = sl * s.value + n[d];
    const double dphi = sl * s.grad.dot(a1.head(d)) + a1[d];
    if (!(dphi < 0.0)) throw GeometryError(ErrorKind::OutsideHalfSpace, "new center is not interior to the body");
    const double step = phi / dphi;
    t -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(t))) return t;
  }
  throw GeometryError(ErrorKind::NonConvergence, "recentered support did not converge");
}

EllipsoidRep ellipsoid_polar(const EllipsoidRep& e) {
  const Eigen::MatrixXd B = e.A - e.c * e.c.transpose();
  Eigen::LLT<Eigen::MatrixXd> llt(B);
  if (llt.info() != Eigen::Success) throw GeometryError(ErrorKind::NotConvex, "origin not interior to ellipsoid");
  const Eigen::VectorXd Bc = llt.solve(e.c);
  EllipsoidRep out;
  out.c = -Bc;
  out.A = (1.0 + e.c.dot(Bc)) * llt.solve(Eigen::MatrixXd::Identity(e.A.rows(), e.A.cols()));
  out.A = 0.5 * (out.A + out.A.transpose());
  return out;
}

EllipsoidRep ellipsoid_recenter(const EllipsoidRep& e, const Chart& from, const Chart& to) {
  const int d = from.space().d;
  EllipsoidRep out;
  if (from.space().euclidean()) {
    out.A = e.A;
    out.c = e.c - Eigen::VectorXd(from.gnomonic(to.center()));
    return out;
  }
  const double lambda = from.space().lambda;
  const double sl = std::sqrt(lambda);
  const Eigen::MatrixXd Q = (e.A * lambda).inverse();  // in z = sqrt(lambda) x coordinates
  const Eigen::VectorXd m = sl * e.c;
  Eigen::MatrixXd Qt(d + 1, d + 1);
  Qt.topLeftCorner(d, d) = Q;
  Qt.topRightCorner(d, 1) = -Q * m;
  Qt.bottomLeftCorner(1, d) = (-Q * m).transpose();
  Qt(d, d) = m.dot(Q * m) - 1.0;
  const Eigen::MatrixXd M = to.frame().transpose() * from.frame();
  const Eigen::MatrixXd Qn = M * Qt * M.transpose();
  const Eigen::MatrixXd P = 0.5 * (Qn.topLeftCorner(d, d) + Qn.topLeftCorner(d, d).transpose());
  const Eigen::VectorXd r = Qn.topRightCorner(d, 1);
  const double t = Qn(d, d);
  Eigen::LLT<Eigen::MatrixXd> llt(P);
  if (llt.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::OutsideHalfSpace, "body not contained in the half-space of the new center");
  }
  const Eigen::VectorXd Pr = llt.solve(r);
  const double scale = r.dot(Pr) - t;
  out.c = -Pr / sl;
  out.A = scale * llt.solve(Eigen::MatrixXd::Identity(d, d)) / lambda;
  out.A = 0.5 * (out.A + out.A.transpose());
  return out;
}

ChartBody polar_body(const ChartBody& body, const FitOptions& options) {
  EllipsoidRep e;
  if (is_ellipsoid(body, &e)) return ChartBody(body.chart(), ellipsoid_polar(e));
  return refit(body, body.chart(), [&](const Vec& u) { return polar_support(body, u); }, options);
}

ChartBody dual_body(const ChartBody& body, const FitOptions& options) {
  if (body.space().euclidean()) throw GeometryError(ErrorKind::Unsupported, "no dual body for lambda = 0");
  if (const auto* c = std::get_if<CapRep>(&body.rep())) {
    return ChartBody::cap(body.chart(), c->center, max_radius(body.lambda()) - c->alpha);
  }
  EllipsoidRep e;
  if (is_ellipsoid(body, &e)) {
    EllipsoidRep p = ellipsoid_polar(e);
    const double l = body.lambda();
    p.c = -p.c / l;
    p.A = p.A / (l * l);
    return ChartBody(body.chart(), p);
  }
  return refit(body, body.chart(), [&](const Vec& u) { return dual_support(body, u); }, options);
}

ChartBody recenter(const ChartBody& body, const Chart& target, const FitOptions& options) {
  if (const auto* c = std::get_if<CapRep>(&body.rep())) return ChartBody::cap(target, c->center, c->alpha);
  if (const auto* e = std::get_if<EllipsoidRep>(&body.rep())) {
    return ChartBody(target, ellipsoid_recenter(*e, body.chart(), target));
  }
  if (body.space().euclidean()) {
    const Vec z = body.chart().gnomonic(target.center());
    SupportRep rep = body.rep();
    if (auto* f = std::get_if<Fourier2DRep>(&rep)) {
      if (f->a.size() < 2) f->a.resize(2, 0.0);
      if (f->b.size() < f->a.size()) f->b.resize(f->a.size(), 0.0);
      f->a[1] -= z[0];
      f->b[1] -= z[1];
      return ChartBody(target, rep, body.fit_residual());
    }
    if (auto* h = std::get_if<Harmonic3DRep>(&rep)) {
      if (h->L < 1) {
        h->L = 1;
        h->c.resize(4, 0.0);
      }
      const double k = std::sqrt(4.0 * kPi / 3.0);
      h->c[1] -= k * z[1];
      h->c[2] -= k * z[2];
      h->c[3] -= k * z[0];
      return ChartBody(target, rep, body.fit_residual());
    }
    if (auto* a = std::get_if<AxisymmetricRep>(&rep)) {
      if (z.head(body.dim() - 1).norm() <= 1e-15 * (1.0 + z.norm())) {
        if (a->a.size() < 2) a->a.resize(2, 0.0);
        a->a[1] -= z[body.dim() - 1];
        return ChartBody(target, rep, body.fit_residual());
      }
      throw GeometryError(ErrorKind::Unsupported, "off-axis recentering of an axisymmetric body");
    }
  }
  return refit(body, target, [&](const Vec& u) { return recentered_support(body, target, u); }, options);
}

ChartBody recenter(const ChartBody& body, const Eigen::VectorXd& new_center, const FitOptions& options) {
  return recenter(body, body.chart().recentered(new_center), options);
}

}  // namespace sfa
