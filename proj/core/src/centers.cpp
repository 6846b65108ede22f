#include "sfa/centers.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>

#include "sfa/analysis.hpp"
#include "sfa/geometry.hpp"
#include "sfa/quadrature.hpp"
#include "sfa/space_form.hpp"

namespace sfa {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Weighted points (z, 1) of the chart body in unit-sphere chart coordinates z = sqrt(lambda) x.
struct Tables {
  int d = 0;
  std::vector<VectorXd> points;
  std::vector<double> weights;
  double mean_radius = 0.0;
};

Tables build_tables(const ChartBody& body, double alpha, const CenterOptions& options) {
  const int d = body.dim();
  const double sl = std::sqrt(body.lambda());
  const BodyAnalysis a(body, options.level);
  const QuadratureRule& rule = a.rule();
  const auto& rho = a.radials();
  const GaussLegendre& gl = gauss_legendre(options.radial_nodes);
  Tables t;
  t.d = d;
  double wsum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double R = sl * rho[i];
    t.mean_radius += rule.weights[i] * R;
    wsum += rule.weights[i];
    for (int j = 0; j < options.radial_nodes; ++j) {
      const double r = 0.5 * R * (gl.nodes[j] + 1.0);
      VectorXd p(d + 1);
      p.head(d) = r * rule.nodes[i];
      p[d] = 1.0;
      const double base = rule.weights[i] * gl.weights[j] * 0.5 * R * std::pow(r, d - 1);
      t.points.push_back(p);
      t.weights.push_back(base * std::pow(1.0 + r * r, 0.5 * (alpha - (d + 1))));
    }
  }
  t.mean_radius /= wsum;
  return t;
}

struct Eval {
  double F = 0.0;
  VectorXd grad;
  MatrixXd hess;
};

bool evaluate(const Tables& t, const VectorXd& v, double alpha, bool derivatives, Eval& out) {
  const int n = t.d + 1;
  NeumaierSum F;
  out.grad = VectorXd::Zero(n);
  out.hess = MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < t.points.size(); ++k) {
    const double q = t.points[k].dot(v);
    if (!(q > 0.0)) return false;
    const double w = t.weights[k] * std::pow(q, -alpha);
    F.add(w);
    if (derivatives) {
      out.grad -= (alpha * w / q) * t.points[k];
      out.hess += (alpha * (alpha + 1.0) * w / (q * q)) * t.points[k] * t.points[k].transpose();
    }
  }
  out.F = F.value();
  return std::isfinite(out.F);
}

// Tangent directions at v; zonal bodies keep v in the plane of the last two frame axes.
MatrixXd tangent_directions(const VectorXd& v, bool zonal) {
  const int n = static_cast<int>(v.size());
  if (zonal) {
    VectorXd e = VectorXd::Zero(n);
    e[n - 2] = v[n - 1];
    e[n - 1] = -v[n - 2];
    return e.normalized();
  }
  const Mat B = tangent_basis(Vec(v));
  return MatrixXd(B);
}

CenterResult minimize(const ChartBody& body, double alpha, const CenterOptions& options) {
  if (!(body.lambda() > 0.0)) throw GeometryError(ErrorKind::Unsupported, "centers require lambda > 0");
  if (!(alpha >= 1.0)) throw GeometryError(ErrorKind::Domain, "barycenter exponent must be at least 1");
  const int d = body.dim();
  const Tables t = build_tables(body, alpha, options);
  VectorXd v = VectorXd::Zero(d + 1);
  v[d] = 1.0;
  Eval e;
  if (!evaluate(t, v, alpha, true, e)) throw GeometryError(ErrorKind::OutsideHalfSpace, "chart center outside the dual body");
  CenterResult res;
  bool zonal = body.zonal();
  int it = 0;
  for (;; ++it) {
    const MatrixXd T = tangent_directions(v, zonal);
    const VectorXd g = T.transpose() * e.grad;
    res.residual = g.norm() / (alpha * e.F) / t.mean_radius;
    if (res.residual <= options.tol) {
      res.converged = true;
      break;
    }
    if (it >= options.max_iterations) break;
    MatrixXd H = T.transpose() * e.hess * T;
    H.diagonal().array() -= v.dot(e.grad);
    const VectorXd s = -H.llt().solve(g);
    VectorXd delta = T * s;
    double theta = delta.norm();
    if (!(theta > 0.0)) break;
    const VectorXd dir = delta / theta;
    theta = std::min(theta, 0.5);
    bool accepted = false;
    for (int ls = 0; ls < 50; ++ls) {
      VectorXd trial = std::cos(theta) * v + std::sin(theta) * dir;
      trial.normalize();
      Eval et;
      if (evaluate(t, trial, alpha, true, et) && et.F <= e.F) {
        v = trial;
        e = et;
        accepted = true;
        break;
      }
      theta *= 0.5;
    }
    if (!accepted) break;
  }
  res.iterations = it;
  res.objective = e.F;
  res.center = body.chart().frame() * v;
  return res;
}

}  // namespace

CenterResult h_alpha_barycenter(const ChartBody& body, double alpha, const CenterOptions& options) {
  if (body.lambda() != 1.0 && alpha != body.dim() + 1.0)
    throw GeometryError(ErrorKind::Unsupported, "barycenters other than the GHS-center require lambda = 1");
  CenterResult r = minimize(body, alpha, options);
  if (options.build_recentered) r.recentered = recenter(body, r.center, options.fit);
  return r;
}

CenterResult ghs_center(const ChartBody& body, const CenterOptions& options) {
  return h_alpha_barycenter(body, body.dim() + 1.0, options);
}

CenterResult santalo_chart(const ChartBody& body, const CenterOptions& options) {
  const ChartBody dual = dual_body(body, options.fit);
  CenterOptions o = options;
  o.build_recentered = false;
  CenterResult r = minimize(dual, body.dim() + 1.0, o);
  if (options.build_recentered) r.recentered = recenter(body, r.center, options.fit);
  return r;
}

double barycenter_objective(const ChartBody& body, const Eigen::VectorXd& point, double alpha, const CenterOptions& options) {
  const Tables t = build_tables(body, alpha, options);
  const VectorXd v = body.chart().frame().transpose() * point.normalized();
  Eval e;
  if (!evaluate(t, v, alpha, false, e)) return std::numeric_limits<double>::infinity();
  return e.F;
}

}  // namespace sfa
