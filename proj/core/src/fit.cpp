#include "sfa/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfa/chart_body.hpp"
#include "sfa/quadrature.hpp"
#include "sfa/space_form.hpp"

namespace sfa {

namespace {

struct Attempt {
  SupportRep rep;
  double residual;
};

Attempt fit_fourier(const std::function<double(const Vec&)>& h, int B) {
  const int M = 4 * B + 16;
  std::vector<double> vals(M);
  for (int j = 0; j < M; ++j) {
    const double t = 2.0 * kPi * j / M;
    Vec u(2);
    u << std::cos(t), std::sin(t);
    vals[j] = h(u);
  }
  Fourier2DRep rep;
  rep.a.assign(B + 1, 0.0);
  rep.b.assign(B + 1, 0.0);
  for (int k = 0; k <= B; ++k) {
    NeumaierSum sa, sb;
    for (int j = 0; j < M; ++j) {
      const double t = 2.0 * kPi * static_cast<double>((static_cast<long>(k) * j) % M) / M;
      sa.add(vals[j] * std::cos(t));
      sb.add(vals[j] * std::sin(t));
    }
    rep.a[k] = (k == 0 ? 1.0 : 2.0) * sa.value() / M;
    rep.b[k] = k == 0 ? 0.0 : 2.0 * sb.value() / M;
  }
  const int Mc = 2 * M + 1;
  double err = 0.0;
  double scale = 0.0;
  const SupportRep out = rep;
  for (int j = 0; j < Mc; ++j) {
    const double t = 2.0 * kPi * (j + 0.37) / Mc;
    Vec u(2);
    u << std::cos(t), std::sin(t);
    const double f = h(u);
    err = std::max(err, std::abs(support_value(out, 2, u) - f));
    scale = std::max(scale, std::abs(f));
  }
  return {out, err / scale};
}

Attempt fit_harmonic(const std::function<double(const Vec&)>& h, int L) {
  const int nt = 2 * L + 2;
  const int np = 4 * L + 4;
  const GaussLegendre& gl = gauss_legendre(nt);
  Harmonic3DRep rep;
  rep.L = L;
  const std::size_t K = static_cast<std::size_t>(L + 1) * (L + 1);
  std::vector<NeumaierSum> acc(K);
  std::vector<double> basis;
  for (int i = 0; i < nt; ++i) {
    const double z = gl.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < np; ++j) {
      const double phi = 2.0 * kPi * j / np;
      Eigen::Vector3d u3(s * std::cos(phi), s * std::sin(phi), z);
      const double w = gl.weights[i] * 2.0 * kPi / np * h(Vec(u3));
      harmonic_basis_all(L, u3, basis);
      for (std::size_t k = 0; k < K; ++k) acc[k].add(w * basis[k]);
    }
  }
  rep.c.resize(K);
  for (std::size_t k = 0; k < K; ++k) rep.c[k] = acc[k].value();
  const SupportRep out = rep;
  const QuadratureRule check = s2_rule(nt / 2 + 7);
  double err = 0.0;
  double scale = 0.0;
  for (const Vec& u : check.nodes) {
    const double f = h(u);
    err = std::max(err, std::abs(support_value(out, 3, u) - f));
    scale = std::max(scale, std::abs(f));
  }
  return {out, err / scale};
}

Attempt fit_axisymmetric(const std::function<double(const Vec&)>& h, int d, int B) {
  const int M = 2 * B + 16;
  std::vector<double> vals(M);
  std::vector<double> ts(M);
  for (int j = 0; j < M; ++j) {
    const double th = kPi * (j + 0.5) / M;
    ts[j] = std::cos(th);
    Vec u = Vec::Zero(d);
    u[0] = std::sin(th);
    u[d - 1] = std::cos(th);
    vals[j] = h(u);
  }
  AxisymmetricRep rep;
  rep.a.assign(B + 1, 0.0);
  for (int k = 0; k <= B; ++k) {
    NeumaierSum s;
    for (int j = 0; j < M; ++j) s.add(vals[j] * std::cos(k * kPi * (j + 0.5) / M));
    rep.a[k] = (k == 0 ? 1.0 : 2.0) * s.value() / M;
  }
  const SupportRep out = rep;
  const int Mc = 2 * M + 1;
  double err = 0.0;
  double scale = 0.0;
  for (int j = 0; j <= Mc; ++j) {
    const double th = kPi * j / Mc;
    Vec u = Vec::Zero(d);
    u[0] = std::sin(th);
    u[d - 1] = std::cos(th);
    const double f = h(u);
    err = std::max(err, std::abs(support_value(out, d, u) - f));
    scale = std::max(scale, std::abs(f));
  }
  return {out, err / scale};
}

}  // namespace

FitFamily fit_family_for(const ChartBody& body) {
  const int d = body.dim();
  if (d == 2) return FitFamily::Fourier2D;
  if (body.zonal()) return FitFamily::Axisymmetric;
  if (d == 3) return FitFamily::Harmonic3D;
  throw GeometryError(ErrorKind::Unsupported, "no spectral family for a non-axisymmetric body in d >= 4");
}

double default_fit_tol(FitFamily family) {
  switch (family) {
    case FitFamily::Fourier2D: return 1e-11;
    case FitFamily::Axisymmetric: return 1e-11;
    case FitFamily::Harmonic3D: return 1e-7;
  }
  return 1e-8;
}

int default_max_bandwidth(FitFamily family) {
  switch (family) {
    case FitFamily::Fourier2D: return 512;
    case FitFamily::Axisymmetric: return 256;
    case FitFamily::Harmonic3D: return 48;
  }
  return 64;
}

FitResult fit_support(const std::function<double(const Vec&)>& h, int d, FitFamily family, int source_bandwidth,
                      const FitOptions& options) {
  const double tol = options.tol > 0.0 ? options.tol : default_fit_tol(family);
  const int max_b = options.max_bandwidth > 0 ? options.max_bandwidth : default_max_bandwidth(family);
  int B = options.min_bandwidth > 0 ? options.min_bandwidth : std::max(2 * source_bandwidth, 8);
  B = std::min(B, max_b);
  double best = kInf;
  for (;;) {
    Attempt a;
    switch (family) {
      case FitFamily::Fourier2D: a = fit_fourier(h, B); break;
      case FitFamily::Harmonic3D: a = fit_harmonic(h, B); break;
      case FitFamily::Axisymmetric: a = fit_axisymmetric(h, d, B); break;
    }
    best = std::min(best, a.residual);
    if (a.residual <= tol) return {a.rep, a.residual, B};
    if (B >= max_b) break;
    B = std::min(2 * B, max_b);
  }
  throw GeometryError(ErrorKind::FitResidual,
                      "support fit residual " + std::to_string(best) + " above tolerance " + std::to_string(tol), best);
}

}  // namespace sfa
