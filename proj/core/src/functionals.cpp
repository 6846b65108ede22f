#include "sfa/functionals.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>

#include "sfa/geometry.hpp"
#include "sfa/space_form.hpp"

namespace sfa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double omega_sphere(int d) { return sphere_measure(d - 1); }

double exponent_for(int d, double p) {
  if (p == -static_cast<double>(d)) throw GeometryError(ErrorKind::Domain, "p = -d is excluded");
  if (std::isinf(p)) return 1.0;
  return p / (d + p);
}

// Shared integrand of the floating-area family: (H_lambda / f^{d+1})^e f sigma J.
double floating_term(const CurvaturePoint& c, int d, double e, bool weighted) {
  const double f = weighted ? c.f : 1.0;
  const double kappa = c.H_lambda / std::pow(f, d + 1);
  return std::pow(kappa, e) * f * c.sigma * c.jac;
}

struct Ratio {
  double fine;
  double coarse;
  double stat;
  double abs_sum;
};

Ratio ratio_of(const IntegralPair& num, const IntegralPair& den) {
  Ratio r;
  r.fine = num.fine.value / den.fine.value;
  r.coarse = num.coarse.value / den.coarse.value;
  const double sn = num.fine.stat_error / std::abs(den.fine.value);
  const double sd = std::abs(r.fine) * den.fine.stat_error / std::abs(den.fine.value);
  r.stat = std::hypot(sn, sd);
  r.abs_sum = (num.fine.abs_sum + std::abs(r.fine) * den.fine.abs_sum) / std::abs(den.fine.value);
  return r;
}

FunctionalValue entropy_kernel(const BodyAnalysis& a, bool weighted, const std::string& formula) {
  const int d = a.body().dim();
  const IntegralPair num = a.boundary_integral([&](const CurvaturePoint& c) {
    const double f = weighted ? c.f : 1.0;
    const double kappa = c.H_lambda / std::pow(f, d + 1);
    return kappa * f * c.sigma * c.jac * std::log(kappa);
  });
  const IntegralPair den = a.boundary_integral([&](const CurvaturePoint& c) { return floating_term(c, d, 1.0, weighted); });
  const Ratio r = ratio_of(num, den);
  return a.value(r.fine, r.coarse, r.stat, r.abs_sum, formula);
}

double neville_at_zero(const std::vector<double>& x, std::vector<double> y) {
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      y[i] = (x[i + m] * y[i] - x[i] * y[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return y[0];
}

}  // namespace

FunctionalValue map_value(const FunctionalValue& x, const std::function<double(double)>& g, const std::string& formula) {
  FunctionalValue out;
  out.value = g(x.value);
  out.formula = formula;
  out.rule_id = x.rule_id;
  double err = 0.0;
  try {
    const double hi = g(x.value + x.abs_error);
    const double lo = g(x.value - x.abs_error);
    err = std::max(std::abs(hi - out.value), std::abs(lo - out.value));
    if (!std::isfinite(err)) throw GeometryError(ErrorKind::Domain, "non-finite");
  } catch (const std::exception&) {
    const double step = 1e-7 * std::max(std::abs(x.value), 1e-300);
    const double deriv = (g(x.value + step) - g(x.value - step)) / (2.0 * step);
    err = std::abs(deriv) * x.abs_error;
  }
  out.abs_error = err + 4.0 * kEps * std::abs(out.value);
  return out;
}

FunctionalValue map_value2(const FunctionalValue& x, const FunctionalValue& y,
                           const std::function<double(double, double)>& g, const std::string& formula) {
  const FunctionalValue a = map_value(x, [&](double t) { return g(t, y.value); }, formula);
  const FunctionalValue b = map_value(y, [&](double t) { return g(x.value, t); }, formula);
  FunctionalValue out = a;
  out.abs_error = a.abs_error + b.abs_error;
  return out;
}

FunctionalValue volume_lambda(const BodyAnalysis& a) {
  const int d = a.body().dim();
  const double lambda = a.body().lambda();
  const IntegralPair r = a.radial_integral([&](const Vec&, double rho) {
    return j_lambda(d, lambda, arctan_lambda(lambda, rho));
  });
  return a.value(r, "volume: integral of J(arctan rho)");
}

FunctionalValue perimeter_lambda(const BodyAnalysis& a) {
  const IntegralPair r = a.boundary_integral([](const CurvaturePoint& c) { return c.sigma * c.jac; });
  return a.value(r, "perimeter: integral of sigma over the chart boundary");
}

FunctionalValue dual_volume(const BodyAnalysis& a) {
  const int d = a.body().dim();
  const double lambda = a.body().lambda();
  if (lambda == 0.0) throw GeometryError(ErrorKind::Unsupported, "no dual body for lambda = 0");
  const IntegralPair r = a.boundary_integral([&](const CurvaturePoint& c) {
    return j_lambda(d, lambda, arctan_lambda(lambda, 1.0 / (lambda * c.h)));
  });
  return a.value(r, "dual volume: integral of J(arctan(1/(lambda h)))");
}

FunctionalValue dual_perimeter(const BodyAnalysis& a) {
  const int d = a.body().dim();
  const double lambda = a.body().lambda();
  if (lambda == 0.0) throw GeometryError(ErrorKind::Unsupported, "no dual body for lambda = 0");
  FunctionalValue v = omega_p_lambda(a, kInf);
  const double s = lambda == 1.0 ? 1.0 : std::pow(lambda, -0.5 * (d - 1));
  v.value *= s;
  v.abs_error *= s;
  v.formula = "dual perimeter: lambda^{-(d-1)/2} Omega_inf";
  return v;
}

FunctionalValue omega_p_lambda(const BodyAnalysis& a, double p) {
  const int d = a.body().dim();
  const double e = exponent_for(d, p);
  const IntegralPair r = a.boundary_integral([&](const CurvaturePoint& c) { return floating_term(c, d, e, false); });
  return a.value(r, "L_p floating area");
}

FunctionalValue as_p_lambda_o(const BodyAnalysis& a, double p) {
  const int d = a.body().dim();
  const double e = exponent_for(d, p);
  const IntegralPair r = a.boundary_integral([&](const CurvaturePoint& c) { return floating_term(c, d, e, true); });
  return a.value(r, "weighted L_p affine surface area");
}

FunctionalValue volume_euclidean(const BodyAnalysis& a) {
  const int d = a.body().dim();
  const IntegralPair r = a.radial_integral([&](const Vec&, double rho) { return std::pow(rho, d) / d; });
  return a.value(r, "Euclidean chart volume");
}

FunctionalValue polar_volume_euclidean(const BodyAnalysis& a) {
  const int d = a.body().dim();
  const IntegralPair r = a.boundary_integral([&](const CurvaturePoint& c) { return std::pow(c.h, -d) / d; });
  return a.value(r, "Euclidean polar chart volume");
}

double volume_radius(int d, double lambda, double volume) { return j_lambda_inv(d, lambda, volume / omega_sphere(d)); }

double perimeter_radius(int d, double lambda, double perimeter) {
  const double s = std::pow(perimeter / omega_sphere(d), 1.0 / (d - 1));
  if (lambda == 0.0) return s;
  const double sl = std::sqrt(lambda);
  const double arg = sl * s;
  if (arg > 1.0) throw GeometryError(ErrorKind::Domain, "perimeter beyond a great sphere");
  return std::asin(arg) / sl;
}

Radii radii(const BodyAnalysis& a) {
  const int d = a.body().dim();
  const double lambda = a.body().lambda();
  Radii r;
  r.alpha_K = map_value(volume_lambda(a), [&](double v) { return volume_radius(d, lambda, v); }, "volume radius");
  r.alpha_P = map_value(perimeter_lambda(a), [&](double p) { return perimeter_radius(d, lambda, p); }, "perimeter radius");
  return r;
}

FunctionalValue entropy_c_lambda(const BodyAnalysis& a) {
  return entropy_kernel(a, false, "curvature entropy E_C^lambda");
}

FunctionalValue entropy_pw_lambda(const BodyAnalysis& a) {
  return entropy_kernel(a, true, "centro-affine entropy E_PW^lambda");
}

EntropyBundle entropy_spherical(const BodyAnalysis& a, const FitOptions& fit) {
  const ChartBody& body = a.body();
  const int d = body.dim();
  if (body.lambda() != 1.0) throw GeometryError(ErrorKind::Unsupported, "spherical entropy requires lambda = 1");
  EntropyBundle out;
  out.E_s = entropy_c_lambda(a);
  out.E_s.formula = "spherical curvature entropy";
  out.entropy_power = map_value(out.E_s, [](double e) { return std::exp(-e); }, "entropy power exp(-E_s)");
  const FunctionalValue P = perimeter_lambda(a);
  const FunctionalValue Pd = dual_perimeter(a);
  const FunctionalValue ratio = map_value2(P, Pd, [](double x, double y) { return std::log(x / y); }, "log(P/P*)");
  out.kl = out.E_s;
  out.kl.value = out.E_s.value + ratio.value;
  out.kl.abs_error = out.E_s.abs_error + ratio.abs_error;
  out.kl.formula = "relative entropy E_s + log(P/P*)";

  const ChartBody dual = dual_body(body, fit);
  const BodyAnalysis ad(dual, a.level());
  const IntegralPair p0 = ad.boundary_integral([&](const CurvaturePoint& c) { return c.sigma * c.jac; });
  const std::vector<double> qs = {1e-1, 1e-2, 1e-3};
  std::vector<double> Lf, Lc;
  for (double q : qs) {
    const double e = q / (d + q);
    const IntegralPair pq = ad.boundary_integral([&](const CurvaturePoint& c) { return std::pow(c.H_lambda, e) * c.sigma * c.jac; });
    const double lf = (1.0 + d / q) * std::log(pq.fine.value / p0.fine.value);
    const double lc = (1.0 + d / q) * std::log(pq.coarse.value / p0.coarse.value);
    Lf.push_back(lf);
    Lc.push_back(lc);
    out.probes.push_back({q, lf, std::exp(lf)});
  }
  const double L0 = neville_at_zero(qs, Lf);
  const double L0c = neville_at_zero(qs, Lc);
  const double L01 = neville_at_zero({qs[1], qs[2]}, {Lf[1], Lf[2]});
  out.probe_limit.value = std::exp(L0);
  out.probe_limit.abs_error = out.probe_limit.value * (std::abs(L0 - L0c) + std::abs(L0 - L01) +
                                                       dual.fit_residual() * std::max(1, dual.bandwidth()) +
                                                       1e3 * kEps * (1.0 + std::abs(L0)));
  out.probe_limit.formula = "entropy power from q-probes on the dual";
  out.probe_limit.rule_id = ad.rule().id();
  return out;
}

EuclideanEntropies euclid_entropies(const BodyAnalysis& a) {
  const ChartBody& body = a.body();
  const int d = body.dim();
  if (body.lambda() != 0.0) throw GeometryError(ErrorKind::Unsupported, "Euclidean entropies require lambda = 0");
  EuclideanEntropies out;
  out.E_C = entropy_c_lambda(a);
  out.E_C.formula = "Gaussian curvature entropy E_C";
  out.E_PW = entropy_pw_lambda(a);
  out.E_PW.formula = "centro-affine entropy E_PW";

  double values[2];
  bool converged = true;
  Vec zf = Vec::Zero(d);
  for (int k = 0; k < 2; ++k) {
    const QuadratureRule& r = a.rule(k == 1);
    const auto& pts = a.boundary(k == 1);
    const double omega = omega_sphere(d);
    auto G = [&](const Vec& z) {
      NeumaierSum s;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double g = pts[i].h - z.dot(r.nodes[i]);
        if (!(g > 0.0)) return -kInf;
        s.add(r.weights[i] * std::log(g));
      }
      return s.value() / omega;
    };
    Vec z = Vec::Zero(d);
    double val = G(z);
    bool ok = false;
    for (int it = 0; it < 100; ++it) {
      Vec grad = Vec::Zero(d);
      Mat hess = Mat::Zero(d, d);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec& u = r.nodes[i];
        const double g = pts[i].h - z.dot(u);
        grad -= r.weights[i] * u / g;
        hess -= r.weights[i] * u * u.transpose() / (g * g);
      }
      grad /= omega;
      hess /= omega;
      const Vec step = (-hess).llt().solve(grad);
      const double dec2 = grad.dot(step);
      if (dec2 <= 1e-26) {
        ok = true;
        break;
      }
      double t = 1.0;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        const Vec trial = z + t * step;
        const double gv = G(trial);
        if (gv >= val + 0.25 * t * dec2) {
          z = trial;
          val = gv;
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) {
        ok = dec2 <= 1e-20;
        break;
      }
    }
    values[k] = val;
    converged = converged && ok;
    if (k == 0) zf = z;
  }
  out.E_h = a.value(values[0], values[1], 0.0, std::abs(values[0]) * 16.0, "Firey entropy E_h (maximized)");
  out.E_h_point = zf;
  out.E_h_converged = converged;
  return out;
}

namespace cap_closed_form {

double volume(int d, double lambda, double alpha) { return omega_sphere(d) * j_lambda(d, lambda, alpha); }

double perimeter(int d, double lambda, double alpha) {
  return omega_sphere(d) * std::pow(trig_lambda(lambda, alpha).sin, d - 1);
}

double omega_p(int d, double lambda, double alpha, double p) {
  const TrigLambda t = trig_lambda(lambda, alpha);
  if (std::isinf(p)) return omega_sphere(d) * std::pow(t.cos, d - 1);
  return omega_sphere(d) * std::pow(t.cos, p * (d - 1) / (d + p)) * std::pow(t.sin, d * (d - 1.0) / (d + p));
}

double as_p(int d, double lambda, double alpha, double p) {
  const TrigLambda t = trig_lambda(lambda, alpha);
  const double w = lambda * t.cos * t.cos + t.sin * t.sin;
  if (std::isinf(p)) return omega_sphere(d) * std::pow(t.cos, d - 1) * std::pow(w, -0.5 * d);
  return omega_sphere(d) * std::pow(t.sin, d * (d - 1.0) / (d + p)) * std::pow(t.cos, p * (d - 1) / (d + p)) *
         std::pow(w, -0.5 * d * (p - 1) / (d + p));
}

double entropy_c(int d, double lambda, double alpha) { return -(d - 1) * std::log(tan_lambda(lambda, alpha)); }

double entropy_pw(int d, double lambda, double alpha) {
  const TrigLambda t = trig_lambda(lambda, alpha);
  return entropy_c(d, lambda, alpha) - 0.5 * (d + 1) * std::log(lambda * t.cos * t.cos + t.sin * t.sin);
}

}  // namespace cap_closed_form

}  // namespace sfa
