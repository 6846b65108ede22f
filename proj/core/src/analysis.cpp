#include "sfa/analysis.hpp"

#include <cmath>
#include <limits>

#include "sfa/geometry.hpp"

namespace sfa {

BodyAnalysis::BodyAnalysis(const ChartBody& body, int level, std::uint64_t seed)
    : body_(body),
      level_(level),
      fine_(sphere_rule(body.dim(), level, body.bandwidth(), body.zonal(), seed)),
      coarse_(coarsened(fine_)) {}

const std::vector<CurvaturePoint>& BodyAnalysis::boundary(bool coarse) const {
  const int k = coarse ? 1 : 0;
  std::call_once(boundary_once_[k], [&] {
    const QuadratureRule& r = rule(coarse);
    std::vector<CurvaturePoint> pts;
    pts.reserve(r.size());
    if (coarse) {
      const auto idx = coarse_subset_indices(fine_);
      if (!idx.empty()) {
        const auto& fine = boundary(false);
        for (std::size_t i : idx) pts.push_back(fine[i]);
        boundary_[k] = std::move(pts);
        return;
      }
    }
    for (const Vec& u : r.nodes) pts.push_back(curvature_point(body_, u));
    boundary_[k] = std::move(pts);
  });
  return boundary_[k];
}

const std::vector<double>& BodyAnalysis::radials(bool coarse) const {
  const int k = coarse ? 1 : 0;
  std::call_once(radial_once_[k], [&] {
    const QuadratureRule& r = rule(coarse);
    std::vector<double> rho;
    rho.reserve(r.size());
    if (coarse) {
      const auto idx = coarse_subset_indices(fine_);
      if (!idx.empty()) {
        const auto& fine = radials(false);
        for (std::size_t i : idx) rho.push_back(fine[i]);
        radial_[k] = std::move(rho);
        return;
      }
    }
    for (const Vec& u : r.nodes) rho.push_back(radial(body_, u));
    radial_[k] = std::move(rho);
  });
  return radial_[k];
}

IntegralPair BodyAnalysis::boundary_integral(const std::function<double(const CurvaturePoint&)>& f) const {
  IntegralPair out;
  for (int k = 0; k < 2; ++k) {
    const auto& pts = boundary(k == 1);
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = f(pts[i]);
    (k == 0 ? out.fine : out.coarse) = integrate(rule(k == 1), vals);
  }
  return out;
}

IntegralPair BodyAnalysis::radial_integral(const std::function<double(const Vec&, double)>& f) const {
  IntegralPair out;
  for (int k = 0; k < 2; ++k) {
    const QuadratureRule& r = rule(k == 1);
    const auto& rho = radials(k == 1);
    std::vector<double> vals(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) vals[i] = f(r.nodes[i], rho[i]);
    (k == 0 ? out.fine : out.coarse) = integrate(r, vals);
  }
  return out;
}

FunctionalValue BodyAnalysis::value(double fine, double coarse, double stat, double abs_sum,
                                    const std::string& formula) const {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  FunctionalValue v;
  v.value = fine;
  v.abs_error = std::abs(fine - coarse) + 3.0 * stat + 8.0 * eps * abs_sum +
                std::abs(fine) * body_.fit_residual() * std::max(1, body_.bandwidth());
  v.formula = formula;
  v.rule_id = fine_.id();
  return v;
}

FunctionalValue BodyAnalysis::value(const IntegralPair& p, const std::string& formula) const {
  return value(p.fine.value, p.coarse.value, p.fine.stat_error, p.fine.abs_sum, formula);
}

}  // namespace sfa
