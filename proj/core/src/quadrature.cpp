#include "sfa/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

#include "sfa/chart_body.hpp"
#include "sfa/geometry.hpp"
#include "sfa/space_form.hpp"

namespace sfa {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) gl.nodes[n / 2] = 0.0;
  return gl;
}

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<GaussLegendre>(compute_gauss_legendre(n))).first;
  }
  return *it->second;
}

std::string QuadratureRule::id() const {
  std::ostringstream os;
  switch (kind) {
    case RuleKind::Circle: os << "circle-" << n; break;
    case RuleKind::ProductGauss: os << "s2-gauss-" << n << "x" << 2 * n; break;
    case RuleKind::Zonal: os << "zonal" << d << "-" << n; break;
    case RuleKind::QuasiMonteCarlo: os << "qmc" << d << "-" << n << "x" << groups << "-s" << seed; break;
  }
  return os.str();
}

QuadratureRule circle_rule(int n) {
  if (n < 8) throw GeometryError(ErrorKind::Domain, "circle rule needs at least 8 nodes");
  QuadratureRule r;
  r.d = 2;
  r.kind = RuleKind::Circle;
  r.n = n;
  r.degree = n - 1;
  r.nodes.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * kPi * j / n;
    Vec u(2);
    u << std::cos(t), std::sin(t);
    r.nodes.push_back(u);
    r.weights.push_back(2.0 * kPi / n);
    r.group.push_back(0);
  }
  return r;
}

QuadratureRule s2_rule(int n_theta) {
  if (n_theta < 2) throw GeometryError(ErrorKind::Domain, "s2 rule needs at least 2 latitudes");
  const GaussLegendre& gl = gauss_legendre(n_theta);
  const int n_phi = 2 * n_theta;
  QuadratureRule r;
  r.d = 3;
  r.kind = RuleKind::ProductGauss;
  r.n = n_theta;
  r.degree = 2 * n_theta - 1;
  r.nodes.reserve(n_theta * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double z = gl.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * kPi * (j + 0.5) / n_phi;
      Vec u(3);
      u << s * std::cos(phi), s * std::sin(phi), z;
      r.nodes.push_back(u);
      r.weights.push_back(gl.weights[i] * 2.0 * kPi / n_phi);
      r.group.push_back(0);
    }
  }
  return r;
}

QuadratureRule zonal_rule(int d, int n) {
  if (d < 3) throw GeometryError(ErrorKind::Domain, "zonal rule needs d >= 3");
  const GaussLegendre& gl = gauss_legendre(n);
  const double omega = sphere_measure(d - 2);
  QuadratureRule r;
  r.d = d;
  r.kind = RuleKind::Zonal;
  r.n = n;
  r.degree = 2 * n - 1;
  for (int i = 0; i < n; ++i) {
    const double th = 0.5 * kPi * (gl.nodes[i] + 1.0);
    Vec u = Vec::Zero(d);
    u[0] = std::sin(th);
    u[d - 1] = std::cos(th);
    r.nodes.push_back(u);
    r.weights.push_back(0.5 * kPi * gl.weights[i] * omega * std::pow(std::sin(th), d - 2));
    r.group.push_back(0);
  }
  return r;
}

QuadratureRule qmc_rule(int d, int n, int groups, std::uint64_t seed) {
  if (d < 2 || d > kMaxDim) throw GeometryError(ErrorKind::Domain, "qmc dimension out of range");
  const int pairs = (d + 1) / 2;
  QuadratureRule r;
  r.d = d;
  r.kind = RuleKind::QuasiMonteCarlo;
  r.n = n;
  r.groups = groups;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double w = sphere_measure(d - 1) / (static_cast<double>(n) * groups);
  r.nodes.reserve(static_cast<std::size_t>(n) * groups);
  for (int g = 0; g < groups; ++g) {
    double shift[2 * kMaxDim];
    for (int k = 0; k < 2 * pairs; ++k) shift[k] = unif(rng);
    for (int i = 0; i < n; ++i) {
      double gauss[2 * kMaxDim];
      for (int p = 0; p < pairs; ++p) {
        double a = radical_inverse(static_cast<std::uint64_t>(i) + 1, kPrimes[2 * p]) + shift[2 * p];
        double b = radical_inverse(static_cast<std::uint64_t>(i) + 1, kPrimes[2 * p + 1]) + shift[2 * p + 1];
        a -= std::floor(a);
        b -= std::floor(b);
        const double rad = std::sqrt(-2.0 * std::log(std::max(a, 1e-300)));
        gauss[2 * p] = rad * std::cos(2.0 * kPi * b);
        gauss[2 * p + 1] = rad * std::sin(2.0 * kPi * b);
      }
      Vec u(d);
      for (int k = 0; k < d; ++k) u[k] = gauss[k];
      u /= u.norm();
      r.nodes.push_back(u);
      r.weights.push_back(w);
      r.group.push_back(g);
    }
  }
  return r;
}

QuadratureRule sphere_rule(int d, int level, int bandwidth, bool zonal, std::uint64_t seed) {
  if (level < 1) throw GeometryError(ErrorKind::Domain, "quadrature level must be positive");
  if (d == 2) {
    int n = 64 << (level - 1);
    while (n < 4 * bandwidth + 16) n *= 2;
    return circle_rule(n);
  }
  if (zonal) {
    int n = 24 * level;
    while (n < 2 * bandwidth + 16) n += 24;
    return zonal_rule(d, n);
  }
  if (d == 3) {
    int n = 16 * level;
    while (n < bandwidth + 16) n += 16;
    return s2_rule(n);
  }
  return qmc_rule(d, 2048 * level * level / 16, 16, seed);
}

QuadratureRule coarsened(const QuadratureRule& rule) {
  switch (rule.kind) {
    case RuleKind::Circle: return circle_rule(rule.n / 2);
    case RuleKind::ProductGauss: return s2_rule(rule.n / 2);
    case RuleKind::Zonal: return zonal_rule(rule.d, rule.n / 2);
    case RuleKind::QuasiMonteCarlo: {
      QuadratureRule r = rule;
      r.n = rule.n / 4;
      r.nodes.clear();
      r.weights.clear();
      r.group.clear();
      const double w = sphere_measure(rule.d - 1) / (static_cast<double>(r.n) * rule.groups);
      for (int g = 0; g < rule.groups; ++g) {
        for (int i = 0; i < r.n; ++i) {
          r.nodes.push_back(rule.nodes[static_cast<std::size_t>(g) * rule.n + i]);
          r.weights.push_back(w);
          r.group.push_back(g);
        }
      }
      return r;
    }
  }
  return rule;
}

std::vector<std::size_t> coarse_subset_indices(const QuadratureRule& rule) {
  std::vector<std::size_t> idx;
  if (rule.kind == RuleKind::Circle) {
    for (int j = 0; j < rule.n / 2; ++j) idx.push_back(2 * static_cast<std::size_t>(j));
  } else if (rule.kind == RuleKind::QuasiMonteCarlo) {
    for (int g = 0; g < rule.groups; ++g) {
      for (int i = 0; i < rule.n / 4; ++i) idx.push_back(static_cast<std::size_t>(g) * rule.n + i);
    }
  }
  return idx;
}

void NeumaierSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

Integral integrate(const QuadratureRule& rule, const std::vector<double>& values) {
  Integral out;
  NeumaierSum total;
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = rule.weights[i] * values[i];
    total.add(t);
    abs_sum += std::abs(t);
  }
  out.value = total.value();
  out.abs_sum = abs_sum;
  if (rule.kind == RuleKind::QuasiMonteCarlo && rule.groups > 1) {
    std::vector<NeumaierSum> part(rule.groups);
    for (std::size_t i = 0; i < values.size(); ++i) part[rule.group[i]].add(rule.weights[i] * values[i]);
    const double G = rule.groups;
    double mean = 0.0;
    for (const auto& p : part) mean += p.value() * G;
    mean /= G;
    double var = 0.0;
    for (const auto& p : part) var += (p.value() * G - mean) * (p.value() * G - mean);
    var /= (G - 1.0);
    out.stat_error = std::sqrt(var / G);
  }
  return out;
}

FunctionalValue monte_carlo_volume(const ChartBody& body, std::size_t samples, std::uint64_t seed) {
  const int d = body.dim();
  const double lambda = body.lambda();
  const double R = body.properness_bound();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-R, R);
  const double box = std::pow(2.0 * R, d);
  double s1 = 0.0;
  double s2 = 0.0;
  Vec x(d);
  for (std::size_t k = 0; k < samples; ++k) {
    for (int i = 0; i < d; ++i) x[i] = unif(rng);
    const double r = x.norm();
    double val = 0.0;
    if (r == 0.0 || r <= radial(body, x / r)) {
      val = box * std::pow(1.0 + lambda * r * r, -0.5 * (d + 1));
    }
    s1 += val;
    s2 += val * val;
  }
  const double n = static_cast<double>(samples);
  const double mean = s1 / n;
  const double var = std::max(0.0, s2 / n - mean * mean);
  return {mean, std::sqrt(var / n), "chart-box sampling", "mc-" + std::to_string(samples) + "-s" + std::to_string(seed)};
}

}  // namespace sfa
