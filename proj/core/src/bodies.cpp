#include "sfa/bodies.hpp"

#include <Eigen/QR>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "sfa/space_form.hpp"

namespace sfa {

namespace {

constexpr std::array<const char*, 8> kNames = {"cap",          "offset_ball",      "ellipsoid",         "axisymmetric",
                                               "random_smooth_2d", "random_smooth_3d", "symmetric_2sphere", "rounded_polygon"};

struct Draw {
  std::mt19937_64 rng;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  explicit Draw(std::uint64_t seed) : rng(seed) {}
  double gauss() { return normal(rng); }
  double uniform(double a, double b) { return a + (b - a) * unit(rng); }
  Eigen::VectorXd direction(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss();
    return v.normalized();
  }
};

void require_dim(const FamilySpec& s, bool ok, const char* what) {
  if (!ok) throw GeometryError(ErrorKind::Unsupported, std::string(family_name(s.kind)) + " requires " + what);
}

Chart standard_chart(const FamilySpec& s) { return Chart::standard(SpaceForm{s.d, s.lambda}); }

ChartBody make_cap(const FamilySpec& s, Draw& g, double alpha0) {
  const Chart chart = standard_chart(s);
  const double shift = s.offset * alpha0 * g.unit(g.rng);
  const Eigen::VectorXd dir = g.direction(s.d);
  if (s.lambda == 0.0) return ChartBody::cap(chart, shift * dir, alpha0);
  const double t = std::sqrt(s.lambda) * shift;
  Eigen::VectorXd c(s.d + 1);
  c.head(s.d) = std::sin(t) * dir;
  c[s.d] = std::cos(t);
  return ChartBody::cap(chart, c, alpha0);
}

ChartBody make_offset_ball(const FamilySpec& s, Draw& g, double alpha0) {
  const double r = tan_lambda(s.lambda, alpha0);
  EllipsoidRep e;
  e.A = r * r * Eigen::MatrixXd::Identity(s.d, s.d);
  e.c = s.offset * r * g.unit(g.rng) * g.direction(s.d);
  return ChartBody(standard_chart(s), e);
}

ChartBody make_ellipsoid(const FamilySpec& s, Draw& g, double alpha0) {
  const double r = tan_lambda(s.lambda, alpha0);
  Eigen::MatrixXd m(s.d, s.d);
  for (int i = 0; i < s.d; ++i)
    for (int j = 0; j < s.d; ++j) m(i, j) = g.gauss();
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
  Eigen::VectorXd axes(s.d);
  for (int i = 0; i < s.d; ++i) axes[i] = r * g.uniform(s.ecc_min, s.ecc_max);
  EllipsoidRep e;
  e.A = q * axes.cwiseAbs2().asDiagonal() * q.transpose();
  e.c = s.offset * r * g.unit(g.rng) * g.direction(s.d);
  return ChartBody(standard_chart(s), e);
}

ChartBody make_axisymmetric(const FamilySpec& s, Draw& g, double alpha0) {
  const double r = tan_lambda(s.lambda, alpha0);
  AxisymmetricRep a;
  a.a.assign(static_cast<std::size_t>(s.bandwidth) + 1, 0.0);
  a.a[0] = r;
  for (int k = 1; k <= s.bandwidth; ++k) a.a[k] = s.amplitude * r * g.gauss() / (k * k);
  return ChartBody(standard_chart(s), a);
}

ChartBody make_fourier(const FamilySpec& s, Draw& g, double alpha0, bool even_only) {
  const double r = tan_lambda(s.lambda, alpha0);
  Fourier2DRep f;
  f.a.assign(static_cast<std::size_t>(s.bandwidth) + 1, 0.0);
  f.b.assign(static_cast<std::size_t>(s.bandwidth) + 1, 0.0);
  f.a[0] = r;
  for (int k = 1; k <= s.bandwidth; ++k) {
    const double ak = s.amplitude * r * g.gauss() / (k * k);
    const double bk = s.amplitude * r * g.gauss() / (k * k);
    if (even_only && k % 2 == 1) continue;
    f.a[k] = ak;
    f.b[k] = bk;
  }
  return ChartBody(standard_chart(s), f);
}

ChartBody make_harmonic(const FamilySpec& s, Draw& g, double alpha0) {
  const double r = tan_lambda(s.lambda, alpha0);
  const double norm = std::sqrt(4.0 * kPi);
  Harmonic3DRep h;
  h.L = s.bandwidth;
  h.c.assign(static_cast<std::size_t>((s.bandwidth + 1) * (s.bandwidth + 1)), 0.0);
  h.c[0] = r * norm;
  // Each degree block has the RMS of one Fourier mode of the same index.
  for (int l = 1; l <= s.bandwidth; ++l) {
    const double scale = s.amplitude * r * norm / (l * l * std::sqrt(2.0 * l + 1.0));
    for (int m = -l; m <= l; ++m) h.c[l * l + l + m] = scale * g.gauss();
  }
  return ChartBody(standard_chart(s), h);
}

ChartBody attempt(const FamilySpec& s, Draw& g) {
  const double alpha0 = g.uniform(s.alpha_min, s.alpha_max);
  switch (s.kind) {
    case FamilyKind::Cap: return make_cap(s, g, alpha0);
    case FamilyKind::OffsetBall: return make_offset_ball(s, g, alpha0);
    case FamilyKind::Ellipsoid: return make_ellipsoid(s, g, alpha0);
    case FamilyKind::Axisymmetric: return make_axisymmetric(s, g, alpha0);
    case FamilyKind::RandomSmooth2D:
      require_dim(s, s.d == 2, "d = 2");
      return make_fourier(s, g, alpha0, false);
    case FamilyKind::Symmetric2Sphere:
      require_dim(s, s.d == 2, "d = 2");
      return make_fourier(s, g, alpha0, true);
    case FamilyKind::RandomSmooth3D:
      require_dim(s, s.d == 3, "d = 3");
      return make_harmonic(s, g, alpha0);
    case FamilyKind::RoundedPolygon:
      require_dim(s, s.d == 2, "d = 2");
      return rounded_polygon(s.lambda, s.sides, alpha0, s.rounding);
  }
  throw GeometryError(ErrorKind::Unsupported, "unknown family");
}

}  // namespace

const char* family_name(FamilyKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

FamilyKind parse_family(const std::string& name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<FamilyKind>(i);
  throw GeometryError(ErrorKind::Parse, "unknown family kind: " + name);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

ChartBody generate(const FamilySpec& spec, std::uint64_t index) {
  SpaceForm{spec.d, spec.lambda}.validate();
  if (!(spec.alpha_min > 0.0) || spec.alpha_max < spec.alpha_min || !(spec.alpha_max < max_radius(spec.lambda)))
    throw GeometryError(ErrorKind::Domain, "alpha range must satisfy 0 < alpha_min <= alpha_max < max radius");
  Draw g(derive_seed(spec.seed, index));
  std::string last = "no attempts";
  for (int attempt_no = 0; attempt_no <= spec.max_retries; ++attempt_no) {
    try {
      return attempt(spec, g);
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::NotConvex && e.kind() != ErrorKind::OutsideHalfSpace) throw;
      last = e.what();
    }
  }
  throw GeometryError(ErrorKind::NonConvergence, std::string("retries exhausted for ") + family_name(spec.kind) + ": " + last);
}

std::string describe(const ChartBody& body) {
  std::ostringstream o;
  o << rep_kind(body.rep()) << " d=" << body.dim() << " lambda=" << body.lambda() << " bandwidth=" << body.bandwidth();
  return o.str();
}

ChartBody rounded_polygon(double lambda, int sides, double alpha0, double rounding) {
  if (sides < 3) throw GeometryError(ErrorKind::Domain, "polygon needs at least 3 sides");
  if (!(rounding > 0.0)) throw GeometryError(ErrorKind::Domain, "rounding must be positive");
  const double r = tan_lambda(lambda, alpha0);
  const double edge = 2.0 * r * std::tan(kPi / sides);
  const double kappa = 4.0 / (rounding * rounding);
  // Ratios I_k/I_{k-1} of modified Bessel functions by backward recurrence.
  const int top = static_cast<int>(std::ceil(kappa + 40.0 / rounding + 50.0));
  std::vector<double> ratio(static_cast<std::size_t>(top) + 2, 0.0);
  for (int k = top; k >= 1; --k) ratio[k] = 1.0 / (2.0 * k / kappa + ratio[k + 1]);
  Fourier2DRep f;
  f.a = {sides * edge / (2.0 * kPi)};
  double ik = 1.0;
  for (int k = 1; k <= top; ++k) {
    ik *= ratio[k];
    if (ik < 1e-17) break;
    double coef = 0.0;
    if (k % sides == 0) coef = sides * edge / kPi * ik / (1.0 - static_cast<double>(k) * k);
    f.a.push_back(coef);
  }
  while (f.a.size() > 1 && f.a.back() == 0.0) f.a.pop_back();
  f.b.assign(f.a.size(), 0.0);
  return ChartBody(Chart::standard(SpaceForm{2, lambda}), f);
}

}  // namespace sfa
