#include "sfa/support.hpp"

#include <cmath>
#include <vector>

#include "sfa/jet.hpp"

namespace sfa {

namespace {

using std::sqrt;

constexpr int kLegendreMax = 128;

// Recurrence constants for normalized associated Legendre functions without the sin^m factor.
struct LegendreTable {
  std::vector<double> diag;  // p_mm
  std::vector<double> a;     // a_lm at l*(l+1)/2 + m
  std::vector<double> b;

  LegendreTable() : diag(kLegendreMax + 1), a((kLegendreMax + 1) * (kLegendreMax + 2) / 2), b(a.size()) {
    diag[0] = std::sqrt(1.0 / (4.0 * M_PI));
    for (int m = 1; m <= kLegendreMax; ++m) diag[m] = diag[m - 1] * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    for (int l = 0; l <= kLegendreMax; ++l) {
      for (int m = 0; m <= l; ++m) {
        const int i = l * (l + 1) / 2 + m;
        if (l >= m + 2) {
          const double ll = l;
          const double mm = m;
          a[i] = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - mm * mm));
          b[i] = std::sqrt(((ll - 1.0) * (ll - 1.0) - mm * mm) / (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
        }
      }
    }
  }
};

const LegendreTable& legendre() {
  static const LegendreTable table;
  return table;
}

template <class T>
T eval_fourier(const Fourier2DRep& r, const T& x, const T& y) {
  T sum(r.a.empty() ? 0.0 : r.a[0]);
  T c(1.0);
  T s(0.0);
  const std::size_t K = r.a.size();
  for (std::size_t k = 1; k < K; ++k) {
    T cn = c * x - s * y;
    T sn = s * x + c * y;
    c = cn;
    s = sn;
    const double bk = k < r.b.size() ? r.b[k] : 0.0;
    sum += c * r.a[k] + s * bk;
  }
  return sum;
}

template <class T>
T eval_axisymmetric(const AxisymmetricRep& r, const T& t) {
  if (r.a.empty()) return T(0.0);
  T prev(1.0);
  T sum(r.a[0]);
  if (r.a.size() == 1) return sum;
  T cur = t;
  sum += cur * r.a[1];
  for (std::size_t k = 2; k < r.a.size(); ++k) {
    T next = 2.0 * (t * cur) - prev;
    prev = cur;
    cur = next;
    sum += cur * r.a[k];
  }
  return sum;
}

// Univariate second-order number for the Legendre recurrences in z.
struct Dual2 {
  double v = 0.0;
  double d = 0.0;
  double dd = 0.0;
};

inline double lower(const Dual2& a, double) { return a.v; }
template <int N>
Jet<N> lower(const Dual2& a, const Jet<N>& z) {
  return chain(z, a.v, a.d, a.dd);
}

// sum_l c_{l,m} p_lm(z) and sum_l c_{l,-m} p_lm(z) with derivatives in z.
void harmonic_column(const Harmonic3DRep& r, int m, double z, Dual2& accc, Dual2& accs) {
  const LegendreTable& tab = legendre();
  const int L = r.L;
  const double pmm = tab.diag[m];
  const double ccos = r.c[m * m + m + m];
  const double csin = m > 0 ? r.c[m * m + m - m] : 0.0;
  accc = {ccos * pmm, 0.0, 0.0};
  accs = {csin * pmm, 0.0, 0.0};
  if (m == L) return;
  const double k = std::sqrt(2.0 * m + 3.0) * pmm;
  double p2 = pmm, d2 = 0.0, e2 = 0.0;
  double p1 = k * z, d1 = k, e1 = 0.0;
  auto add = [&](int l, double p, double dp, double ep) {
    const double cc = r.c[l * l + l + m];
    accc.v += cc * p;
    accc.d += cc * dp;
    accc.dd += cc * ep;
    if (m > 0) {
      const double cs = r.c[l * l + l - m];
      accs.v += cs * p;
      accs.d += cs * dp;
      accs.dd += cs * ep;
    }
  };
  add(m + 1, p1, d1, e1);
  for (int l = m + 2; l <= L; ++l) {
    const int i = l * (l + 1) / 2 + m;
    const double a = tab.a[i];
    const double b = tab.b[i];
    const double p = a * (z * p1 - b * p2);
    const double dp = a * (p1 + z * d1 - b * d2);
    const double ep = a * (2.0 * d1 + z * e1 - b * e2);
    p2 = p1, d2 = d1, e2 = e1;
    p1 = p, d1 = dp, e1 = ep;
    add(l, p, dp, ep);
  }
}

template <class T>
T eval_harmonic(const Harmonic3DRep& r, const T& x, const T& y, const T& z) {
  const int L = r.L;
  if (L > kLegendreMax) throw GeometryError(ErrorKind::Unsupported, "harmonic bandwidth too large");
  std::vector<T> C(L + 1), S(L + 1);
  C[0] = T(1.0);
  S[0] = T(0.0);
  for (int m = 1; m <= L; ++m) {
    C[m] = C[m - 1] * x - S[m - 1] * y;
    S[m] = S[m - 1] * x + C[m - 1] * y;
  }
  const double root2 = std::sqrt(2.0);
  const double zv = value_of(z);
  T sum(0.0);
  Dual2 accc, accs;
  for (int m = 0; m <= L; ++m) {
    harmonic_column(r, m, zv, accc, accs);
    if (m == 0) {
      sum += lower(accc, z);
    } else {
      sum += (lower(accc, z) * C[m] + lower(accs, z) * S[m]) * root2;
    }
  }
  return sum;
}

template <class T>
T eval_unit(const SupportRep& rep, const T* u, int d) {
  if (const auto* a = std::get_if<AxisymmetricRep>(&rep)) return eval_axisymmetric(*a, u[d - 1]);
  if (const auto* f = std::get_if<Fourier2DRep>(&rep); f && d == 2) return eval_fourier(*f, u[0], u[1]);
  if (const auto* h = std::get_if<Harmonic3DRep>(&rep); h && d == 3) return eval_harmonic(*h, u[0], u[1], u[2]);
  throw GeometryError(ErrorKind::Unsupported, "not a spectral representation");
}

const EllipsoidRep* as_ellipsoid(const SupportRep& rep) {
  if (const auto* e = std::get_if<EllipsoidRep>(&rep)) return e;
  if (const auto* c = std::get_if<CapRep>(&rep)) return &c->chart;
  return nullptr;
}

template <int N>
SupportDerivs spectral_derivs(const SupportRep& rep, const Vec& xin) {
  using J = Jet<N>;
  J x[N];
  J r2(0.0);
  for (int i = 0; i < N; ++i) {
    x[i] = J::variable(xin[i], i);
    r2 += x[i] * x[i];
  }
  const J r = sqrt(r2);
  const J ir = inverse(r);
  J u[N];
  for (int i = 0; i < N; ++i) u[i] = x[i] * ir;
  const J H = r * eval_unit(rep, u, N);
  SupportDerivs out{H.v, Vec(N), Mat(N, N)};
  for (int i = 0; i < N; ++i) {
    out.grad[i] = H.g[i];
    for (int j = 0; j < N; ++j) out.hess(i, j) = H.h(i, j);
  }
  return out;
}

}  // namespace

std::string rep_kind(const SupportRep& rep) {
  switch (rep.index()) {
    case 0: return "cap";
    case 1: return "ellipsoid";
    case 2: return "axisymmetric";
    case 3: return "fourier2d";
    default: return "harmonic3d";
  }
}

int rep_bandwidth(const SupportRep& rep) {
  if (const auto* f = std::get_if<Fourier2DRep>(&rep)) return static_cast<int>(f->a.size()) - 1;
  if (const auto* a = std::get_if<AxisymmetricRep>(&rep)) return static_cast<int>(a->a.size()) - 1;
  if (const auto* h = std::get_if<Harmonic3DRep>(&rep)) return h->L;
  return 2;
}

double support_value(const SupportRep& rep, int d, const Vec& x) {
  if (const EllipsoidRep* e = as_ellipsoid(rep)) {
    const Eigen::VectorXd xv = x;
    return e->c.dot(xv) + std::sqrt(xv.dot(e->A * xv));
  }
  const double r = x.norm();
  double u[kMaxDim];
  for (int i = 0; i < d; ++i) u[i] = x[i] / r;
  return r * eval_unit<double>(rep, u, d);
}

SupportDerivs support_derivs(const SupportRep& rep, int d, const Vec& x) {
  if (const EllipsoidRep* e = as_ellipsoid(rep)) {
    const Eigen::VectorXd xv = x;
    const Eigen::VectorXd Ax = e->A * xv;
    const double s = std::sqrt(xv.dot(Ax));
    SupportDerivs out{e->c.dot(xv) + s, Vec(d), Mat(d, d)};
    out.grad = e->c + Ax / s;
    out.hess = e->A / s - Ax * Ax.transpose() / (s * s * s);
    return out;
  }
  switch (d) {
    case 2: return spectral_derivs<2>(rep, x);
    case 3: return spectral_derivs<3>(rep, x);
    case 4: return spectral_derivs<4>(rep, x);
    case 5: return spectral_derivs<5>(rep, x);
    case 6: return spectral_derivs<6>(rep, x);
    case 7: return spectral_derivs<7>(rep, x);
    default: throw GeometryError(ErrorKind::Unsupported, "dimension outside [2, 7]");
  }
}

void harmonic_basis_all(int L, const Eigen::Vector3d& u, std::vector<double>& out) {
  const LegendreTable& tab = legendre();
  out.assign((L + 1) * (L + 1), 0.0);
  std::vector<double> C(L + 1), S(L + 1);
  C[0] = 1.0;
  S[0] = 0.0;
  for (int m = 1; m <= L; ++m) {
    C[m] = C[m - 1] * u[0] - S[m - 1] * u[1];
    S[m] = S[m - 1] * u[0] + C[m - 1] * u[1];
  }
  const double root2 = std::sqrt(2.0);
  const double z = u[2];
  for (int m = 0; m <= L; ++m) {
    auto put = [&](int l, double p) {
      if (m == 0) {
        out[l * l + l] = p;
      } else {
        out[l * l + l + m] = root2 * p * C[m];
        out[l * l + l - m] = root2 * p * S[m];
      }
    };
    double p2 = tab.diag[m];
    put(m, p2);
    if (m == L) continue;
    double p1 = std::sqrt(2.0 * m + 3.0) * z * p2;
    put(m + 1, p1);
    for (int l = m + 2; l <= L; ++l) {
      const int i = l * (l + 1) / 2 + m;
      const double p = tab.a[i] * (z * p1 - tab.b[i] * p2);
      p2 = p1;
      p1 = p;
      put(l, p);
    }
  }
}

double harmonic_basis(int l, int m, const Eigen::Vector3d& u) {
  std::vector<double> all;
  harmonic_basis_all(l, u, all);
  return all[l * l + l + m];
}

}  // namespace sfa
