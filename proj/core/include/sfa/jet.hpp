#pragma once

#include <Eigen/Core>
#include <cmath>

namespace sfa {

// Second-order forward-mode number: value, gradient and Hessian in N variables.
template <int N>
struct Jet {
  using GradT = Eigen::Matrix<double, N, 1>;
  using HessT = Eigen::Matrix<double, N, N>;

  double v = 0.0;
  GradT g = GradT::Zero();
  HessT h = HessT::Zero();

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT: implicit constants are convenient in templates

  static Jet variable(double value, int index) {
    Jet j(value);
    j.g[index] = 1.0;
    return j;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    g += o.g;
    h += o.h;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    g -= o.g;
    h -= o.h;
    return *this;
  }
  Jet& operator*=(double s) {
    v *= s;
    g *= s;
    h *= s;
    return *this;
  }
};

template <int N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) {
  return a += b;
}
template <int N>
Jet<N> operator-(Jet<N> a, const Jet<N>& b) {
  return a -= b;
}
template <int N>
Jet<N> operator-(Jet<N> a) {
  return a *= -1.0;
}
template <int N>
Jet<N> operator*(Jet<N> a, double s) {
  return a *= s;
}
template <int N>
Jet<N> operator*(double s, Jet<N> a) {
  return a *= s;
}
template <int N>
Jet<N> operator+(Jet<N> a, double s) {
  a.v += s;
  return a;
}
template <int N>
Jet<N> operator+(double s, Jet<N> a) {
  a.v += s;
  return a;
}
template <int N>
Jet<N> operator-(Jet<N> a, double s) {
  a.v -= s;
  return a;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v * b.v;
  r.g = a.v * b.g + b.v * a.g;
  const typename Jet<N>::HessT outer = a.g * b.g.transpose();
  r.h = a.v * b.h + b.v * a.h + outer + outer.transpose();
  return r;
}

// f(a) from f, f', f'' at a.v.
template <int N>
Jet<N> chain(const Jet<N>& a, double f0, double f1, double f2) {
  Jet<N> r;
  r.v = f0;
  r.g = f1 * a.g;
  r.h = f1 * a.h + f2 * (a.g * a.g.transpose());
  return r;
}

template <int N>
Jet<N> sqrt(const Jet<N>& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

template <int N>
Jet<N> inverse(const Jet<N>& a) {
  const double i = 1.0 / a.v;
  return chain(a, i, -i * i, 2.0 * i * i * i);
}

template <int N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
  return a * inverse(b);
}

inline double inverse(double a) { return 1.0 / a; }

inline double value_of(double x) { return x; }
template <int N>
double value_of(const Jet<N>& x) {
  return x.v;
}

}  // namespace sfa
