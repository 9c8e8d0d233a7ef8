#pragma once

// Reflection-chamber geometry in the Poincare disk, templated on the real type so
// the membership walk can run in extended precision.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "b3cert/cyclotomic.hpp"

namespace b3cert {

template <class R>
struct Cx {
  R re{0};
  R im{0};

  Cx() = default;
  Cx(R r, R i = R(0)) : re(std::move(r)), im(std::move(i)) {}

  Cx conj() const { return {re, -im}; }
  R norm() const { return re * re + im * im; }

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Cx operator*(const R& s, const Cx& a) { return {s * a.re, s * a.im}; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const R d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

template <class R>
R cx_abs(const Cx<R>& z) {
  using std::sqrt;
  return sqrt(z.norm());
}

/// 2x2 complex matrix acting by Moebius transformations.
template <class R>
struct Mobius {
  Cx<R> a, b, c, d;

  Cx<R> apply(const Cx<R>& z) const { return (a * z + b) / (c * z + d); }
  friend Mobius operator*(const Mobius& x, const Mobius& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mobius inverse() const {
    const Cx<R> det = a * d - b * c;
    return {d / det, -b / det, -c / det, a / det};
  }
};

/// Geodesic {A(|z|^2 + 1) + 2 Re(conj(B) z) = 0}; a line through 0 when A = 0.
template <class R>
struct Geodesic {
  R A{0};
  Cx<R> B;

  R value(const Cx<R>& z) const { return A * (z.norm() + R(1)) + R(2) * (B.re * z.re + B.im * z.im); }

  Cx<R> reflect(const Cx<R>& z) const {
    const Cx<R> zb = z.conj();
    return (-(B * zb) - Cx<R>(A)) / (Cx<R>(A) * zb + B.conj());
  }

  static Geodesic through(const Cx<R>& p, const Cx<R>& q) {
    // Cross product of (|z|^2 + 1, 2x, 2y) for the two points.
    const R u0 = p.norm() + R(1), u1 = R(2) * p.re, u2 = R(2) * p.im;
    const R v0 = q.norm() + R(1), v1 = R(2) * q.re, v2 = R(2) * q.im;
    Geodesic g;
    g.A = u1 * v2 - u2 * v1;
    g.B = Cx<R>(u2 * v0 - u0 * v2, u0 * v1 - u1 * v0);
    using std::sqrt;
    const R scale = sqrt(g.B.norm() - g.A * g.A);
    g.A = g.A / scale;
    g.B = Cx<R>(g.B.re / scale, g.B.im / scale);
    return g;
  }
};

/// Triangle with the reflection in side i opposite vertex i.
template <class R>
struct Chamber {
  std::array<Cx<R>, 3> vertex;
  std::array<Geodesic<R>, 3> side;
  std::array<int, 3> inside_sign{};

  static Chamber from_vertices(const std::array<Cx<R>, 3>& v) {
    Chamber c;
    c.vertex = v;
    for (int i = 0; i < 3; ++i) {
      c.side[i] = Geodesic<R>::through(v[(i + 1) % 3], v[(i + 2) % 3]);
      c.inside_sign[i] = c.side[i].value(v[i]) > R(0) ? 1 : -1;
    }
    return c;
  }

  /// Signed distance-like value of z from side i, positive inside.
  R margin(int i, const Cx<R>& z) const { return R(inside_sign[i]) * side[i].value(z); }
};

template <class R>
struct Walk {
  std::vector<int> reflections;  // sides crossed, in order
  Cx<R> final_point;
  R min_margin;                  // smallest |side value| met while deciding
  bool converged = false;
};

/// Reflect z across violated sides until it lies in the chamber.
/// Then z = r_1 r_2 ... r_L (final_point).
template <class R>
Walk<R> chamber_walk(const Chamber<R>& ch, Cx<R> z, std::size_t max_steps) {
  using std::abs;
  Walk<R> w;
  w.min_margin = R(1e300);
  for (std::size_t step = 0; step <= max_steps; ++step) {
    int worst = -1;
    R worst_val(0);
    for (int i = 0; i < 3; ++i) {
      const R m = ch.margin(i, z);
      const R am = abs(m);
      if (am < w.min_margin) w.min_margin = am;
      if (m < R(0) && (worst < 0 || m < worst_val)) {
        worst = i;
        worst_val = m;
      }
    }
    if (worst < 0) {
      w.final_point = z;
      w.converged = true;
      return w;
    }
    z = ch.side[worst].reflect(z);
    w.reflections.push_back(worst);
  }
  w.final_point = z;
  return w;
}

/// exp(2 pi i e / N) in the real type R.
template <class R>
Cx<R> unit_root(long e, long N, const R& pi) {
  using std::cos;
  using std::sin;
  const R theta = R(2) * pi * R(e) / R(N);
  return {cos(theta), sin(theta)};
}

template <class R>
R rational_as(const Rational& q) {
  if constexpr (std::is_floating_point_v<R>) {
    return static_cast<R>(q.get_d());
  } else {
    return R(q.get_num().get_str()) / R(q.get_den().get_str());
  }
}

/// Value of x under zeta_N -> exp(2 pi i s / N).
template <class R>
Cx<R> embed_as(const CyclotomicNumber& x, long s, const R& pi) {
  const long N = x.order();
  Cx<R> out;
  const auto& c = x.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (sgn(c[e]) == 0) continue;
    out = out + rational_as<R>(c[e]) * unit_root<R>((static_cast<long>(e) * s) % N, N, pi);
  }
  return out;
}

}  // namespace b3cert
