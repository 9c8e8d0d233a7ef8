#include "b3cert/hyperbolic.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "b3cert/burau.hpp"

namespace b3cert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-10;

}  // namespace

std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

Isometry Isometry::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("isometries are 2x2 matrices");
  Isometry iso;
  iso.matrix = m;
  const Complex det = det2(m);
  if (std::abs(det) < 1e-300) throw std::invalid_argument("singular matrix");
  const Complex s = std::sqrt(det);
  const Complex a = m(0, 0) / s, b = m(0, 1) / s, c = m(1, 0) / s, d = m(1, 1) / s;
  // Determinant one and preserving |z| < 1 means d = conj(a), c = conj(b).
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(d - std::conj(a)) > 1e-8 * scale || std::abs(c - std::conj(b)) > 1e-8 * scale) {
    // The other square root of the determinant flips both signs; the test is sign-invariant.
    throw std::invalid_argument("matrix does not preserve the unit disk");
  }
  const double tr = std::abs((a + d).real());
  if (tr > 2 + kTol) {
    iso.kind = IsometryKind::hyperbolic;
    return iso;
  }
  if (tr > 2 - kTol) {
    iso.kind = IsometryKind::parabolic;
    return iso;
  }
  iso.kind = IsometryKind::elliptic;
  Complex z;
  if (std::abs(c) < 1e-14) {
    z = b / (d - a);
  } else {
    const Complex disc = std::sqrt((d - a) * (d - a) + 4.0 * c * b);
    const Complex z1 = (a - d + disc) / (2.0 * c), z2 = (a - d - disc) / (2.0 * c);
    z = std::abs(z1) < std::abs(z2) ? z1 : z2;
  }
  iso.center = DiskPoint{z, 1e-12};
  const Complex deriv = 1.0 / ((c * z + d) * (c * z + d));
  const double theta = std::arg(deriv);
  iso.angle = std::abs(theta);
  iso.orientation = theta >= 0 ? 1 : -1;
  return iso;
}

DiskPoint moebius_apply(const ComplexMatrix& m, const DiskPoint& p) {
  const Complex w = (m(0, 0) * p.z + m(0, 1)) / (m(1, 0) * p.z + m(1, 1));
  if (std::abs(w) > 1 + 1e-12) throw std::domain_error("image outside the disk: matrix is not in U(1,1)");
  return {w, p.error_bound};
}

double hyp_distance(Complex z, Complex w) {
  const double r = std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
  return 2 * std::atanh(std::min(r, 1.0));
}

RotationData rotation_data(const Isometry& m) {
  if (m.kind != IsometryKind::elliptic)
    throw std::invalid_argument("rotation_data: isometry is " + to_string(m.kind) + ", not elliptic");
  return {*m.center, m.angle, m.orientation};
}

long transport_exponent(unsigned n, long m, unsigned N) {
  if (n == 0 || N % n != 0) throw std::invalid_argument("transport_exponent: n must divide N");
  const long nn = n;
  if (std::gcd(((m % nn) + nn) % nn, nn) != 1 && n > 1) throw std::invalid_argument("Galois exponent not coprime to n");
  for (long s = 1; s <= static_cast<long>(N); ++s) {
    if (std::gcd(s, static_cast<long>(N)) != 1) continue;
    if (((s * m) % nn + nn) % nn == 1 % nn) return s;
  }
  throw std::logic_error("no transport exponent");
}

ComplexMatrix U11Model::conjugate(const ExactMatrix& z) const {
  const unsigned N = std::lcm(2U, n);
  const long s = transport_exponent(n, m, N);
  ComplexMatrix e(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const CyclotomicNumber& x = z(i, j);
      if (N % x.order() != 0) throw std::invalid_argument("matrix entry outside the model's field");
      e(i, j) = x.lift(N).embed(s);
    }
  return V_inv * e * V;
}

ComplexMatrix U11Model::conjugate_word(const BraidWord& w) const { return conjugate(eval_word_minus_q(w, n, m)); }

U11Model u11_generators(unsigned n, long galois) {
  if (n < 7) throw std::invalid_argument("n = " + std::to_string(n) + " is not in the U(1,1) regime (need n >= 7)");
  U11Model mod;
  mod.n = n;
  mod.m = galois;
  transport_exponent(n, galois, std::lcm(2U, n));  // validates gcd
  mod.alpha = 2 * kPi / n;
  mod.q = std::polar(1.0, mod.alpha);
  const Complex q = mod.q;
  mod.a2 = std::sqrt(2 * std::cos(mod.alpha) - 1) / std::abs(1.0 - q);
  const double a = std::sqrt(mod.a2);
  mod.V = ComplexMatrix{{a, 1.0 / ((1.0 - q) * a)}, {0.0, 1.0 / a}};
  mod.V_inv = ComplexMatrix{{1.0 / a, -1.0 / ((1.0 - q) * a)}, {0.0, a}};
  mod.A = Isometry::from_matrix(mod.conjugate_word(BraidWord(3, {1, 1})));
  mod.B = Isometry::from_matrix(mod.conjugate_word(BraidWord(3, {2, 2})));
  mod.AB = Isometry::from_matrix(mod.conjugate_word(BraidWord(3, {1, 1, 2, 2})));
  mod.D = Isometry::from_matrix(mod.conjugate_word(BraidWord(3, {2})));
  mod.g1 = Isometry::from_matrix(mod.conjugate_word(BraidWord(3, {1})));
  mod.P = -(q * q - q + 1.0) / (q * (1.0 - q) * mod.a2);
  mod.Q = q * mod.P;
  return mod;
}

HypTriangle triangle_OPQ(unsigned n, long galois) {
  const U11Model mod = u11_generators(n, galois);
  HypTriangle t;
  const std::array<Complex, 3> v{Complex(0, 0), mod.P, mod.Q};
  for (int i = 0; i < 3; ++i) {
    t.vertices[i] = DiskPoint{v[i], 1e-12};
    const Complex u = v[(i + 1) % 3], w = v[(i + 2) % 3];
    t.sides[i] = hyp_distance(u, w);
    // Move the vertex to 0, where geodesics are straight.
    auto to_origin = [&](Complex z) { return (z - v[i]) / (1.0 - std::conj(v[i]) * z); };
    t.angles[i] = std::abs(std::arg(to_origin(u) / to_origin(w)));
  }
  return t;
}

bool discreteness_predicate(long m, long n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("discreteness_predicate needs gcd(m, n) = 1");
  return n % 2 == 0 ? n >= 4 : n >= 7;
}

std::vector<OrbitElement> rhombus_orbit(const U11Model& model, unsigned depth) {
  const ComplexMatrix A = model.A.matrix, B = model.B.matrix, AB = model.AB.matrix;
  struct Gen {
    FreeWord word;
    ComplexMatrix m;
  };
  const std::vector<Gen> gens{{FreeWord(2, {1}), A},           {FreeWord(2, {-1}), inverse2(A)},
                              {FreeWord(2, {2}), B},           {FreeWord(2, {-2}), inverse2(B)},
                              {FreeWord(2, {1, 2}), AB},       {FreeWord(2, {-2, -1}), inverse2(AB)}};
  // Generic interior point; its orbit separates group elements.
  const Complex x0 = 0.3 * model.P + 0.2 * model.Q;
  auto key = [&](const ComplexMatrix& m) {
    const Complex z = moebius_apply(m, DiskPoint{x0}).z;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.7f,%.7f", z.real() + 0.0, z.imag() + 0.0);
    return std::string(buf);
  };
  std::vector<OrbitElement> out{{FreeWord(2), ComplexMatrix::identity(2)}};
  std::map<std::string, bool> seen{{key(out[0].matrix), true}};
  std::size_t layer_begin = 0;
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (const auto& g : gens) {
        ComplexMatrix m = out[i].matrix * g.m;
        const Complex s = std::sqrt(det2(m));
        m = (1.0 / s) * m;
        const std::string k = key(m);
        if (seen.count(k)) continue;
        seen.emplace(k, true);
        out.push_back({out[i].word * g.word, m});
      }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace b3cert
