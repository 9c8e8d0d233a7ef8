#include "b3cert/burau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace b3cert {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  // to (-pi, pi]
  a = std::remainder(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

std::array<double, 3> normalized(std::array<double, 3> v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (auto& x : v) x /= n;
  return v;
}

}  // namespace

LaurentMatrix burau_generator(int i, int strands) {
  return burau_generator_with<LaurentPoly>(i, strands, LaurentPoly::q(1), LaurentPoly::q(-1));
}

ExactMatrix burau_generator(int i, int strands, const CyclotomicNumber& t) {
  if (t.is_zero()) throw std::invalid_argument("Burau parameter must be nonzero");
  return burau_generator_with<CyclotomicNumber>(i, strands, t, t.inverse());
}

LaurentMatrix eval_word_generic(const BraidWord& w) {
  const int n = w.strands;
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(n - 1));
  for (int x : w.letters) m = m * burau_generator(x, n);
  return m;
}

ExactMatrix eval_word(const BraidWord& w, const CyclotomicNumber& t) {
  if (t.is_zero()) throw std::invalid_argument("Burau parameter must be nonzero");
  const int n = w.strands;
  const CyclotomicNumber tinv = t.inverse();
  // Lift the identity to the parameter's field so entries share one order.
  const CyclotomicNumber one(Rational(1), t.order());
  ExactMatrix m(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, k) = one;
  if (w.empty()) return m;
  ExactMatrix gens[2][2];
  if (n == 3) {
    for (int s = 0; s < 2; ++s) {
      gens[s][0] = burau_generator_with<CyclotomicNumber>(s + 1, 3, t, tinv);
      gens[s][1] = burau_generator_with<CyclotomicNumber>(-(s + 1), 3, t, tinv);
    }
  }
  for (int x : w.letters) {
    if (n == 3) m = m * gens[std::abs(x) - 1][x < 0 ? 1 : 0];
    else m = m * burau_generator_with<CyclotomicNumber>(x, n, t, tinv);
  }
  return m;
}

ExactMatrix eval_word_minus_q(const BraidWord& w, unsigned n, long m) {
  return eval_word(w, -CyclotomicNumber::root(n, m));
}

std::pair<ExactMatrix, ExactMatrix> jones_pair(const CyclotomicNumber& q) {
  const CyclotomicNumber one(Rational(1), q.order());
  const CyclotomicNumber q1 = q + one;
  if (q1.is_zero()) throw std::invalid_argument("q = -1: the representations are abelian");
  const CyclotomicNumber q1inv = q1.inverse();
  const CyclotomicNumber cube = q * q + q + one;
  ExactMatrix r1{{q, CyclotomicNumber(0)}, {CyclotomicNumber(0), -one}};
  ExactMatrix r2{{-q1inv, -q1}, {-(q * cube) * q1inv.pow(3), q * q * q1inv}};
  return {r1, r2};
}

int jones_epsilon(double alpha) {
  return 1.0 + 2.0 * std::cos(alpha) >= -1e-12 ? 1 : -1;
}

JonesPair jones_pair_numeric(double alpha, double r) {
  using C = std::complex<double>;
  const C q = std::polar(1.0, alpha);
  if (std::abs(q + 1.0) < 1e-12) throw std::invalid_argument("q = -1: the representations are abelian");
  if (r == 0) throw std::invalid_argument("r must be nonzero");
  JonesPair out;
  out.epsilon = jones_epsilon(alpha);
  out.r = r;
  out.c = std::sqrt(std::abs(2.0 * std::cos(alpha) + 1.0)) / (std::norm(q + 1.0) * std::abs(r));
  const C c(out.c, 0.0);
  out.g1 = ComplexMatrix{{q, 0.0}, {0.0, -1.0}};
  out.g2 = ComplexMatrix{{-1.0 / (q + 1.0), -(q + 1.0) * c},
                         {-double(out.epsilon) * (q + 1.0) * std::conj(c) * (r * r), q * q / (q + 1.0)}};
  return out;
}

ExactMatrix conjugator_V(const CyclotomicNumber& q) {
  const CyclotomicNumber one(Rational(1), q.order());
  const CyclotomicNumber q1 = q + one;
  if (q1.is_zero()) throw std::invalid_argument("q = -1: the representations are abelian");
  const CyclotomicNumber cube = q * q + q + one;
  if (cube.is_zero()) throw std::invalid_argument("q is a primitive cube root of unity: V is singular");
  const CyclotomicNumber q1inv = q1.inverse();
  return ExactMatrix{{cube * q1inv.pow(3), q1inv}, {CyclotomicNumber(0), one}};
}

bool check_conjugacy(const CyclotomicNumber& q) {
  const auto [r1, r2] = jones_pair(q);
  const ExactMatrix v = conjugator_V(q);
  const ExactMatrix vinv = inverse2(v);
  const CyclotomicNumber minus_one(Rational(-1), q.order());
  const BraidWord g1 = BraidWord::gen(1), g2 = BraidWord::gen(2);
  return v * r1 * vinv == minus_one * eval_word(g1, q) && v * r2 * vinv == minus_one * eval_word(g2, q);
}

bool check_tl_relations(const ExactMatrix& r1, const ExactMatrix& r2, const CyclotomicNumber& q) {
  const ExactMatrix id = ExactMatrix::identity(2);
  const ExactMatrix qid = q * id;
  for (const ExactMatrix* g : {&r1, &r2}) {
    if (!((*g - qid) * (*g + id)).is_zero()) return false;
  }
  const ExactMatrix sum = id + r1 + r2 + r1 * r2 + r2 * r1 + r1 * r2 * r1;
  return sum.is_zero();
}

std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::positive_definite_U2: return "positive_definite_U2";
    case FormClass::indefinite_U11: return "indefinite_U11";
    case FormClass::degenerate: return "degenerate";
  }
  return "unknown";
}

UnitarityClass classify_form(double alpha) {
  constexpr double tol = 1e-12;
  const double a = std::abs(wrap_angle(alpha));
  UnitarityClass out{FormClass::degenerate, 1 - 2.0 * std::cos(alpha) >= -tol ? 1 : -1};
  if (a < tol || std::abs(a - kPi / 3) < tol) return out;
  out.tag = a > kPi / 3 ? FormClass::positive_definite_U2 : FormClass::indefinite_U11;
  return out;
}

Rotation3 so3_image(const ComplexMatrix& m) {
  using C = std::complex<double>;
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("so3_image needs a 2x2 matrix");
  const ComplexMatrix mh = m.map([](const C& x) { return std::conj(x); });
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      C s = 0;
      for (std::size_t k = 0; k < 2; ++k) s += m(i, k) * mh(j, k);
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-10) throw std::invalid_argument("matrix is not unitary");
    }
  const C scale = 1.0 / std::sqrt(det2(m));
  const C a = scale * m(0, 0), b = scale * m(0, 1);
  const double w = a.real(), x = a.imag(), y = b.real(), z = b.imag();
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

AxisAngle axis_angle(const Rotation3& r) {
  const double tr = r[0][0] + r[1][1] + r[2][2];
  const double cosang = std::clamp((tr - 1) / 2, -1.0, 1.0);
  AxisAngle out{{1, 0, 0}, std::acos(cosang)};
  const std::array<double, 3> anti{r[2][1] - r[1][2], r[0][2] - r[2][0], r[1][0] - r[0][1]};
  const double anti_norm = std::sqrt(anti[0] * anti[0] + anti[1] * anti[1] + anti[2] * anti[2]);
  if (anti_norm > 1e-9) {
    out.axis = normalized(anti);
    return out;
  }
  if (out.angle < 1e-6) return out;
  // Half-turn: (R + I)/2 = n n^T.
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (r[i][i] > r[best][best]) best = i;
  std::array<double, 3> col{};
  for (int i = 0; i < 3; ++i) col[i] = (r[i][best] + (i == best ? 1.0 : 0.0)) / 2;
  out.axis = normalized(col);
  return out;
}

AxisAngle axis_angle(const ComplexMatrix& m) { return axis_angle(so3_image(m)); }

std::complex<double> su2_scalar(double alpha) {
  // lambda^2 = -1/q = exp(i(pi - alpha))
  double arg = wrap_angle(kPi - alpha) / 2;
  if (arg < 0) arg += kPi;
  if (arg >= kPi) arg -= kPi;
  return std::polar(1.0, arg);
}

AxesAngle jones_axes_angle(double alpha) {
  const JonesPair jp = jones_pair_numeric(alpha);
  if (jp.epsilon != 1) throw std::invalid_argument("Jones pair is not unitary at this angle");
  const std::complex<double> lambda = su2_scalar(alpha);
  const AxisAngle a1 = axis_angle(lambda * jp.g1);
  const AxisAngle a2 = axis_angle(lambda * jp.g2);
  const double dot = a1.axis[0] * a2.axis[0] + a1.axis[1] * a2.axis[1] + a1.axis[2] * a2.axis[2];
  return {std::acos(std::clamp(std::abs(dot), 0.0, 1.0)), dot};
}

}  // namespace b3cert
