#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>

#include "b3cert/braid.hpp"
#include "b3cert/matrix.hpp"

namespace b3cert {

/// Reduced Burau matrix of g_i^{sign} on n strands with entries built from q and 1/q.
template <class T>
Matrix<T> burau_generator_with(int i, int n, const T& q, const T& qinv) {
  const int idx = i > 0 ? i : -i;
  if (n < 2 || idx < 1 || idx > n - 1) throw std::out_of_range("burau generator index out of range");
  const std::size_t d = static_cast<std::size_t>(n - 1);
  Matrix<T> m = Matrix<T>::identity(d);
  const std::size_t r = static_cast<std::size_t>(idx - 1);
  if (i > 0) {
    if (r > 0) m(r, r - 1) = q;
    m(r, r) = -q;
    if (r + 1 < d) m(r, r + 1) = T(1);
  } else {
    if (r > 0) m(r, r - 1) = T(1);
    m(r, r) = -qinv;
    if (r + 1 < d) m(r, r + 1) = qinv;
  }
  return m;
}

/// Signed index i gives g_|i| or its inverse; generic q.
LaurentMatrix burau_generator(int i, int strands);
/// beta_t(g_i) with t substituted exactly.
ExactMatrix burau_generator(int i, int strands, const CyclotomicNumber& t);

LaurentMatrix eval_word_generic(const BraidWord& w);
ExactMatrix eval_word(const BraidWord& w, const CyclotomicNumber& t);

/// beta_{-q} with q = zeta_n^m, the parameter convention of the triangle-group images.
ExactMatrix eval_word_minus_q(const BraidWord& w, unsigned n, long m = 1);

/// Jones pair at an exact q (not -1, not a primitive cube root), in the gauge ab = 1:
/// rho(g1) = diag(q, -1), rho(g2) = [[-1/(q+1), -(q+1)], [-q(q^2+q+1)/(q+1)^3, q^2/(q+1)]].
std::pair<ExactMatrix, ExactMatrix> jones_pair(const CyclotomicNumber& q);

/// Numerical Jones pair at q = exp(i alpha) with c > 0 real and the given r.
/// The modulus of c is fixed by |c| r |q+1|^2 = sqrt|q + conj(q) + 1|.
struct JonesPair {
  ComplexMatrix g1;
  ComplexMatrix g2;
  double c = 0;
  double r = 1;
  int epsilon = 1;
};
JonesPair jones_pair_numeric(double alpha, double r = 1.0);

/// sign(q + conj(q) + 1) at q = exp(i alpha), with +1 on the closed interval.
int jones_epsilon(double alpha);

/// V with V rho(g_j) V^-1 = -beta_q(g_j); singular at primitive cube roots.
ExactMatrix conjugator_V(const CyclotomicNumber& q);
bool check_conjugacy(const CyclotomicNumber& q);

/// Quadratic and rank-one relations of the two-generator quotient.
bool check_tl_relations(const ExactMatrix& r1, const ExactMatrix& r2, const CyclotomicNumber& q);

enum class FormClass { positive_definite_U2, indefinite_U11, degenerate };
std::string to_string(FormClass c);

struct UnitarityClass {
  FormClass tag;
  int epsilon;
};

/// Invariant Hermitian form of beta_t, t = -exp(i alpha).
UnitarityClass classify_form(double alpha);

using Rotation3 = std::array<std::array<double, 3>, 3>;

struct AxisAngle {
  std::array<double, 3> axis;
  double angle;  // in [0, pi]
};

/// Unitary 2x2 (within 1e-10) to SO(3) after scaling to determinant 1.
Rotation3 so3_image(const ComplexMatrix& m);
AxisAngle axis_angle(const Rotation3& r);
AxisAngle axis_angle(const ComplexMatrix& m);

/// Unit lambda with lambda^2 q = -1 and arg in [0, pi).
std::complex<double> su2_scalar(double alpha);

/// Angle between the rotation axes (as lines) of the images of g1 and g2, and
/// the signed cosine of the directed axes.
struct AxesAngle {
  double theta;
  double signed_cos;
};
AxesAngle jones_axes_angle(double alpha);

}  // namespace b3cert
