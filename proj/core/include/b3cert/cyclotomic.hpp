#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace b3cert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised on division by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// Euler's totient, the degree of Phi_n.
unsigned euler_phi(unsigned n);

/// Exact element of Q(zeta_n).
///
/// Stored as coefficients on the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// i.e. reduced modulo Phi_n. Equal elements of the same order have
/// identical stored coefficients. Mixed-order operations lift both sides to
/// the lcm of the orders.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(Rational(0), 1) {}
  CyclotomicNumber(long value) : CyclotomicNumber(Rational(value), 1) {}  // NOLINT: implicit by design of matrix templates
  explicit CyclotomicNumber(const Rational& value, unsigned order = 1);

  /// zeta_n^e for any integer e.
  static CyclotomicNumber root(unsigned order, long exponent);

  /// Sum_e coeffs[e] zeta_n^e for an arbitrary-length coefficient list.
  static CyclotomicNumber from_powers(unsigned order, const std::vector<Rational>& coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  /// Same element viewed in Q(zeta_m); requires order() | m.
  CyclotomicNumber lift(unsigned m) const;

  /// Complex conjugation, zeta_n -> zeta_n^(n-1).
  CyclotomicNumber conj() const;

  /// Galois automorphism zeta_n -> zeta_n^s, gcd(s, n) = 1.
  CyclotomicNumber galois(long s) const;

  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;

  /// Numerical value of the Galois conjugate zeta_n -> exp(2 pi i s / n).
  std::complex<double> embed(long galois_exponent = 1) const;

  std::size_t hash() const;
  std::string to_string() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

 private:
  CyclotomicNumber(unsigned order, std::vector<Rational> reduced) : order_(order), coeffs_(std::move(reduced)) {}
  static std::vector<Rational> reduce(unsigned order, std::vector<Rational> poly);

  unsigned order_;
  std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul, div };

/// Dispatch form of the four field operations.
CyclotomicNumber cyc_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, ArithOp op);

/// Smallest t >= 1 with u^t = 1, or nullopt when u is not a root of unity.
std::optional<unsigned long> root_order(const CyclotomicNumber& u);

}  // namespace b3cert

template <>
struct std::hash<b3cert::CyclotomicNumber> {
  std::size_t operator()(const b3cert::CyclotomicNumber& c) const noexcept { return c.hash(); }
};
