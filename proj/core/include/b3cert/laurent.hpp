#pragma once

#include <map>
#include <string>

#include "b3cert/cyclotomic.hpp"

namespace b3cert {

/// Integer Laurent polynomial in one variable q. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Integer& c, long exponent);

  /// The monomial q^e.
  static LaurentPoly q(long e = 1) { return LaurentPoly(Integer(1), e); }

  const std::map<long, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_degree() const;
  long max_degree() const;

  /// Inverse of a unit +-q^e; throws otherwise.
  LaurentPoly unit_inverse() const;

  /// Exact specialization at a cyclotomic number.
  CyclotomicNumber evaluate(const CyclotomicNumber& t) const;

  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void add_term(long e, const Integer& c);
  std::map<long, Integer> terms_;
};

}  // namespace b3cert
