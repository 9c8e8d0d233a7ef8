#include "b3cert/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace b3cert {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c, long exponent) {
  if (sgn(c) != 0) terms_.emplace(exponent, c);
}

void LaurentPoly::add_term(long e, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

long LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1 || abs(terms_.begin()->second) != 1)
    throw std::domain_error("Laurent polynomial is not a unit");
  return LaurentPoly(terms_.begin()->second, -terms_.begin()->first);
}

CyclotomicNumber LaurentPoly::evaluate(const CyclotomicNumber& t) const {
  CyclotomicNumber out(Rational(0), t.order());
  if (terms_.empty()) return out;
  // Horner in t over [min, max], then shift by t^min.
  const long lo = min_degree();
  const long hi = max_degree();
  auto it = terms_.rbegin();
  for (long e = hi; e >= lo; --e) {
    out *= t;
    if (it != terms_.rend() && it->first == e) {
      out += CyclotomicNumber(Rational(it->second), t.order());
      ++it;
    }
  }
  return lo == 0 ? out : out * t.pow(lo);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) out << "-";
    const Integer mag = abs(c);
    if (e == 0) out << mag;
    else {
      if (mag != 1) out << mag << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

}  // namespace b3cert
