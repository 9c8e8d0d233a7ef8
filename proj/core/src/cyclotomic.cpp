#include "b3cert/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace b3cert {

namespace {

using Poly = std::vector<Rational>;

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic; num is divisible by den.
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {1};
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Polynomial long division over Q; b must be nonzero after trimming.
void divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    quot.clear();
    rem = std::move(a);
    return;
  }
  quot.assign(a.size() - db, Rational(0));
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    if (sgn(a[i]) == 0) continue;
    Rational c = a[i] / lead;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  rem = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicNumber::CyclotomicNumber(const Rational& value, unsigned order) : order_(order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_.assign(euler_phi(order), Rational(0));
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

std::vector<Rational> CyclotomicNumber::reduce(unsigned order, std::vector<Rational> poly) {
  const unsigned deg = euler_phi(order);
  if (poly.size() > order) {
    for (std::size_t e = order; e < poly.size(); ++e) {
      if (sgn(poly[e]) != 0) poly[e % order] += poly[e];
    }
    poly.resize(order);
  }
  const auto& phi = cyclotomic_polynomial(order);
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (unsigned j = 0; j < deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
    poly[i] = 0;
  }
  poly.resize(deg, Rational(0));
  return poly;
}

CyclotomicNumber CyclotomicNumber::root(unsigned order, long exponent) {
  if (order == 0) throw std::invalid_argument("cyc_root: order must be positive");
  long e = exponent % static_cast<long>(order);
  if (e < 0) e += order;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[e] = 1;
  return CyclotomicNumber(order, reduce(order, std::move(poly)));
}

CyclotomicNumber CyclotomicNumber::from_powers(unsigned order, const std::vector<Rational>& coeffs) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rational> c = coeffs;
  for (auto& x : c) x.canonicalize();  // mpq equality assumes canonical form
  return CyclotomicNumber(order, reduce(order, std::move(c)));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::lift(unsigned m) const {
  if (m == order_) return *this;
  if (m == 0 || m % order_ != 0) throw std::invalid_argument("lift: target order must be a multiple");
  const unsigned step = m / order_;
  std::vector<Rational> poly(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) poly[e * step] = coeffs_[e];
  return CyclotomicNumber(m, reduce(m, std::move(poly)));
}

CyclotomicNumber CyclotomicNumber::galois(long s) const {
  const long n = order_;
  if (std::gcd(((s % n) + n) % n, n) != 1 && n > 1) throw std::invalid_argument("galois: exponent not coprime to order");
  long step = ((s % n) + n) % n;
  std::vector<Rational> poly(order_, Rational(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (sgn(coeffs_[e]) == 0) continue;
    poly[(static_cast<long>(e) * step) % n] += coeffs_[e];
  }
  return CyclotomicNumber(order_, reduce(order_, std::move(poly)));
}

CyclotomicNumber CyclotomicNumber::conj() const { return galois(static_cast<long>(order_) - 1); }

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CyclotomicNumber(Rational(1) / coeffs_[0], order_);
  const auto& phi = cyclotomic_polynomial(order_);
  Poly r0(phi.begin(), phi.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (r1.size() > 1) {
    Poly quot, rem;
    divmod(r0, r1, quot, rem);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_n is irreducible.
  const Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  return CyclotomicNumber(order_, reduce(order_, std::move(s1)));
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(Rational(1), order_);
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> CyclotomicNumber::embed(long galois_exponent) const {
  const long n = order_;
  const long s = ((galois_exponent % n) + n) % n;
  if (n > 1 && std::gcd(s, n) != 1) throw std::invalid_argument("embed: Galois exponent not coprime to order");
  long double re = 0, im = 0;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (sgn(coeffs_[e]) == 0) continue;
    const long k = (static_cast<long>(e) * s) % n;
    const long double theta = 2.0L * std::numbers::pi_v<long double> * k / n;
    const long double c = coeffs_[e].get_d();
    re += c * std::cos(theta);
    im += c * std::sin(theta);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::size_t CyclotomicNumber::hash() const {
  std::size_t h = order_;
  for (const auto& c : coeffs_) {
    const std::size_t num = mpz_get_ui(c.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(c)) << 7);
    const std::size_t den = mpz_get_ui(c.get_den_mpz_t());
    h ^= num + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= den + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const Rational& c = coeffs_[e];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) out << "-";
    const Rational mag = abs(c);
    if (e == 0) out << mag;
    else {
      if (mag != 1) out << mag << "*";
      out << "z";
      if (e > 1) out << "^" << e;
    }
    first = false;
  }
  if (first) out << "0";
  if (order_ > 1) out << " [z=zeta_" << order_ << "]";
  return out.str();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_) {
    const unsigned m = lcm_u(order_, rhs.order_);
    *this = lift(m);
    return *this += rhs.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_) {
    const unsigned m = lcm_u(order_, rhs.order_);
    *this = lift(m);
    return *this -= rhs.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_) {
    const unsigned m = lcm_u(order_, rhs.order_);
    *this = lift(m);
    return *this *= rhs.lift(m);
  }
  if (rhs.is_rational()) {
    const Rational& r = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= r;
    return *this;
  }
  coeffs_ = reduce(order_, poly_mul(coeffs_, rhs.coeffs_));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  return *this *= rhs.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const unsigned m = lcm_u(a.order_, b.order_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

CyclotomicNumber cyc_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("cyc_arith: unknown operation");
}

std::optional<unsigned long> root_order(const CyclotomicNumber& u) {
  if (u.is_zero()) return std::nullopt;
  // Roots of unity in Q(zeta_n) have order dividing lcm(2, n).
  const unsigned long bound = std::lcm(2UL, static_cast<unsigned long>(u.order()));
  if (std::abs(std::abs(u.embed()) - 1.0) > 1e-6) return std::nullopt;
  if (!u.pow(static_cast<long>(bound)).is_one()) return std::nullopt;
  for (unsigned long t = 1; t <= bound; ++t) {
    if (bound % t != 0) continue;
    if (u.pow(static_cast<long>(t)).is_one()) return t;
  }
  return bound;
}

}  // namespace b3cert
