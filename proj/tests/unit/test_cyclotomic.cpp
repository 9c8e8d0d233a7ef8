#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "b3cert/cyclotomic.hpp"

using namespace b3cert;

namespace {

// Oracle: evaluate the power-basis coefficients with std::complex.
std::complex<double> naive_value(const std::vector<Rational>& c, unsigned n) {
  std::complex<double> out = 0;
  for (std::size_t e = 0; e < c.size(); ++e) out += c[e].get_d() * std::polar(1.0, 2 * std::numbers::pi * e / n);
  return out;
}

CyclotomicNumber random_element(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c(n);
  for (auto& x : c) x = Rational(d(rng), 1 + std::abs(d(rng)));
  return CyclotomicNumber::from_powers(n, c);
}

unsigned brute_phi(unsigned n) {
  unsigned c = 0;
  for (unsigned k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST(Cyclotomic, PolynomialDegreeIsTotient) {
  for (unsigned n = 1; n <= 60; ++n) {
    EXPECT_EQ(cyclotomic_polynomial(n).size(), brute_phi(n) + 1) << n;
    EXPECT_EQ(euler_phi(n), brute_phi(n));
  }
}

TEST(Cyclotomic, PolynomialVanishesAtPrimitiveRoot) {
  for (unsigned n = 1; n <= 40; ++n) {
    std::complex<double> v = 0;
    const auto& p = cyclotomic_polynomial(n);
    for (std::size_t e = 0; e < p.size(); ++e) v += static_cast<double>(p[e]) * std::polar(1.0, 2 * std::numbers::pi * e / n);
    EXPECT_LT(std::abs(v), 1e-8) << n;
  }
}

TEST(Cyclotomic, ArithmeticMatchesComplexEmbedding) {
  std::mt19937 rng(11);
  for (unsigned n : {1u, 2u, 3u, 5u, 8u, 12u, 15u, 24u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CyclotomicNumber a = random_element(rng, n), b = random_element(rng, n);
      const auto ea = a.embed(), eb = b.embed();
      EXPECT_LT(std::abs((a + b).embed() - (ea + eb)), 1e-9);
      EXPECT_LT(std::abs((a - b).embed() - (ea - eb)), 1e-9);
      EXPECT_LT(std::abs((a * b).embed() - ea * eb), 1e-8);
      if (!b.is_zero()) {
        EXPECT_LT(std::abs((a / b).embed() - ea / eb), 1e-6 * (1 + std::abs(ea / eb)));
        EXPECT_EQ((a / b) * b, a);
      }
    }
  }
}

TEST(Cyclotomic, StoredFormIsCanonical) {
  // zeta_6 = zeta_6^7 and 1 + zeta_3 + zeta_3^2 = 0.
  EXPECT_EQ(CyclotomicNumber::root(6, 1), CyclotomicNumber::root(6, 7));
  const CyclotomicNumber z = CyclotomicNumber::root(3, 1);
  EXPECT_TRUE((CyclotomicNumber(1) + z + z * z).is_zero());
  EXPECT_EQ(CyclotomicNumber::root(6, 1).hash(), CyclotomicNumber::root(6, 7).hash());
}

TEST(Cyclotomic, EmbeddingOfRootIsExpOfAngle) {
  for (unsigned n : {5u, 7u, 12u})
    for (long m = 1; m < static_cast<long>(n); ++m) {
      if (std::gcd(static_cast<long>(n), m) != 1) continue;
      const auto v = CyclotomicNumber::root(n, 1).embed(m);
      EXPECT_LT(std::abs(v - std::polar(1.0, 2 * std::numbers::pi * m / n)), 1e-12);
      EXPECT_LT(std::abs(naive_value(CyclotomicNumber::root(n, m).coeffs(), n) - v), 1e-9);
    }
}

TEST(Cyclotomic, GaloisIsRingHomomorphism) {
  std::mt19937 rng(3);
  const unsigned n = 20;
  for (long s : {3L, 7L, 9L, 11L}) {
    const auto a = random_element(rng, n), b = random_element(rng, n);
    EXPECT_EQ((a * b).galois(s), a.galois(s) * b.galois(s));
    EXPECT_EQ((a + b).galois(s), a.galois(s) + b.galois(s));
    EXPECT_LT(std::abs(a.galois(s).embed() - a.embed(s)), 1e-8);
  }
  EXPECT_THROW(CyclotomicNumber::root(20, 1).galois(2), std::invalid_argument);
}

TEST(Cyclotomic, ConjugateIsComplexConjugate) {
  std::mt19937 rng(5);
  const auto a = random_element(rng, 9);
  EXPECT_LT(std::abs(a.conj().embed() - std::conj(a.embed())), 1e-9);
}

TEST(Cyclotomic, MixedOrdersLift) {
  const auto i = CyclotomicNumber::root(4, 1);
  const auto w = CyclotomicNumber::root(3, 1);
  const auto p = i * w;
  EXPECT_EQ(p.order() % 12, 0u);
  EXPECT_LT(std::abs(p.embed() - std::polar(1.0, std::numbers::pi / 2 + 2 * std::numbers::pi / 3)), 1e-12);
  EXPECT_EQ(w.lift(12), CyclotomicNumber::root(12, 4));
}

TEST(Cyclotomic, DivisionByZeroThrows) {
  const CyclotomicNumber z(Rational(0), 7);
  EXPECT_THROW(z.inverse(), DivisionByZero);
}

TEST(Cyclotomic, RootOrder) {
  for (unsigned n : {1u, 2u, 3u, 4u, 8u, 10u, 18u})
    for (long m = 1; m <= static_cast<long>(n); ++m) {
      const auto r = root_order(CyclotomicNumber::root(n, m));
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r, n / std::gcd(static_cast<long>(n), m));
    }
  EXPECT_FALSE(root_order(CyclotomicNumber(2)).has_value());
  EXPECT_FALSE(root_order(CyclotomicNumber(1) + CyclotomicNumber::root(8, 1)).has_value());
  // -zeta_8^3 = zeta_8^7 has order 8.
  EXPECT_EQ(*root_order(-CyclotomicNumber::root(8, 3)), 8u);
}

TEST(Cyclotomic, PowMatchesRepeatedProduct) {
  const auto q = CyclotomicNumber::root(7, 2) + CyclotomicNumber(1);
  CyclotomicNumber acc(1);
  for (int e = 0; e < 9; ++e) acc = acc * q;
  EXPECT_EQ(q.pow(9), acc);
  EXPECT_EQ(q.pow(-3) * q.pow(3), CyclotomicNumber(1));
}
