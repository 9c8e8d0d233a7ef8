#include <gtest/gtest.h>

#include <complex>

#include "b3cert/laurent.hpp"

using namespace b3cert;

TEST(Laurent, ArithmeticAndZeroTerms) {
  const LaurentPoly q = LaurentPoly::q(), qi = LaurentPoly::q(-1);
  EXPECT_EQ(q * qi, LaurentPoly(1));
  EXPECT_TRUE((q - q).is_zero());
  const LaurentPoly p = (LaurentPoly(1) + q) * (LaurentPoly(1) - q);
  EXPECT_EQ(p, LaurentPoly(1) - q * q);
  EXPECT_EQ(p.min_degree(), 0);
  EXPECT_EQ(p.max_degree(), 2);
}

TEST(Laurent, UnitInverse) {
  const LaurentPoly u = -LaurentPoly::q(-3);
  EXPECT_EQ(u * u.unit_inverse(), LaurentPoly(1));
  EXPECT_THROW((LaurentPoly(1) + LaurentPoly::q()).unit_inverse(), std::domain_error);
}

TEST(Laurent, EvaluateMatchesEmbedding) {
  // 3q^-2 - q + 2q^5 at zeta_9^2, compared with direct complex evaluation.
  const LaurentPoly p = LaurentPoly(Integer(3), -2) - LaurentPoly::q(1) + LaurentPoly(Integer(2), 5);
  const auto t = CyclotomicNumber::root(9, 2);
  const std::complex<double> z = t.embed();
  const std::complex<double> expect = 3.0 / (z * z) - z + 2.0 * std::pow(z, 5);
  EXPECT_LT(std::abs(p.evaluate(t).embed() - expect), 1e-10);
  EXPECT_EQ(LaurentPoly(7).evaluate(t), CyclotomicNumber(7));
}
