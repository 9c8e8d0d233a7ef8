#include <gtest/gtest.h>

#include <map>
#include <random>

#include "b3cert/free_group.hpp"

using namespace b3cert;

namespace {

FreeWord random_word(std::mt19937& rng, int rank, int len) {
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % rank);
    ls.push_back(rng() % 2 ? g : -g);
  }
  return FreeWord(rank, ls);
}

// Oracle: Magnus expansion by expanding the product of (1 + X) and (1 - X + X^2 - ...) term by term.
std::map<std::vector<int>, long> naive_magnus(const FreeWord& w, int degree) {
  std::map<std::vector<int>, long> acc{{{}, 1}};
  for (int x : w.letters) {
    const int g = std::abs(x);
    std::map<std::vector<int>, long> next;
    for (const auto& [mono, c] : acc) {
      next[mono] += c;
      std::vector<int> m = mono;
      for (int p = 1; static_cast<int>(mono.size()) + p <= degree; ++p) {
        m.push_back(g);
        const long sign = x > 0 ? (p == 1 ? 1 : 0) : (p % 2 ? -1 : 1);
        if (sign != 0) next[m] += sign * c;
        if (x > 0) break;
      }
    }
    acc.clear();
    for (auto& [m, c] : next)
      if (c != 0) acc.emplace(m, c);
  }
  return acc;
}

}  // namespace

TEST(FreeWord, ReductionAndParse) {
  EXPECT_EQ(free_reduce(FreeWord(2, {1, 2, -2, -1, 1})).letters, std::vector<int>{1});
  EXPECT_EQ(FreeWord::parse("a b^2 A").letters, (std::vector<int>{1, 2, 2, -1}));
  EXPECT_EQ(FreeWord::parse("x1 x3^-1").rank, 3);
  EXPECT_EQ(FreeWord::parse("x1 x2 X1 X2"), FreeWord::parse("x1 x2 x1^-1 x2^-1"));
  EXPECT_EQ(FreeWord::parse("X_2^3").letters, (std::vector<int>{-2, -2, -2}));
  EXPECT_EQ(FreeWord::parse("1 -2 3").letters, (std::vector<int>{1, -2, 3}));
  EXPECT_THROW(FreeWord::parse("a ?"), ParseError);
  EXPECT_THROW(FreeWord::parse("x0"), ParseError);
  EXPECT_EQ(commutator(FreeWord::generator(2, 1), FreeWord::generator(2, 1)).letters.size(), 0u);
}

TEST(FreeProduct, NormalForms) {
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  EXPECT_TRUE(FreeProductWord::from_word(a.pow(5), 5).is_trivial());
  EXPECT_TRUE(FreeProductWord::from_word(a.pow(3) * b.pow(4) * a.pow(-3), 4).is_trivial());
  const auto w = FreeProductWord::from_word(a * b * a, 4);
  EXPECT_TRUE((w * w.inverse()).is_trivial());
}

TEST(FreeProduct, SquierWitnessAlternates) {
  for (long k = 2; k <= 64; ++k) {
    const auto w = squier_witness(k);
    ASSERT_EQ(w.syllables.size(), static_cast<std::size_t>(2 * k));
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
      EXPECT_EQ(w.syllables[i].gen, static_cast<int>(i % 2));
      EXPECT_EQ(w.syllables[i].exp, 1);
    }
  }
  EXPECT_EQ(squier_witness(3).to_string(), "a b a b a b");
}

TEST(FreeGroup, CommutatorIdentity) {
  for (long D = 2; D <= 64; ++D) {
    const auto r = commutator_identity_check(D);
    EXPECT_TRUE(r.holds) << D;
    EXPECT_EQ(r.factors.size(), static_cast<std::size_t>(2 * D - 1));
    EXPECT_EQ(r.lhs, r.rhs);
  }
}

TEST(H1, RewriteIsAdditiveOnCommutatorSubgroup) {
  std::mt19937 rng(41);
  const long D = 5;
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  for (int t = 0; t < 30; ++t) {
    const FreeWord g = random_word(rng, 2, 6), h = random_word(rng, 2, 6);
    const FreeWord u = commutator(g, h), v = commutator(h, a * b);
    const auto ru = h1_rewrite(u, D), rv = h1_rewrite(v, D), ruv = h1_rewrite(u * v, D);
    for (std::size_t i = 0; i < ru.size(); ++i) EXPECT_EQ(ruv[i], ru[i] + rv[i]);
  }
  EXPECT_THROW(h1_rewrite(a, D), std::invalid_argument);
  // a^D is a relator: it rewrites to zero at every coset.
  for (long x = 0; x < D; ++x)
    for (long y = 0; y < D; ++y)
      for (const auto& c : h1_rewrite(a.pow(D), D, x, y)) EXPECT_EQ(c, 0);
}

TEST(H1, CommutatorClassesHaveInfiniteOrder) {
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  for (long D : {3L, 4L, 6L, 8L}) {
    const AbelianCert base = h1_cert(D, commutator(a, b));
    EXPECT_EQ(base.generator_count, static_cast<std::size_t>((D - 1) * (D - 1)));
    EXPECT_EQ(base.relation_rank, static_cast<std::size_t>(D - 1));
    for (long F = 1; F < D; ++F) {
      const AbelianCert c = h1_cert(D, commutator(a.pow(F), b.pow(F)));
      EXPECT_TRUE(c.infinite) << D << " " << F;
      EXPECT_FALSE(c.order.has_value());
    }
  }
}

TEST(H1, RelationClassIsTorsionFree) {
  // The base relation itself lies in the relation lattice: order 1.
  const AbelianCert c = h1_cert(4, h1_cert(4, FreeWord(2, {1, 2, -1, -2})).base_relation);
  EXPECT_FALSE(c.infinite);
  ASSERT_TRUE(c.order.has_value());
  EXPECT_EQ(*c.order, 1);
}

TEST(Magnus, MatchesNaiveExpansion) {
  std::mt19937 rng(43);
  for (int t = 0; t < 25; ++t) {
    const FreeWord w = random_word(rng, 3, 7);
    const MagnusSeries m = MagnusSeries::of_word(w, 4);
    const auto oracle = naive_magnus(w, 4);
    for (const auto& [mono, c] : oracle) EXPECT_EQ(m.coefficient(mono), c) << w.to_string();
    // Every stored coefficient appears in the oracle.
    std::size_t nonzero = 0;
    for (int d = 0; d <= 4; ++d)
      for (auto c : m.homogeneous(d)) nonzero += c != 0;
    EXPECT_EQ(nonzero, oracle.size());
  }
}

TEST(Magnus, MultiplicativeAndInverse) {
  std::mt19937 rng(47);
  const FreeWord u = random_word(rng, 2, 6), v = random_word(rng, 2, 6);
  const MagnusSeries a = MagnusSeries::of_word(u, 5), b = MagnusSeries::of_word(v, 5);
  const MagnusSeries ab = MagnusSeries::of_word(u * v, 5);
  const MagnusSeries prod = a * b;
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(prod.homogeneous(d), ab.homogeneous(d));
  EXPECT_FALSE(magnus_depth(u * u.inverse(), 6).has_value());
}

TEST(Magnus, DepthOfNestedCommutators) {
  const FreeWord x1 = FreeWord::generator(3, 1), x2 = FreeWord::generator(3, 2), x3 = FreeWord::generator(3, 3);
  EXPECT_EQ(magnus_depth(x1), 1);
  EXPECT_EQ(magnus_depth(commutator(x1, x2)), 2);
  EXPECT_EQ(magnus_depth(commutator(commutator(x1, x2), x3)), 3);
  EXPECT_EQ(magnus_depth(commutator(commutator(x1, x2), commutator(x2, x3))), 4);
  EXPECT_FALSE(magnus_depth(commutator(commutator(x1, x2), commutator(x2, x3)), 3).has_value());
}

TEST(Zeta, DoublesDepth) {
  const FreeWord x1 = FreeWord::generator(3, 1), x2 = FreeWord::generator(3, 2);
  const FreeWord c = commutator(x1, x2);
  EXPECT_EQ(zeta_embed(x1).rank, 6);
  EXPECT_EQ(magnus_depth(zeta_embed(x1)), 2);
  EXPECT_EQ(magnus_depth(zeta_embed(c)), 4);
  EXPECT_EQ(magnus_depth(zeta_embed(commutator(c, x1)), 8), 6);
}

TEST(Artin, FixesBoundaryWordAndRespectsRelations) {
  std::mt19937 rng(53);
  for (int n = 3; n <= 5; ++n) {
    const FreeWord boundary = [&] {
      std::vector<int> ls;
      for (int i = 1; i <= n; ++i) ls.push_back(i);
      return FreeWord(n, ls);
    }();
    for (int t = 0; t < 10; ++t) {
      BraidWord b(n);
      for (int i = 0; i < 8; ++i) {
        const int g = 1 + static_cast<int>(rng() % (n - 1));
        b.letters.push_back(rng() % 2 ? g : -g);
      }
      EXPECT_EQ(b3cert::apply(artin_action(b), boundary), boundary);
      const auto id = artin_action(b * b.inverse());
      for (int i = 1; i <= n; ++i) EXPECT_EQ(id[i - 1], FreeWord::generator(n, i));
    }
    EXPECT_EQ(artin_action(BraidWord(n, {1, 2, 1})), artin_action(BraidWord(n, {2, 1, 2})));
  }
}

TEST(Artin, LongitudesConjugate) {
  const BraidWord d11 = BraidWord::A() * BraidWord::B() * BraidWord::A().inverse() * BraidWord::B().inverse();
  const auto phi = artin_action(d11);
  const auto ls = longitudes(d11);
  ASSERT_EQ(ls.size(), 3u);
  for (int i = 1; i <= 3; ++i) {
    const FreeWord& l = ls[i - 1];
    EXPECT_EQ(l.exponent_sum(i), 0);
    EXPECT_EQ(l.inverse() * FreeWord::generator(3, i) * l, phi[i - 1]);
    const auto d = magnus_depth(l, 8);
    EXPECT_TRUE(!d || *d >= 2);
  }
  EXPECT_THROW(longitudes(BraidWord::gen(1)), std::invalid_argument);
}
