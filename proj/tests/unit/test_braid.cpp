#include <gtest/gtest.h>

#include <random>

#include "b3cert/braid.hpp"
#include "b3cert/free_group.hpp"

using namespace b3cert;

namespace {

BraidWord random_braid(std::mt19937& rng, int len) {
  BraidWord w(3);
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % 2);
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

// Oracle for equality in B_3: the Artin action on F_3 is faithful.
bool artin_equal(const BraidWord& u, const BraidWord& v) { return artin_action(u) == artin_action(v); }

}  // namespace

TEST(Braid, ParseForms) {
  const std::vector<int> expect{1, -2, 1, 1, 1};
  EXPECT_EQ(BraidWord::parse("1 -2 1 1 1").letters, expect);
  EXPECT_EQ(BraidWord::parse("g1 g2^-1 g1^3").letters, expect);
  EXPECT_EQ(BraidWord::parse("s_1, g2^(-1), g1^(3)").letters, expect);
  EXPECT_TRUE(BraidWord::parse("e").empty());
  EXPECT_TRUE(BraidWord::parse("").empty());
}

TEST(Braid, ParseErrors) {
  EXPECT_THROW(BraidWord::parse("g3"), ParseError);
  EXPECT_THROW(BraidWord::parse("g1 x"), ParseError);
  EXPECT_THROW(BraidWord::parse("g1^(2"), ParseError);
  EXPECT_THROW(BraidWord::parse("0"), ParseError);
  EXPECT_THROW(BraidWord::parse("g"), ParseError);
  EXPECT_NO_THROW(BraidWord::parse("g3", 4));
}

TEST(Braid, InversePowAndReduction) {
  const BraidWord w = BraidWord::parse("1 2 -1");
  EXPECT_EQ((w * w.inverse()).reduced(), BraidWord(3));
  EXPECT_EQ(w.pow(3).letters.size(), 9u);
  EXPECT_EQ(w.pow(-1), w.inverse());
  EXPECT_EQ(w.exponent_sum(), 1);
  EXPECT_EQ(BraidWord::parse("1 1 -1 2").reduced(), BraidWord::parse("1 2"));
  EXPECT_EQ(BraidWord::parse("2 1 -1 -2").reduced(), BraidWord(3));
}

TEST(Braid, Permutations) {
  EXPECT_EQ(permutation_of(BraidWord::gen(1)).to_string(), "(1 2)");
  EXPECT_TRUE(is_pure(BraidWord::A()));
  EXPECT_TRUE(is_pure(BraidWord::center()));
  EXPECT_FALSE(is_pure(BraidWord::parse("1 2")));
  // Left to right: strand 1 -> 2 -> 3.
  EXPECT_EQ(permutation_of(BraidWord::parse("1 2")).to_string(), "(1 3 2)");
  EXPECT_EQ(permutation_of(BraidWord::parse("2 1")).to_string(), "(1 2 3)");
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i; j <= n - 1; ++j) EXPECT_TRUE(is_pure(BraidWord::pure_generator(i, j, n)));
}

TEST(Braid, EqualityAgreesWithArtinAction) {
  EXPECT_TRUE(word_equal_b3(BraidWord::parse("1 2 1"), BraidWord::parse("2 1 2")));
  EXPECT_FALSE(word_equal_b3(BraidWord::parse("1 2"), BraidWord::parse("2 1")));
  // The center commutes with everything.
  EXPECT_TRUE(word_equal_b3(BraidWord::center() * BraidWord::gen(1), BraidWord::gen(1) * BraidWord::center()));
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    const BraidWord u = random_braid(rng, 8);
    // Perturb by a braid relation sometimes so both answers occur.
    BraidWord v = t % 2 ? u * BraidWord::parse("1 2 1 -2 -1 -2") : random_braid(rng, 8);
    EXPECT_EQ(word_equal_b3(u, v), artin_equal(u, v));
  }
}

TEST(Braid, Pb3RewriteRecomposes) {
  std::mt19937 rng(23);
  int done = 0;
  while (done < 40) {
    const BraidWord w = random_braid(rng, 2 + static_cast<int>(rng() % 14));
    if (!is_pure(w)) continue;
    const Pb3Decomposition d = pb3_rewrite(w);
    EXPECT_TRUE(artin_equal(d.recompose(), w)) << w.to_string();
    EXPECT_EQ(d.f, free_reduce(d.f));
    ++done;
  }
  const Pb3Decomposition z = pb3_rewrite(BraidWord::center().pow(2));
  EXPECT_TRUE(z.f.empty());
  EXPECT_EQ(z.m, 2);
  EXPECT_THROW(pb3_rewrite(BraidWord::gen(1)), std::invalid_argument);
}
