#include <gtest/gtest.h>

#include <random>

#include "b3cert/burau.hpp"
#include "b3cert/triangle_groups.hpp"

using namespace b3cert;

namespace {
FreeWord random_ab(std::mt19937& rng, int len) {
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % 2);
    ls.push_back(rng() % 2 ? g : -g);
  }
  return FreeWord(2, ls);
}
}  // namespace

TEST(Membership, GeneratorsAndSimpleWordsAreNotMembers) {
  for (unsigned k : {4u, 5u, 6u})
    for (const char* s : {"1", "2", "1 2", "2 1", "1 2 1"}) {
      const auto c = member_delta_kkk(eval_word_minus_q(BraidWord::parse(s), 2 * k), k);
      EXPECT_EQ(c.verdict, Verdict::non_member) << k << " " << s;
      EXPECT_NE(c.reason, NonMemberReason::none);
    }
}

TEST(Membership, KnownReasonsAtZeta8) {
  auto reason = [](const char* s) { return member_delta_kkk(eval_word_minus_q(BraidWord::parse(s), 8), 4).reason; };
  EXPECT_EQ(reason("1"), NonMemberReason::color_flip);
  EXPECT_EQ(reason("2"), NonMemberReason::color_flip);
  EXPECT_EQ(reason("1 2 1"), NonMemberReason::color_flip);
  EXPECT_EQ(reason("1 2"), NonMemberReason::overlap);
  EXPECT_EQ(reason("2 1"), NonMemberReason::overlap);
}

TEST(Membership, RandomWordsRoundTrip) {
  std::mt19937 rng(101);
  for (unsigned k : {4u, 7u})
    for (long m : {1L, 3L})
      for (int t = 0; t < 15; ++t) {
        const FreeWord w = random_ab(rng, static_cast<int>(rng() % 25));
        const ExactMatrix M = eval_word_minus_q(ab_to_braid(w), 2 * k, m);
        const auto c = member_delta_kkk(M, k, m);
        ASSERT_EQ(c.verdict, Verdict::member) << w.to_string();
        EXPECT_TRUE(c.exact_check);
        EXPECT_TRUE(projective_equal(eval_word_minus_q(ab_to_braid(c.word), 2 * k, m), M));
        EXPECT_EQ(c.trace.size() % 2, 0u);
      }
}

TEST(Membership, CenterIsAMember) {
  // (g1 g2)^3 is a scalar, hence projectively trivial.
  const auto c = member_delta_kkk(eval_word_minus_q(BraidWord::center(), 10), 5);
  EXPECT_EQ(c.verdict, Verdict::member);
  EXPECT_TRUE(c.word.empty());
}

TEST(Membership, RejectsBadInput) {
  EXPECT_THROW(member_delta_kkk(eval_word_minus_q(BraidWord::gen(1), 6), 3), std::invalid_argument);
  EXPECT_THROW(member_delta_kkk(ExactMatrix{{CyclotomicNumber(2), CyclotomicNumber(0)}, {CyclotomicNumber(0), CyclotomicNumber(1)}}, 4),
               std::invalid_argument);
}
