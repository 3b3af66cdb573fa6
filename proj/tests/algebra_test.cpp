#include "ladder/algebra.hpp"

#include <gtest/gtest.h>

#include "ladder/random.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace ladder {
namespace {

using testing::brute_force_normal_order;
using testing::term;
using testing::to_polynomial;

TEST(MultiplyMonomialsTest, WorkedExamples) {
  EXPECT_EQ(multiply_monomials({2, 1}, {2, 2}), term(4, 3) + term(3, 2, 2));
  EXPECT_EQ(multiply_monomials({2, 2}, {2, 1}), term(4, 3) + term(3, 2, 4) + term(2, 1, 2));
}

TEST(MultiplyMonomialsTest, CanonicalCommutationRelation) {
  EXPECT_EQ(multiply_monomials({0, 1}, {1, 0}), term(1, 1) + term(0, 0));
}

TEST(MultiplyMonomialsTest, UnitLaws) {
  for (std::uint32_t r = 0; r <= 5; ++r) {
    for (std::uint32_t s = 0; s <= 5; ++s) {
      EXPECT_EQ(multiply_monomials({0, 0}, {r, s}), term(r, s));
      EXPECT_EQ(multiply_monomials({r, s}, {0, 0}), term(r, s));
    }
  }
}

TEST(MultiplyMonomialsTest, ShapeOfResult) {
  for (std::uint32_t r = 0; r <= 4; ++r) {
    for (std::uint32_t s = 0; s <= 6; ++s) {
      for (std::uint32_t k = 0; k <= 6; ++k) {
        for (std::uint32_t l = 0; l <= 4; ++l) {
          const auto p = multiply_monomials({r, s}, {k, l});
          EXPECT_EQ(p.size(), std::min(k, s) + 1U);
          EXPECT_EQ(p.coefficient({r + k, s + l}), Coefficient(1));
          for (const auto& [m, c] : p) EXPECT_TRUE(c.is_positive_integer());
        }
      }
    }
  }
}

TEST(MultiplyMonomialsTest, LargeIndicesStayExact) {
  // Top join coefficient is min(k,s)! C(s,i)C(k,i) with i = k = s = 30, i.e. 30!.
  const auto p = multiply_monomials({0, 30}, {30, 0});
  EXPECT_EQ(to_string(p.coefficient({0, 0})), "265252859812191058636308480000000");
}

TEST(MultiplyMonomialsTest, MatchesBruteForceRewriting) {
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3; ++s) {
      for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
          const std::string word =
              std::string(r, 'A') + std::string(s, 'a') + std::string(k, 'A') + std::string(l, 'a');
          EXPECT_EQ(multiply_monomials({std::uint32_t(r), std::uint32_t(s)},
                                       {std::uint32_t(k), std::uint32_t(l)}),
                    to_polynomial(brute_force_normal_order(word)))
              << word;
        }
      }
    }
  }
}

TEST(MultiplyTest, Commutator) {
  const NormalPolynomial a(kAnnihilator);
  const NormalPolynomial ad(kCreator);
  EXPECT_EQ(a * ad - ad * a, NormalPolynomial::identity());
}

TEST(MultiplyTest, ZeroAnnihilates) {
  const NormalPolynomial p = term(2, 1, 3) + term(0, 0, 1);
  EXPECT_TRUE(multiply(p, NormalPolynomial()).is_zero());
  EXPECT_TRUE(multiply(NormalPolynomial(), p).is_zero());
}

TEST(MultiplyTest, NumberOperatorSquared) {
  // Frozen from the brute-force oracle on "A a A a".
  const auto expected = to_polynomial(brute_force_normal_order("AaAa"));
  ASSERT_EQ(expected, term(2, 2) + term(1, 1));
  EXPECT_EQ(term(1, 1) * term(1, 1), expected);
}

TEST(MultiplyTest, AssociativeOnMonomials) {
  std::vector<NormalPolynomial> basis;
  for (std::uint32_t r = 0; r <= 4; ++r) {
    for (std::uint32_t s = 0; s <= 4; ++s) basis.push_back(term(r, s));
  }
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const NormalPolynomial xy = x * y;
      for (const auto& z : basis) ASSERT_EQ(xy * z, x * (y * z));
    }
  }
}

TEST(MultiplyTest, AssociativeAndDistributiveOnRandomPolynomials) {
  Rng rng(3);
  for (int n = 0; n < 60; ++n) {
    const auto x = random_polynomial(rng, 3, 3);
    const auto y = random_polynomial(rng, 3, 3);
    const auto z = random_polynomial(rng, 3, 3);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * NormalPolynomial::identity(), x);
  }
}

TEST(PowerTest, MatchesRepeatedMultiplication) {
  const NormalPolynomial p = term(0, 1) + term(1, 0, 2);
  NormalPolynomial acc = NormalPolynomial::identity();
  for (std::uint32_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(power(p, n), acc);
    acc = acc * p;
  }
}

TEST(CommutatorPowersTest, Examples) {
  EXPECT_EQ(commutator_powers(1, 1), NormalPolynomial::identity());
  EXPECT_TRUE(commutator_powers(0, 3).is_zero());
  EXPECT_TRUE(commutator_powers(3, 0).is_zero());
  // Frozen from brute-force rewriting of "aaAA" minus G(2,2).
  const auto oracle = to_polynomial(brute_force_normal_order("aaAA")) - term(2, 2);
  ASSERT_EQ(oracle, term(1, 1, 4) + term(0, 0, 2));
  EXPECT_EQ(commutator_powers(2, 2), oracle);
}

TEST(CommutatorPowersTest, ConsistentWithWordNormalOrdering) {
  for (std::uint32_t s = 0; s <= 5; ++s) {
    for (std::uint32_t k = 0; k <= 5; ++k) {
      EXPECT_EQ(commutator_powers(s, k),
                normal_order_word(annihilators_then_creators(s, k)) - term(k, s));
    }
  }
}

TEST(NormalOrderTest, Examples) {
  EXPECT_EQ(normal_order_word(Word::parse("a ad")), term(1, 1) + term(0, 0));
  EXPECT_EQ(normal_order_word(Word::parse("ad ad a a")), term(2, 2));
  EXPECT_EQ(normal_order_word(Word::parse("(a† a)(a† a)(a† a)")),
            term(3, 3) + term(2, 2, 3) + term(1, 1));
  EXPECT_EQ(normal_order_word(Word{}), NormalPolynomial::identity());
}

TEST(NormalOrderTest, CanonicalCommutation) {
  EXPECT_EQ(normal_order_word(Word::parse("a ad")) - normal_order_word(Word::parse("ad a")),
            NormalPolynomial::identity());
}

TEST(NormalOrderTest, StrategiesAgreeOnRandomWords) {
  Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    const Word w = random_word(rng, 8);
    ASSERT_EQ(normal_order_rewrite(w), normal_order_fold(w)) << to_string(w);
  }
}

TEST(NormalOrderTest, RewriteMatchesIndependentRewriter) {
  Rng rng(5);
  for (int n = 0; n < 100; ++n) {
    const Word w = random_word(rng, 10);
    std::string text;
    for (Letter l : w.letters) text += l == Letter::creator ? 'A' : 'a';
    ASSERT_EQ(normal_order_rewrite(w), to_polynomial(brute_force_normal_order(text))) << text;
  }
}

TEST(NormalOrderTest, StirlingNumbers) {
  const auto stirling = testing::stirling2_table(8);
  for (std::uint32_t n = 1; n <= 8; ++n) {
    NormalPolynomial expected;
    for (std::uint32_t k = 1; k <= n; ++k) expected.add_term({k, k}, Coefficient(stirling[n][k]));
    EXPECT_EQ(normal_order_word(repeat(Word::parse("ad a"), n)), expected) << "n=" << n;
  }
}

TEST(WordTest, ParseAndPrint) {
  EXPECT_EQ(to_string(Word::parse("a  a\xE2\x80\xA0 (ad)")), "a ad ad");
  EXPECT_TRUE(Word::parse("ad ad a").is_normally_ordered());
  EXPECT_FALSE(Word::parse("a ad").is_normally_ordered());
  EXPECT_THROW(Word::parse("a b"), std::invalid_argument);
}

}  // namespace
}  // namespace ladder
