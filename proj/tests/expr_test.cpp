#include "ladder/expr.hpp"

#include <gtest/gtest.h>

#include "ladder/algebra.hpp"
#include "ladder/random.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace ladder {
namespace {

using testing::term;

std::string tree(std::string_view input) { return to_sexpr(*parse(input)); }

NormalPolynomial eval(std::string_view input) { return evaluate(*parse(input)); }

// Golden parse trees; the same table appears in GRAMMAR.md.
TEST(ParseTest, GoldenTrees) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"a ad", "(* a ad)"},
      {"ad^2 a^2 + 3 ad a", "(+ (* (^ ad 2) (^ a 2)) (scale 3 (* ad a)))"},
      {"1", "1"},
      {"a", "a"},
      {"a\xE2\x80\xA0", "ad"},
      {"(ad a)^3", "(^ (* ad a) 3)"},
      {"ad^0", "1"},
      {"-ad a", "(scale -1 (* ad a))"},
      {"ad - 2 a", "(+ ad (scale -2 a))"},
      {"1/2 ad", "(scale 1/2 ad)"},
      {"1 + 2i ad", "(scale 1+2i ad)"},
      {"3/4i a", "(scale 3/4i a)"},
      {"(1-2i) ad a", "(* (scale 1-2i 1) ad a)"},
      {"2", "(scale 2 1)"},
      {"1 ad", "ad"},
      {"a 1 ad", "(* a 1 ad)"},
      {"  a\t( ad )  ", "(* a ad)"},
      {"-1+2i a", "(scale -1+2i a)"},
      {"a - 1+2i ad", "(+ a (scale -1-2i ad))"},
      {"(-1/2+3i) a", "(* (scale -1/2+3i 1) a)"},
      {"- -ad", "ad"},
  };
  for (const auto& [input, expected] : cases) EXPECT_EQ(tree(input), expected) << input;
}

void expect_error(std::string_view input, ParseError::Kind kind, std::size_t pos,
                  std::string_view fragment) {
  try {
    parse(input);
    ADD_FAILURE() << "no error for '" << input << "'";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), kind) << input;
    EXPECT_EQ(e.position(), pos) << input;
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ParseTest, Errors) {
  expect_error("a ^", ParseError::Kind::syntax, 3, "expected natural number");
  expect_error("a b", ParseError::Kind::lexical, 2, "unknown token 'b'");
  expect_error("a % ad", ParseError::Kind::lexical, 2, "unknown character");
  expect_error("1/0 a", ParseError::Kind::zero_denominator, 2, "denominator");
  expect_error("(a ad", ParseError::Kind::syntax, 5, "expected ')'");
  expect_error("", ParseError::Kind::syntax, 0, "expected a term");
  expect_error("a +", ParseError::Kind::syntax, 3, "expected a term");
  expect_error("ad 2", ParseError::Kind::syntax, 3, "expected '+', '-' or end of input");
  expect_error("a^99999999999", ParseError::Kind::syntax, 2, "exponent too large");
  expect_error("ad)", ParseError::Kind::syntax, 2, "found ')'");
  expect_error(std::string(500, '(') + "a" + std::string(500, ')'), ParseError::Kind::syntax,
               200, "nesting too deep");
}

TEST(ParseTest, FactoriesEnforceInvariants) {
  EXPECT_EQ(to_sexpr(*make_power(make_letter(Letter::annihilator), 0)), "1");
  EXPECT_THROW(make_product({}), std::invalid_argument);
  EXPECT_THROW(make_sum({}), std::invalid_argument);
}

TEST(EvaluateTest, Examples) {
  EXPECT_EQ(eval("a ad"), term(1, 1) + term(0, 0));
  EXPECT_EQ(eval("1"), NormalPolynomial::identity());
  EXPECT_EQ(eval("ad^2 a^2"), term(2, 2));
  EXPECT_TRUE(eval("0").is_zero());
  EXPECT_TRUE(eval("a ad - ad a - 1").is_zero());
}

TEST(EvaluateTest, StirlingOracle) {
  const auto stirling = testing::stirling2_table(6);
  for (std::uint32_t n = 1; n <= 6; ++n) {
    NormalPolynomial expected;
    for (std::uint32_t k = 1; k <= n; ++k) expected.add_term({k, k}, Coefficient(stirling[n][k]));
    EXPECT_EQ(eval("(ad a)^" + std::to_string(n)), expected);
  }
}

TEST(EvaluateTest, ComplexCoefficients) {
  const Coefficient c(parse_rational("1"), parse_rational("2"));
  EXPECT_EQ(eval("1 + 2i ad"), NormalPolynomial(kCreator, c));
  EXPECT_EQ(eval("(1+2i) ad"), NormalPolynomial(kCreator, c));
  EXPECT_EQ(eval("1i a (1i ad)"), scale(Coefficient(-1), term(1, 1) + term(0, 0)));
}

TEST(EvaluateTest, IsAHomomorphism) {
  Rng rng(19);
  for (int n = 0; n < 100; ++n) {
    const NormalPolynomial x = random_polynomial(rng, 3, 3);
    const NormalPolynomial y = random_polynomial(rng, 3, 3);
    const std::string fx = "(" + format(x) + ")";
    const std::string fy = "(" + format(y) + ")";
    ASSERT_EQ(eval(fx + " " + fy), multiply(x, y)) << fx << " " << fy;
    ASSERT_EQ(eval(fx + " + " + fy), add(x, y));
  }
}

TEST(FormatTest, Examples) {
  EXPECT_EQ(format(term(2, 2) + term(1, 1)), "ad^2 a^2 + ad a");
  EXPECT_EQ(format(NormalPolynomial()), "0");
  EXPECT_EQ(format(term(1, 1) + term(0, 0)), "ad a + 1");
  EXPECT_EQ(format(term(0, 3, -1) + term(0, 0, -2)), "-a^3 - 2");
  EXPECT_EQ(format(NormalPolynomial({2, 1}, Coefficient(parse_rational("-3/4")))), "-3/4 ad^2 a");
  EXPECT_EQ(format(NormalPolynomial({1, 0}, Coefficient(Rational(0), Rational(-1)))), "-1i ad");
  EXPECT_EQ(format(NormalPolynomial({0, 0}, Coefficient(Rational(2), Rational(-1)))), "(2-1i)");
}

TEST(FormatTest, RoundTripOnRandomPolynomials) {
  Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    const NormalPolynomial p = random_polynomial(rng, 6, 4);
    ASSERT_EQ(eval(format(p)), p) << format(p);
  }
}

TEST(ParseTest, FuzzNeverCrashes) {
  Rng rng(1234);
  const std::string alphabet = "aadd^()+-/i1234567890 \t";
  int accepted = 0;
  for (int n = 0; n < 10000; ++n) {
    std::string input;
    const auto len = rng.uniform(0, 24);
    for (std::uint64_t i = 0; i < len; ++i) {
      // Half the strings are raw bytes, half are drawn from the token alphabet.
      input.push_back(n % 2 == 0 ? static_cast<char>(rng.uniform(0, 255))
                                 : alphabet[rng.uniform(0, alphabet.size() - 1)]);
    }
    try {
      const ExprPtr e = parse(input);
      ASSERT_NE(e, nullptr);
      ++accepted;
    } catch (const ParseError& e) {
      ASSERT_LE(e.position(), input.size());
    }
  }
  EXPECT_GT(accepted, 0);
}

}  // namespace
}  // namespace ladder
