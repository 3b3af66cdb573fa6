#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ladder/coefficient.hpp"
#include "ladder/polynomial.hpp"
#include "ladder/word.hpp"

namespace ladder {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct LetterNode {
  Letter letter;
};
struct PowerNode {
  ExprPtr base;
  std::uint32_t exponent;
};
struct ProductNode {
  std::vector<ExprPtr> factors;
};
struct SumNode {
  std::vector<ExprPtr> terms;
};
struct ScaledNode {
  Coefficient coeff;
  ExprPtr body;
};
struct IdentityNode {};

/// Immutable syntax tree of an operator expression. Build through the
/// make_* factories, which enforce that Power(x, 0) is Identity and that
/// Product and Sum lists are non-empty.
struct ExprNode {
  std::variant<LetterNode, PowerNode, ProductNode, SumNode, ScaledNode, IdentityNode> value;
};

ExprPtr make_letter(Letter l);
ExprPtr make_identity();
ExprPtr make_power(ExprPtr base, std::uint32_t exponent);
ExprPtr make_product(std::vector<ExprPtr> factors);
ExprPtr make_sum(std::vector<ExprPtr> terms);
ExprPtr make_scaled(Coefficient coeff, ExprPtr body);

/// S-expression dump used by golden parse-tree tests, e.g.
/// "(+ (* (^ ad 2) (^ a 2)) (scale 3 (* ad a)))".
std::string to_sexpr(const ExprNode& e);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { lexical, syntax, zero_denominator };

  ParseError(Kind kind, std::size_t position, std::string detail);

  Kind kind() const { return kind_; }
  /// Byte offset into the input, 0-based. End of input is input.size().
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string detail_;
};

/// Parses the operator expression grammar documented in GRAMMAR.md.
/// Never crashes on arbitrary input; every failure is a ParseError.
ExprPtr parse(std::string_view input);

/// Normal form of an expression: letters map to the generators, products to
/// multiply, sums to add, powers to repeated multiplication, scalars to scale.
NormalPolynomial evaluate(const ExprNode& e);

/// Canonical text for a polynomial, in canonical term order, e.g.
/// "ad^2 a^2 + ad a". Unit coefficients are omitted and the zero polynomial
/// prints as "0". evaluate(*parse(format(p))) == p for every p.
std::string format(const NormalPolynomial& p);

}  // namespace ladder
