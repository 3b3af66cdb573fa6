#include <cctype>
#include <limits>
#include <optional>

#include "ladder/expr.hpp"

namespace ladder {

namespace {

const char* kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::lexical:
      return "lexical error";
    case ParseError::Kind::syntax:
      return "syntax error";
    case ParseError::Kind::zero_denominator:
      return "zero denominator";
  }
  return "error";
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t position, std::string detail)
    : std::runtime_error(std::string(kind_name(kind)) + " at position " +
                         std::to_string(position) + ": " + detail),
      kind_(kind),
      position_(position),
      detail_(std::move(detail)) {}

namespace {

enum class Tok { number, a, ad, i, lparen, rparen, plus, minus, caret, slash, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

constexpr std::string_view kDagger = "\xE2\x80\xA0";  // U+2020
constexpr int kMaxDepth = 200;

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const auto ch = static_cast<unsigned char>(in[i]);
    if (std::isspace(ch) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch) != 0) {
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i])) != 0) ++i;
      out.push_back({Tok::number, start, in.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(ch) != 0) {
      while (i < in.size() && std::isalpha(static_cast<unsigned char>(in[i])) != 0) ++i;
      const std::string_view word = in.substr(start, i - start);
      if (word == "a") {
        if (in.substr(i, kDagger.size()) == kDagger) {
          i += kDagger.size();
          out.push_back({Tok::ad, start, in.substr(start, i - start)});
        } else {
          out.push_back({Tok::a, start, word});
        }
      } else if (word == "ad") {
        out.push_back({Tok::ad, start, word});
      } else if (word == "i") {
        out.push_back({Tok::i, start, word});
      } else {
        throw ParseError(ParseError::Kind::lexical, start,
                         "unknown token '" + std::string(word) + "'");
      }
      continue;
    }
    Tok kind{};
    switch (ch) {
      case '(':
        kind = Tok::lparen;
        break;
      case ')':
        kind = Tok::rparen;
        break;
      case '+':
        kind = Tok::plus;
        break;
      case '-':
        kind = Tok::minus;
        break;
      case '^':
        kind = Tok::caret;
        break;
      case '/':
        kind = Tok::slash;
        break;
      default: {
        std::string shown = std::isprint(ch) != 0 ? std::string(1, static_cast<char>(ch))
                                                  : "\\x" + std::to_string(ch);
        throw ParseError(ParseError::Kind::lexical, start, "unknown character '" + shown + "'");
      }
    }
    ++i;
    out.push_back({kind, start, in.substr(start, 1)});
  }
  out.push_back({Tok::end, in.size(), {}});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::number:
      return "number '" + std::string(t.text) + "'";
    default:
      return "'" + std::string(t.text) + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end) fail("expected '+', '-' or end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(ParseError::Kind::syntax, peek().pos,
                     expected + ", found " + describe(peek()));
  }

  // expr := term (('+' | '-') term)*
  ExprPtr expr() {
    if (++depth_ > kMaxDepth) fail("nesting too deep");
    std::vector<ExprPtr> terms;
    terms.push_back(term(false));
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool negate = next().kind == Tok::minus;
      terms.push_back(term(negate));
    }
    --depth_;
    return terms.size() == 1 ? terms.front() : make_sum(std::move(terms));
  }

  static bool starts_factor(const Token& t) {
    return t.kind == Tok::a || t.kind == Tok::ad || t.kind == Tok::lparen ||
           (t.kind == Tok::number && t.text == "1");
  }

  // term := '-'* coeff? factor+ | '-'* coeff
  //
  // A '-' directly before the coefficient is the sign of its leading
  // integer; any further unary '-' negates the whole term.
  ExprPtr term(bool negate) {
    std::size_t unary_minus = 0;
    while (peek().kind == Tok::minus) {
      next();
      ++unary_minus;
    }
    const bool signed_number = unary_minus > 0 && peek().kind == Tok::number;
    if (signed_number) --unary_minus;
    if (unary_minus % 2 == 1) negate = !negate;

    std::optional<Coefficient> coeff;
    bool plain_one = false;
    if (signed_number ||
        (peek().kind == Tok::number && !(peek().text == "1" && peek(1).kind == Tok::caret))) {
      plain_one = !signed_number && peek().text == "1" && peek(1).kind != Tok::slash &&
                  peek(1).kind != Tok::i && !is_imaginary_tail(1);
      coeff = coefficient(signed_number);
    }
    std::vector<ExprPtr> factors;
    while (starts_factor(peek())) factors.push_back(factor());

    ExprPtr body;
    if (factors.empty()) {
      if (!coeff) fail("expected a term");
      body = make_identity();
    } else {
      body = factors.size() == 1 ? factors.front() : make_product(std::move(factors));
    }
    if (plain_one) coeff.reset();
    if (coeff) return make_scaled(negate ? -*coeff : *coeff, body);
    if (negate) return make_scaled(Coefficient(-1), body);
    return body;
  }

  // True when tokens from `ahead` on read ('+'|'-') rational 'i'.
  bool is_imaginary_tail(std::size_t ahead) const {
    const Tok sign = peek(ahead).kind;
    if (sign != Tok::plus && sign != Tok::minus) return false;
    if (peek(ahead + 1).kind != Tok::number) return false;
    if (peek(ahead + 2).kind == Tok::i) return true;
    return peek(ahead + 2).kind == Tok::slash && peek(ahead + 3).kind == Tok::number &&
           peek(ahead + 4).kind == Tok::i;
  }

  // rational := int ('/' nat)?
  Rational rational(bool negative = false) {
    if (peek().kind != Tok::number) fail("expected a number");
    const Token& num = next();
    Rational q{mpz_class(std::string(num.text), 10)};
    if (negative) q = -q;
    if (peek().kind == Tok::slash) {
      next();
      const Token& den = peek();
      if (den.kind != Tok::number) fail("expected a denominator");
      next();
      mpz_class d(std::string(den.text), 10);
      if (d == 0) throw ParseError(ParseError::Kind::zero_denominator, den.pos, "denominator is zero");
      q = Rational(q.get_num(), d);
      q.canonicalize();
    }
    return q;
  }

  // coeff := rational (('+'|'-') rational 'i')? | rational 'i'
  Coefficient coefficient(bool negative_real) {
    Rational first = rational(negative_real);
    if (peek().kind == Tok::i) {
      next();
      return {Rational(0), first};
    }
    if (is_imaginary_tail(0)) {
      const bool negative = next().kind == Tok::minus;
      Rational im = rational();
      next();  // 'i'
      return {first, negative ? Rational(-im) : im};
    }
    return Coefficient(first);
  }

  // factor := atom ('^' nat)?
  ExprPtr factor() {
    ExprPtr base = atom();
    if (peek().kind != Tok::caret) return base;
    next();
    const Token& exp = peek();
    if (exp.kind != Tok::number) fail("expected natural number");
    mpz_class value(std::string(exp.text), 10);
    if (value > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
    next();
    return make_power(std::move(base), static_cast<std::uint32_t>(value.get_ui()));
  }

  // atom := 'a' | 'ad' | '1' | '(' expr ')'
  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::a:
        next();
        return make_letter(Letter::annihilator);
      case Tok::ad:
        next();
        return make_letter(Letter::creator);
      case Tok::number:
        if (t.text == "1") {
          next();
          return make_identity();
        }
        break;
      case Tok::lparen: {
        next();
        ExprPtr inner = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        next();
        return inner;
      }
      default:
        break;
    }
    fail("expected 'a', 'ad', '1' or '('");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(tokenize(input)).parse_all(); }

}  // namespace ladder
