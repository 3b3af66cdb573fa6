#include "ladder/expr.hpp"

#include "ladder/algebra.hpp"

namespace ladder {

ExprPtr make_letter(Letter l) { return std::make_shared<ExprNode>(ExprNode{LetterNode{l}}); }

ExprPtr make_identity() { return std::make_shared<ExprNode>(ExprNode{IdentityNode{}}); }

ExprPtr make_power(ExprPtr base, std::uint32_t exponent) {
  if (exponent == 0) return make_identity();
  return std::make_shared<ExprNode>(ExprNode{PowerNode{std::move(base), exponent}});
}

ExprPtr make_product(std::vector<ExprPtr> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  return std::make_shared<ExprNode>(ExprNode{ProductNode{std::move(factors)}});
}

ExprPtr make_sum(std::vector<ExprPtr> terms) {
  if (terms.empty()) throw std::invalid_argument("sum needs at least one term");
  return std::make_shared<ExprNode>(ExprNode{SumNode{std::move(terms)}});
}

ExprPtr make_scaled(Coefficient coeff, ExprPtr body) {
  return std::make_shared<ExprNode>(ExprNode{ScaledNode{std::move(coeff), std::move(body)}});
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string to_sexpr(const ExprNode& e) {
  return std::visit(
      Overloaded{
          [](const LetterNode& n) -> std::string {
            return n.letter == Letter::creator ? "ad" : "a";
          },
          [](const PowerNode& n) -> std::string {
            return "(^ " + to_sexpr(*n.base) + " " + std::to_string(n.exponent) + ")";
          },
          [](const ProductNode& n) -> std::string {
            std::string out = "(*";
            for (const auto& f : n.factors) out += " " + to_sexpr(*f);
            return out + ")";
          },
          [](const SumNode& n) -> std::string {
            std::string out = "(+";
            for (const auto& t : n.terms) out += " " + to_sexpr(*t);
            return out + ")";
          },
          [](const ScaledNode& n) -> std::string {
            return "(scale " + to_string(n.coeff) + " " + to_sexpr(*n.body) + ")";
          },
          [](const IdentityNode&) -> std::string { return "1"; },
      },
      e.value);
}

NormalPolynomial evaluate(const ExprNode& e) {
  return std::visit(
      Overloaded{
          [](const LetterNode& n) {
            return NormalPolynomial(n.letter == Letter::creator ? kCreator : kAnnihilator);
          },
          [](const PowerNode& n) { return power(evaluate(*n.base), n.exponent); },
          [](const ProductNode& n) {
            NormalPolynomial acc = NormalPolynomial::identity();
            for (const auto& f : n.factors) acc = multiply(acc, evaluate(*f));
            return acc;
          },
          [](const SumNode& n) {
            NormalPolynomial acc;
            for (const auto& t : n.terms) acc = add(acc, evaluate(*t));
            return acc;
          },
          [](const ScaledNode& n) { return scale(n.coeff, evaluate(*n.body)); },
          [](const IdentityNode&) { return NormalPolynomial::identity(); },
      },
      e.value);
}

}  // namespace ladder
