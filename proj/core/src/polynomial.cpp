#include "ladder/polynomial.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace ladder {

NormalPolynomial::NormalPolynomial(NormalMonomial m, Coefficient c) { add_term(m, c); }

Coefficient NormalPolynomial::coefficient(NormalMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

void NormalPolynomial::add_term(NormalMonomial m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NormalPolynomial add(const NormalPolynomial& p, const NormalPolynomial& q) {
  NormalPolynomial out = p;
  for (const auto& [m, c] : q) out.add_term(m, c);
  return out;
}

NormalPolynomial subtract(const NormalPolynomial& p, const NormalPolynomial& q) {
  NormalPolynomial out = p;
  for (const auto& [m, c] : q) out.add_term(m, -c);
  return out;
}

NormalPolynomial scale(const Coefficient& c, const NormalPolynomial& p) {
  NormalPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : p) out.add_term(m, c * coeff);
  return out;
}

std::string debug_string(const NormalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + to_string(c) + ")*";
    out += "G(" + std::to_string(m.r) + "," + std::to_string(m.s) + ")";
  }
  return out;
}

namespace {

nlohmann::json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
      !j["den"].is_string()) {
    throw std::invalid_argument("rational must be {\"num\": string, \"den\": string}");
  }
  const auto num = j["num"].get<std::string>();
  const auto den = j["den"].get<std::string>();
  if (!den.empty() && den.front() == '-') {
    throw std::invalid_argument("denominator must be positive");
  }
  return parse_rational(num + "/" + den);
}

}  // namespace

nlohmann::json to_json(const NormalPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p) {
    out.push_back({{"r", m.r},
                   {"s", m.s},
                   {"coeff", {{"re", rational_json(c.re())}, {"im", rational_json(c.im())}}}});
  }
  return out;
}

NormalPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  NormalPolynomial out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("r") || !term.contains("s") ||
        !term.contains("coeff") || !term["r"].is_number_unsigned() ||
        !term["s"].is_number_unsigned()) {
      throw std::invalid_argument("polynomial term must be {\"r\", \"s\", \"coeff\"}");
    }
    const auto& coeff = term["coeff"];
    if (!coeff.is_object() || !coeff.contains("re") || !coeff.contains("im")) {
      throw std::invalid_argument("coeff must be {\"re\", \"im\"}");
    }
    NormalMonomial m{term["r"].get<std::uint32_t>(), term["s"].get<std::uint32_t>()};
    out.add_term(m, Coefficient(rational_from_json(coeff["re"]), rational_from_json(coeff["im"])));
  }
  return out;
}

}  // namespace ladder
