#include "ladder/expr.hpp"

namespace ladder {
namespace {

std::string abs_text(const Rational& q) { return to_string(Rational(abs(q))); }

std::string monomial_text(NormalMonomial m) {
  std::string out;
  if (m.r > 0) {
    out += "ad";
    if (m.r > 1) out += "^" + std::to_string(m.r);
  }
  if (m.s > 0) {
    if (!out.empty()) out += ' ';
    out += "a";
    if (m.s > 1) out += "^" + std::to_string(m.s);
  }
  return out;
}

}  // namespace

std::string format(const NormalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p) {
    bool negative = false;
    std::string magnitude;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      magnitude = abs_text(c.re());
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      magnitude = abs_text(c.im()) + "i";
    } else {
      magnitude = "(" + to_string(c.re()) + (sgn(c.im()) < 0 ? "-" : "+") + abs_text(c.im()) + "i)";
    }

    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }

    const std::string mono = monomial_text(m);
    if (magnitude == "1") {
      out += mono.empty() ? "1" : mono;
    } else {
      out += magnitude;
      if (!mono.empty()) out += " " + mono;
    }
  }
  return out;
}

}  // namespace ladder
