#include "ladder/coefficient.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace ladder {
namespace {

mpz_class parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    }
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Coefficient::Coefficient(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient Coefficient::from_parts(std::string_view re_num, std::string_view re_den,
                                    std::string_view im_num, std::string_view im_den) {
  auto part = [](std::string_view num, std::string_view den) {
    mpz_class n = parse_integer(num);
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
  };
  return {part(re_num, re_den), part(im_num, im_den)};
}

bool Coefficient::is_positive_integer() const {
  return is_real() && re_.get_den() == 1 && sgn(re_) > 0;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero coefficient");
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  Rational norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
  Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const Coefficient& c) {
  if (c.is_real()) return to_string(c.re());
  if (sgn(c.re()) == 0) return to_string(c.im()) + "i";
  std::string out = to_string(c.re());
  if (sgn(c.im()) > 0) out += '+';
  out += to_string(c.im());
  out += 'i';
  return out;
}

}  // namespace ladder
