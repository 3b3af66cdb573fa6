#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ladder {

/// Arbitrary-precision rational. GMP keeps it in lowest terms with a
/// positive denominator as long as every value is canonicalized on entry.
using Rational = mpq_class;

/// Parses "n" or "n/d" (decimal, optional leading '-'). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exact Gaussian rational re + im*i. Every scalar in the library is one of
/// these; there is no floating point anywhere in the kernel.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Coefficient(const mpz_class& value) : re_(value) {}
  Coefficient(Rational re, Rational im);
  explicit Coefficient(Rational re) : Coefficient(std::move(re), Rational(0)) {}

  /// Builds re = num/den from decimal strings. Throws on a zero denominator.
  static Coefficient from_parts(std::string_view re_num, std::string_view re_den,
                                std::string_view im_num = "0",
                                std::string_view im_den = "1");
  static Coefficient imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }
  /// True for the positive integers 1, 2, 3, ...
  bool is_positive_integer() const;

  Coefficient operator-() const { return {-re_, -im_}; }
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  /// Throws std::domain_error when rhs is zero.
  Coefficient& operator/=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
  friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }
  friend Coefficient operator/(Coefficient lhs, const Coefficient& rhs) { return lhs /= rhs; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Debug rendering, e.g. "3", "-1/2", "1+2i", "-3/4i".
std::string to_string(const Coefficient& c);

}  // namespace ladder
