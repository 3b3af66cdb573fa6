#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ladder/coefficient.hpp"

namespace ladder {

/// Basis element ad^r a^s of the normally ordered algebra. `r` counts
/// creators (white spots of the matching one-vertex graph), `s` counts
/// annihilators (gray spots). (0, 0) is the identity.
struct NormalMonomial {
  std::uint32_t r = 0;
  std::uint32_t s = 0;

  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

inline constexpr NormalMonomial kIdentityMonomial{0, 0};
inline constexpr NormalMonomial kCreator{1, 0};
inline constexpr NormalMonomial kAnnihilator{0, 1};

/// Canonical term order: total degree r+s descending, then r descending.
struct CanonicalTermOrder {
  bool operator()(const NormalMonomial& x, const NormalMonomial& y) const {
    const std::uint64_t dx = std::uint64_t{x.r} + x.s;
    const std::uint64_t dy = std::uint64_t{y.r} + y.s;
    if (dx != dy) return dx > dy;
    return x.r > y.r;
  }
};

/// Finite formal sum of normal monomials with nonzero exact coefficients.
/// Iteration visits terms in canonical order.
class NormalPolynomial {
 public:
  using TermMap = std::map<NormalMonomial, Coefficient, CanonicalTermOrder>;
  using const_iterator = TermMap::const_iterator;

  NormalPolynomial() = default;
  explicit NormalPolynomial(NormalMonomial m, Coefficient c = 1);

  static NormalPolynomial identity() { return NormalPolynomial(kIdentityMonomial); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const TermMap& terms() const { return terms_; }

  /// Zero when the monomial is absent.
  Coefficient coefficient(NormalMonomial m) const;

  /// Accumulates c * m, dropping the term if it cancels.
  void add_term(NormalMonomial m, const Coefficient& c);

  friend bool operator==(const NormalPolynomial&, const NormalPolynomial&) = default;

 private:
  TermMap terms_;
};

NormalPolynomial add(const NormalPolynomial& p, const NormalPolynomial& q);
NormalPolynomial subtract(const NormalPolynomial& p, const NormalPolynomial& q);
NormalPolynomial scale(const Coefficient& c, const NormalPolynomial& p);

inline NormalPolynomial operator+(const NormalPolynomial& p, const NormalPolynomial& q) {
  return add(p, q);
}
inline NormalPolynomial operator-(const NormalPolynomial& p, const NormalPolynomial& q) {
  return subtract(p, q);
}
inline NormalPolynomial operator*(const Coefficient& c, const NormalPolynomial& p) {
  return scale(c, p);
}

/// Debug rendering, e.g. "G(4,3) + 2*G(3,2)". See ladder/expr.hpp for the
/// re-parseable operator syntax.
std::string debug_string(const NormalPolynomial& p);

/// JSON array of {"r", "s", "coeff": {"re": {"num","den"}, "im": {...}}} in
/// canonical term order. Numerators and denominators are decimal strings.
nlohmann::json to_json(const NormalPolynomial& p);
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
NormalPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace ladder
