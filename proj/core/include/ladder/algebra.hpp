#pragma once

#include <cstdint>

#include "ladder/polynomial.hpp"
#include "ladder/word.hpp"

namespace ladder {

/// Product of two basis monomials in normal form:
///
///   (ad^r a^s)(ad^k a^l) = sum_{i=0}^{min(k,s)} i! C(s,i) C(k,i) ad^(r+k-i) a^(s+l-i)
///
/// Exactly min(k, s) + 1 terms, all with positive integer coefficients; the
/// i = 0 term has coefficient 1.
NormalPolynomial multiply_monomials(NormalMonomial m1, NormalMonomial m2);

/// Bilinear extension of multiply_monomials. Associative, unit identity().
NormalPolynomial multiply(const NormalPolynomial& p, const NormalPolynomial& q);

inline NormalPolynomial operator*(const NormalPolynomial& p, const NormalPolynomial& q) {
  return multiply(p, q);
}

/// p^n by repeated squaring; p^0 is the identity.
NormalPolynomial power(const NormalPolynomial& p, std::uint32_t n);

/// Normal form of [a^s, ad^k] = a^s ad^k - ad^k a^s. Zero if s or k is zero.
NormalPolynomial commutator_powers(std::uint32_t s, std::uint32_t k);

/// Normal form of a word by term rewriting. The leftmost "a ad" pair of a
/// non-normal word is replaced by "ad a" plus the word with the pair removed,
/// repeatedly, until every word in the formal sum is normally ordered.
NormalPolynomial normal_order_rewrite(const Word& w);

/// Normal form of a word by left-folding multiply over its letters.
NormalPolynomial normal_order_fold(const Word& w);

/// Runs both strategies, throws std::logic_error if they disagree, and
/// returns the common result.
NormalPolynomial normal_order_word(const Word& w);

}  // namespace ladder
