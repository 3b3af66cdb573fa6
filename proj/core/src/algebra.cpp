#include "ladder/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ladder {

NormalPolynomial multiply_monomials(NormalMonomial m1, NormalMonomial m2) {
  const auto [r, s] = m1;
  const auto [k, l] = m2;
  const std::uint32_t joins = std::min(k, s);
  NormalPolynomial out;
  // c_i = i! C(s,i) C(k,i);  c_{i+1} = c_i (s-i)(k-i) / (i+1), exact.
  mpz_class coeff = 1;
  for (std::uint32_t i = 0; i <= joins; ++i) {
    out.add_term({r + k - i, s + l - i}, Coefficient(coeff));
    if (i == joins) break;
    coeff *= mpz_class(s - i) * (k - i);
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), i + 1);
  }
  return out;
}

NormalPolynomial multiply(const NormalPolynomial& p, const NormalPolynomial& q) {
  NormalPolynomial out;
  for (const auto& [m1, c1] : p) {
    for (const auto& [m2, c2] : q) {
      const Coefficient weight = c1 * c2;
      for (const auto& [m, c] : multiply_monomials(m1, m2)) out.add_term(m, weight * c);
    }
  }
  return out;
}

NormalPolynomial power(const NormalPolynomial& p, std::uint32_t n) {
  NormalPolynomial result = NormalPolynomial::identity();
  NormalPolynomial base = p;
  while (n > 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

NormalPolynomial commutator_powers(std::uint32_t s, std::uint32_t k) {
  return subtract(multiply_monomials({0, s}, {k, 0}), NormalPolynomial({k, s}));
}

namespace {

NormalMonomial count_letters(const Word& w) {
  NormalMonomial m;
  for (Letter l : w.letters) {
    if (l == Letter::creator) {
      ++m.r;
    } else {
      ++m.s;
    }
  }
  return m;
}

// Shorter words sort first, so the back of the map is always a longest word.
struct ByLengthThenLetters {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.letters < y.letters;
  }
};

}  // namespace

NormalPolynomial normal_order_rewrite(const Word& w) {
  NormalPolynomial out;
  std::map<Word, Coefficient, ByLengthThenLetters> pending;
  pending.emplace(w, Coefficient(1));
  while (!pending.empty()) {
    // Longest words first: like terms produced by different branches merge
    // before they are expanded.
    auto node = pending.extract(std::prev(pending.end()));
    const Word& word = node.key();
    const Coefficient& coeff = node.mapped();
    if (coeff.is_zero()) continue;

    const auto& letters = word.letters;
    std::size_t pos = letters.size();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == Letter::annihilator && letters[i + 1] == Letter::creator) {
        pos = i;
        break;
      }
    }
    if (pos == letters.size()) {
      out.add_term(count_letters(word), coeff);
      continue;
    }

    Word swapped = word;
    std::swap(swapped.letters[pos], swapped.letters[pos + 1]);
    Word contracted = word;
    contracted.letters.erase(contracted.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                             contracted.letters.begin() + static_cast<std::ptrdiff_t>(pos + 2));
    pending[std::move(swapped)] += coeff;
    pending[std::move(contracted)] += coeff;
  }
  return out;
}

NormalPolynomial normal_order_fold(const Word& w) {
  NormalPolynomial acc = NormalPolynomial::identity();
  const NormalPolynomial creator(kCreator);
  const NormalPolynomial annihilator(kAnnihilator);
  for (Letter l : w.letters) acc = multiply(acc, l == Letter::creator ? creator : annihilator);
  return acc;
}

NormalPolynomial normal_order_word(const Word& w) {
  NormalPolynomial rewritten = normal_order_rewrite(w);
  if (rewritten != normal_order_fold(w)) {
    throw std::logic_error("normal ordering strategies disagree on word '" + to_string(w) + "'");
  }
  return rewritten;
}

}  // namespace ladder
