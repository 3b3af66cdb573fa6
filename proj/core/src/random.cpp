#include "ladder/random.hpp"

#include <numeric>

namespace ladder {
namespace {

Rational random_rational(Rng& rng) {
  Rational q(mpz_class(static_cast<long>(rng.uniform_signed(-9, 9))),
             mpz_class(static_cast<unsigned long>(rng.uniform(1, 6))));
  q.canonicalize();
  return q;
}

}  // namespace

Word random_word(Rng& rng, std::size_t max_length) {
  Word w;
  const auto length = rng.uniform(0, max_length);
  for (std::uint64_t i = 0; i < length; ++i) {
    w.letters.push_back(rng.coin() ? Letter::creator : Letter::annihilator);
  }
  return w;
}

std::vector<BuildStep> random_build_steps(Rng& rng, std::size_t max_vertices,
                                          std::uint32_t max_spots) {
  std::vector<BuildStep> steps;
  const auto count = rng.uniform(1, max_vertices);
  std::size_t open_grays = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    BuildStep step;
    step.r = static_cast<std::uint32_t>(rng.uniform(0, max_spots));
    step.s = static_cast<std::uint32_t>(rng.uniform(0, max_spots));
    // Only the matching sizes matter here, so stand-in labels suffice.
    std::vector<PortId> grays(open_grays);
    std::vector<PortId> whites(step.r);
    std::iota(grays.begin(), grays.end(), PortId{0});
    std::iota(whites.begin(), whites.end(), PortId{0});
    const auto matchings = enumerate_matchings(grays, whites);
    step.matching = static_cast<std::size_t>(rng.uniform(0, matchings.size() - 1));
    open_grays = open_grays - matchings[step.matching].size() + step.s;
    steps.push_back(step);
  }
  return steps;
}

NormalPolynomial random_polynomial(Rng& rng, std::size_t max_terms, std::uint32_t max_degree) {
  NormalPolynomial p;
  const auto terms = rng.uniform(0, max_terms);
  for (std::uint64_t t = 0; t < terms; ++t) {
    NormalMonomial m{static_cast<std::uint32_t>(rng.uniform(0, max_degree)),
                     static_cast<std::uint32_t>(rng.uniform(0, max_degree))};
    Coefficient c;
    switch (rng.uniform(0, 2)) {
      case 0:
        c = Coefficient(random_rational(rng));
        break;
      case 1:
        c = Coefficient(Rational(0), random_rational(rng));
        break;
      default:
        c = Coefficient(random_rational(rng), random_rational(rng));
        break;
    }
    p.add_term(m, c);
  }
  return p;
}

}  // namespace ladder
