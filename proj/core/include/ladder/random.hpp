#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ladder/graph.hpp"
#include "ladder/polynomial.hpp"
#include "ladder/word.hpp"

namespace ladder {

/// Seeded generators for property checks. Only raw mt19937_64 output is
/// used (no std distributions), so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }
  std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

Word random_word(Rng& rng, std::size_t max_length);

/// 1..max_vertices steps with r, s in [0, max_spots] and a uniformly chosen
/// valid matching index at every step.
std::vector<BuildStep> random_build_steps(Rng& rng, std::size_t max_vertices,
                                          std::uint32_t max_spots);

/// Up to max_terms terms with r, s in [0, max_degree] and small Gaussian
/// rational coefficients (sometimes purely real, imaginary or complex).
NormalPolynomial random_polynomial(Rng& rng, std::size_t max_terms, std::uint32_t max_degree);

}  // namespace ladder
