#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ladder/polynomial.hpp"

namespace ladder::cli {

enum class Subcommand { normal_order, commutator, compose, project_check, oracle_check, render };
enum class OutputFormat { text, json, dot };

struct Bounds {
  std::uint32_t max_r = 4;
  std::uint32_t max_s = 4;
  std::uint32_t max_k = 4;
  std::uint32_t max_l = 4;
};

/// Parses "r,s,k,l". Throws std::invalid_argument.
Bounds parse_bounds(const std::string& text);

/// A fully parsed invocation.
struct CommandSpec {
  Subcommand subcommand = Subcommand::normal_order;
  /// Expression text, graph build spec, or a file path (see `input_is_file`).
  std::string input;
  bool input_is_file = false;
  std::vector<std::uint32_t> numbers;  // positional integers of commutator/compose/project-check
  OutputFormat output_format = OutputFormat::text;
  std::optional<std::string> dot_dir;
  std::optional<std::uint64_t> seed;
  Bounds bounds;
  std::uint32_t words = 200;
  std::uint32_t pairs = 200;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const CommandSpec& spec);

/// Exit status: 0 success, 1 failed check or bad input.
int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

using ProductFn = std::function<NormalPolynomial(NormalMonomial, NormalMonomial)>;

struct OracleConfig {
  Bounds bounds;
  std::uint32_t words = 200;
  std::size_t max_word_length = 8;
  std::uint32_t pairs = 200;
  std::size_t max_vertices = 6;
  std::uint64_t seed = 42;
  /// Closed-form product under test; replaced by a corrupted one in fault
  /// injection tests.
  ProductFn product;
};

struct OracleReport {
  std::size_t products = 0;
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  /// The first (smallest) failing case of each section.
  std::vector<std::string> counterexamples;

  bool passed() const { return mismatches == 0; }
};

/// (a) closed-form product vs. projected graph compositions over all
/// bounded (r,s,k,l), including composition counts; (b) rewrite vs. fold vs.
/// graph normal ordering on random words; (c) projection homomorphism on
/// random multi-vertex pairs.
OracleReport run_oracle_check(const OracleConfig& config);

void print_oracle_report(const OracleReport& report, std::ostream& out);

}  // namespace ladder::cli
