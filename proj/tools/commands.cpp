#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ladder/algebra.hpp"
#include "ladder/expr.hpp"
#include "ladder/graph.hpp"
#include "ladder/graph_sum.hpp"
#include "ladder/random.hpp"

namespace ladder::cli {
namespace {

std::uint32_t parse_uint(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + text + "'");
  }
  const unsigned long long v = std::stoull(text);
  if (v > UINT32_MAX) throw std::invalid_argument("integer out of range: " + text);
  return static_cast<std::uint32_t>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string monomial_label(NormalMonomial m) {
  return "G(" + std::to_string(m.r) + "," + std::to_string(m.s) + ")";
}

std::string product_label(std::uint32_t r, std::uint32_t s, std::uint32_t k, std::uint32_t l) {
  return monomial_label({r, s}) + "*" + monomial_label({k, l});
}

NormalPolynomial graph_product(std::uint32_t r, std::uint32_t s, std::uint32_t k,
                               std::uint32_t l) {
  return project_sum(graph_multiply(GraphSum(make_vertex(r, s)), GraphSum(make_vertex(k, l))));
}

// First monomial (canonical order) where the two polynomials differ.
std::optional<NormalMonomial> first_difference(const NormalPolynomial& x,
                                               const NormalPolynomial& y) {
  const NormalPolynomial diff = subtract(x, y);
  if (diff.is_zero()) return std::nullopt;
  return diff.begin()->first;
}

// Build spec: "r,s[:m];r,s[:m];..." Empty spec is the void graph.
DiagGraph graph_from_build_spec(const std::string& text) {
  std::vector<BuildStep> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    BuildStep step;
    const auto colon = item.find(':');
    const std::string dims = item.substr(0, colon);
    if (colon != std::string::npos) step.matching = parse_uint(item.substr(colon + 1));
    const auto comma = dims.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("build step must be 'r,s[:m]'");
    step.r = parse_uint(dims.substr(0, comma));
    step.s = parse_uint(dims.substr(comma + 1));
    steps.push_back(step);
  }
  return build_iteratively(steps);
}

int normal_order(const CommandSpec& spec, std::ostream& out) {
  const std::string text = spec.input_is_file ? read_file(spec.input) : spec.input;
  const NormalPolynomial p = evaluate(*parse(text));
  if (spec.output_format == OutputFormat::json) {
    out << to_json(p).dump() << '\n';
  } else {
    out << format(p) << '\n';
  }
  return 0;
}

int commutator(const CommandSpec& spec, std::ostream& out) {
  const NormalPolynomial p = commutator_powers(spec.numbers[0], spec.numbers[1]);
  if (spec.output_format == OutputFormat::json) {
    out << to_json(p).dump() << '\n';
  } else {
    out << format(p) << '\n';
  }
  return 0;
}

int compose_report(const CommandSpec& spec, std::ostream& out) {
  const auto r = spec.numbers[0], s = spec.numbers[1], k = spec.numbers[2], l = spec.numbers[3];
  const auto graphs = enumerate_compositions(make_vertex(r, s), make_vertex(k, l));

  struct Class {
    std::size_t multiplicity = 0;
    NormalMonomial target;
  };
  std::map<std::uint32_t, Class> classes;
  for (const DiagGraph& g : graphs) {
    const NormalMonomial m = project(g);
    Class& c = classes[r + k - m.r];
    ++c.multiplicity;
    c.target = m;
  }

  if (spec.dot_dir) {
    std::filesystem::create_directories(*spec.dot_dir);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "composition_%04zu", i);
      std::ofstream file(std::filesystem::path(*spec.dot_dir) / (std::string(name) + ".dot"));
      if (!file) throw std::runtime_error("cannot write into '" + *spec.dot_dir + "'");
      file << to_dot(graphs[i], name);
    }
  }

  if (spec.output_format == OutputFormat::json) {
    nlohmann::json j;
    j["left"] = {{"r", r}, {"s", s}};
    j["right"] = {{"r", k}, {"s", l}};
    j["total"] = graphs.size();
    j["classes"] = nlohmann::json::array();
    for (const auto& [joins, c] : classes) {
      j["classes"].push_back({{"joins", joins},
                              {"multiplicity", c.multiplicity},
                              {"monomial", {{"r", c.target.r}, {"s", c.target.s}}}});
    }
    j["graphs"] = nlohmann::json::array();
    for (const DiagGraph& g : graphs) j["graphs"].push_back(to_json(g));
    out << j.dump() << '\n';
    return 0;
  }

  out << product_label(r, s, k, l) << '\n';
  out << "total compositions: " << graphs.size() << '\n';
  for (const auto& [joins, c] : classes) {
    out << "i=" << joins << "  x" << c.multiplicity << "  " << monomial_label(c.target) << "  "
        << format(NormalPolynomial(c.target)) << '\n';
  }
  if (spec.dot_dir) out << "wrote " << graphs.size() << " DOT files to " << *spec.dot_dir << '\n';
  return 0;
}

int project_check(const CommandSpec& spec, std::ostream& out) {
  const auto r = spec.numbers[0], s = spec.numbers[1], k = spec.numbers[2], l = spec.numbers[3];
  const NormalPolynomial formula = multiply_monomials({r, s}, {k, l});
  const NormalPolynomial graphs = graph_product(r, s, k, l);
  out << product_label(r, s, k, l) << '\n';
  out << "closed form: " << format(formula) << '\n';
  out << "graphs:      " << format(graphs) << '\n';
  const bool ok = formula == graphs;
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int oracle_check(const CommandSpec& spec, std::ostream& out) {
  OracleConfig config;
  config.bounds = spec.bounds;
  config.words = spec.words;
  config.pairs = spec.pairs;
  if (spec.seed) config.seed = *spec.seed;
  const OracleReport report = run_oracle_check(config);
  print_oracle_report(report, out);
  return report.passed() ? 0 : 1;
}

int render(const CommandSpec& spec, std::ostream& out) {
  DiagGraph g;
  if (spec.input_is_file) {
    g = graph_from_json(nlohmann::json::parse(read_file(spec.input)));
  } else {
    g = graph_from_build_spec(spec.input);
  }
  const std::string dot = to_dot(g, "graph");
  if (spec.dot_dir) {
    std::filesystem::create_directories(*spec.dot_dir);
    const auto path = std::filesystem::path(*spec.dot_dir) / "graph.dot";
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
    file << dot;
    out << "wrote " << path.string() << '\n';
  } else {
    out << dot;
  }
  return 0;
}

}  // namespace

Bounds parse_bounds(const std::string& text) {
  std::vector<std::uint32_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_uint(item));
  if (values.size() != 4) throw std::invalid_argument("--bounds expects r,s,k,l");
  return {values[0], values[1], values[2], values[3]};
}

void validate(const CommandSpec& spec) {
  auto need_numbers = [&](std::size_t n, const char* name) {
    if (spec.numbers.size() != n) {
      throw std::invalid_argument(std::string(name) + " expects " + std::to_string(n) +
                                  " integer arguments");
    }
  };
  switch (spec.subcommand) {
    case Subcommand::normal_order:
      if (spec.output_format == OutputFormat::dot) {
        throw std::invalid_argument("normal-order has no dot output");
      }
      break;
    case Subcommand::commutator:
      need_numbers(2, "commutator");
      if (spec.output_format == OutputFormat::dot) {
        throw std::invalid_argument("commutator has no dot output");
      }
      break;
    case Subcommand::compose:
      need_numbers(4, "compose");
      break;
    case Subcommand::project_check:
      need_numbers(4, "project-check");
      if (spec.output_format != OutputFormat::text) {
        throw std::invalid_argument("project-check only prints text");
      }
      break;
    case Subcommand::oracle_check:
      if (spec.output_format != OutputFormat::text) {
        throw std::invalid_argument("oracle-check only prints text");
      }
      break;
    case Subcommand::render:
      if (spec.output_format != OutputFormat::dot) {
        throw std::invalid_argument("render is only valid with dot output");
      }
      break;
  }
}

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    validate(spec);
    switch (spec.subcommand) {
      case Subcommand::normal_order:
        return normal_order(spec, out);
      case Subcommand::commutator:
        return commutator(spec, out);
      case Subcommand::compose:
        return compose_report(spec, out);
      case Subcommand::project_check:
        return project_check(spec, out);
      case Subcommand::oracle_check:
        return oracle_check(spec, out);
      case Subcommand::render:
        return render(spec, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

OracleReport run_oracle_check(const OracleConfig& config) {
  const ProductFn product = config.product ? config.product : ProductFn(multiply_monomials);
  OracleReport report;
  const Bounds& b = config.bounds;

  for (std::uint32_t r = 0; r <= b.max_r; ++r) {
    for (std::uint32_t s = 0; s <= b.max_s; ++s) {
      for (std::uint32_t k = 0; k <= b.max_k; ++k) {
        for (std::uint32_t l = 0; l <= b.max_l; ++l) {
          ++report.products;
          const NormalPolynomial formula = product({r, s}, {k, l});
          const GraphSum graphs =
              graph_multiply(GraphSum(make_vertex(r, s)), GraphSum(make_vertex(k, l)));
          const NormalPolynomial projected = project_sum(graphs);
          if (auto m = first_difference(formula, projected)) {
            if (report.mismatches++ > 0) continue;
            report.counterexamples.push_back(
                "product (r,s,k,l)=(" + std::to_string(r) + "," + std::to_string(s) + "," +
                std::to_string(k) + "," + std::to_string(l) + ") at i=" +
                std::to_string(r + k - m->r) + ": closed form " +
                to_string(formula.coefficient(*m)) + ", graphs " +
                to_string(projected.coefficient(*m)) + " for " + monomial_label(*m));
            continue;
          }
          // Every composition carries coefficient one, so the coefficient
          // sum of the closed form must equal the composition count.
          Coefficient total;
          for (const auto& [m, c] : formula) total += c;
          if (!(total == Coefficient(static_cast<long>(graphs.size())))) {
            if (report.mismatches++ > 0) continue;
            report.counterexamples.push_back("composition count for " +
                                             product_label(r, s, k, l) + ": " +
                                             std::to_string(graphs.size()) + " vs " +
                                             to_string(total));
          }
        }
      }
    }
  }

  Rng rng(config.seed);
  std::optional<Word> shortest_failure;
  for (std::uint32_t n = 0; n < config.words; ++n) {
    const Word w = random_word(rng, config.max_word_length);
    ++report.words;
    const NormalPolynomial rewritten = normal_order_rewrite(w);
    const bool ok = rewritten == normal_order_fold(w) && rewritten == normal_order_via_graphs(w);
    if (!ok) {
      ++report.mismatches;
      if (!shortest_failure || w.size() < shortest_failure->size()) shortest_failure = w;
    }
  }
  if (shortest_failure) {
    report.counterexamples.push_back("normal ordering strategies disagree on word '" +
                                     to_string(*shortest_failure) + "'");
  }

  std::size_t pair_failures = 0;
  for (std::uint32_t n = 0; n < config.pairs; ++n) {
    DiagGraph x, y;
    // Keep composition counts desk-sized: at most 3 joins per pair.
    do {
      x = build_iteratively(random_build_steps(rng, config.max_vertices, 2));
      y = build_iteratively(random_build_steps(rng, config.max_vertices, 2));
    } while (std::min(x.dangling_in().size(), y.dangling_out().size()) > 3 ||
             std::max(x.dangling_in().size(), y.dangling_out().size()) > 8);
    ++report.pairs;
    const NormalPolynomial lhs = project_sum(graph_multiply(GraphSum(x), GraphSum(y)));
    const NormalPolynomial rhs = product(project(x), project(y));
    if (lhs != rhs) {
      ++report.mismatches;
      if (pair_failures++ > 0) continue;
      report.counterexamples.push_back("homomorphism fails for graphs " + to_json(x).dump() +
                                       " and " + to_json(y).dump());
    }
  }
  return report;
}

void print_oracle_report(const OracleReport& report, std::ostream& out) {
  for (const std::string& line : report.counterexamples) out << "counterexample: " << line << '\n';
  out << (report.passed() ? "PASS" : "FAIL") << " (" << report.products
      << " exhaustive products, " << report.words << " words, " << report.pairs
      << " homomorphism pairs, " << report.mismatches << " mismatches)\n";
}

}  // namespace ladder::cli
