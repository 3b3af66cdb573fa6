#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using ladder::cli::CommandSpec;
  using ladder::cli::OutputFormat;
  using ladder::cli::Subcommand;

  CLI::App app{"Exact normal ordering and graph-composition algebra for ladder operators"};
  app.require_subcommand(1);

  CommandSpec spec;
  bool json = false;
  std::string bounds;
  std::string file;

  auto* normal = app.add_subcommand("normal-order", "Print the normally ordered form of an expression");
  auto* normal_expr = normal->add_option("expr", spec.input, "Operator expression, e.g. \"a ad\"");
  auto* normal_file = normal->add_option("-f,--file", file, "Read the expression from a file");
  normal_expr->excludes(normal_file);
  normal->add_flag("--json", json, "Print the polynomial as JSON");

  auto* comm = app.add_subcommand("commutator", "Normal form of [a^s, ad^k]");
  comm->add_option("powers", spec.numbers, "Powers s and k")->expected(2)->required()
      ->check(CLI::NonNegativeNumber);
  comm->add_flag("--json", json, "Print the polynomial as JSON");

  auto* compose = app.add_subcommand("compose", "Enumerate all compositions of G(r,s) with G(k,l)");
  compose->add_option("spots", spec.numbers, "Spot counts of both one-vertex graphs")
      ->expected(4)->required()->check(CLI::NonNegativeNumber);
  compose->add_option("--dot", spec.dot_dir, "Write one DOT file per composition into this directory");
  compose->add_flag("--json", json, "Print the report as JSON");

  auto* check = app.add_subcommand("project-check",
                                   "Compare the closed-form product with projected compositions");
  check->add_option("spots", spec.numbers, "Spot counts of both one-vertex graphs")
      ->expected(4)->required()->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle-check", "Run the cross-validation oracles");
  oracle->add_option("--bounds", bounds, "Exhaustive product bounds r,s,k,l (default 4,4,4,4)");
  oracle->add_option("--words", spec.words, "Random words to normal-order (default 200)");
  oracle->add_option("--pairs", spec.pairs, "Random multi-vertex pairs (default 200)");
  oracle->add_option("--seed", spec.seed, "Random seed (default 42)");

  auto* render = app.add_subcommand("render", "Emit a graph as Graphviz DOT");
  auto* render_spec = render->add_option("spec", spec.input,
                                         "Build steps \"r,s[:m];r,s[:m];...\" from the void graph");
  auto* render_file = render->add_option("-f,--file", file, "Read a graph JSON file");
  render_spec->excludes(render_file);
  render->add_option("--dot", spec.dot_dir, "Write graph.dot into this directory");
  render->add_flag("--json", json, "Rejected: render only emits DOT");

  CLI11_PARSE(app, argc, argv);

  if (!file.empty()) {
    spec.input = file;
    spec.input_is_file = true;
  }
  if (json) spec.output_format = OutputFormat::json;

  if (normal->parsed()) {
    spec.subcommand = Subcommand::normal_order;
  } else if (comm->parsed()) {
    spec.subcommand = Subcommand::commutator;
  } else if (compose->parsed()) {
    spec.subcommand = Subcommand::compose;
  } else if (check->parsed()) {
    spec.subcommand = Subcommand::project_check;
  } else if (oracle->parsed()) {
    spec.subcommand = Subcommand::oracle_check;
    if (!bounds.empty()) {
      try {
        spec.bounds = ladder::cli::parse_bounds(bounds);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
      }
    }
  } else {
    spec.subcommand = Subcommand::render;
    if (!json) spec.output_format = OutputFormat::dot;
  }
  if (spec.subcommand == Subcommand::normal_order && spec.input.empty() && !spec.input_is_file) {
    std::cerr << "error: normal-order needs an expression or --file\n";
    return 2;
  }

  return ladder::cli::run(spec, std::cout, std::cerr);
}
