#include "benchmark/benchmark.h"
#include "ladder/graph.hpp"
#include "ladder/graph_sum.hpp"

namespace ladder {
namespace {

void BM_EnumerateCompositions(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const DiagGraph x = make_vertex(n, n);
  const DiagGraph y = make_vertex(n, n);
  for (auto _ : state) {
    auto graphs = enumerate_compositions(x, y);
    benchmark::DoNotOptimize(graphs);
  }
}
BENCHMARK(BM_EnumerateCompositions)->DenseRange(1, 5);

void BM_GraphMultiplyProject(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const GraphSum x(make_vertex(n, n));
  for (auto _ : state) {
    auto p = project_sum(graph_multiply(x, x));
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_GraphMultiplyProject)->DenseRange(1, 5);

void BM_CanonicalEncode(benchmark::State& state) {
  const DiagGraph g = build_iteratively({{2, 2, 0}, {2, 1, 1}, {2, 2, 1}, {2, 1, 1}, {2, 2, 1}});
  for (auto _ : state) {
    auto bytes = canonical_encode(g);
    benchmark::DoNotOptimize(bytes);
  }
}
BENCHMARK(BM_CanonicalEncode);

}  // namespace
}  // namespace ladder
