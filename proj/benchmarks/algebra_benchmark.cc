#include "benchmark/benchmark.h"
#include "ladder/algebra.hpp"
#include "ladder/expr.hpp"

namespace ladder {
namespace {

// To run: ./build/benchmarks/ladder_benchmarks --benchmark_filter=Multiply

void BM_MultiplyMonomials(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto p = multiply_monomials({n, n}, {n, n});
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_MultiplyMonomials)->RangeMultiplier(4)->Range(1, 256);

void BM_NumberOperatorPower(benchmark::State& state) {
  const NormalPolynomial number({1, 1});
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto p = power(number, n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_NumberOperatorPower)->RangeMultiplier(2)->Range(2, 64);

// The two normal-ordering strategies on (a ad)^n.
void BM_NormalOrderRewrite(benchmark::State& state) {
  const Word w = repeat(Word::parse("a ad"), static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto p = normal_order_rewrite(w);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_NormalOrderRewrite)->DenseRange(2, 8, 2);

void BM_NormalOrderFold(benchmark::State& state) {
  const Word w = repeat(Word::parse("a ad"), static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto p = normal_order_fold(w);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_NormalOrderFold)->DenseRange(2, 8, 2);

void BM_ParseEvaluate(benchmark::State& state) {
  const std::string text = "(ad a + 1/2 a^2 - (1+2i) ad^2)^4 + 3 a ad";
  for (auto _ : state) {
    auto p = evaluate(*parse(text));
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ParseEvaluate);

}  // namespace
}  // namespace ladder
