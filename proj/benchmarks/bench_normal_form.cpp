#include "fgab/normal_form.hpp"
#include "inputs.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fgab::IntMatrix m = bench::random_matrix(n, n, 9, 17);
  for (auto _ : state) benchmark::DoNotOptimize(fgab::snf(m));
}
BENCHMARK(BM_Snf)->RangeMultiplier(2)->Range(2, 32);

void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fgab::IntMatrix m = bench::random_matrix(n, n + 2, 9, 18);
  for (auto _ : state) benchmark::DoNotOptimize(fgab::hnf(m));
}
BENCHMARK(BM_Hnf)->RangeMultiplier(2)->Range(2, 32);

void BM_Classify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fgab::Presentation p{n, bench::random_matrix(n, n, 20, 19)};
  for (auto _ : state) benchmark::DoNotOptimize(fgab::classify(p));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
