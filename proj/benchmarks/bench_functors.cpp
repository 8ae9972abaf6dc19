#include "fgab/functors.hpp"
#include "inputs.hpp"

#include <benchmark/benchmark.h>

namespace {

// Both arguments grow together: Z + Z/2 + Z/12 + ... with range(0) summands.
void BM_Hom(benchmark::State& state) {
  const fgab::FgGroup a = bench::chain_group(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::hom_group(a, a));
}
BENCHMARK(BM_Hom)->DenseRange(1, 6);

void BM_Tensor(benchmark::State& state) {
  const fgab::FgGroup a = bench::chain_group(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::tensor_product(a, a));
}
BENCHMARK(BM_Tensor)->DenseRange(1, 6);

void BM_Tor(benchmark::State& state) {
  const fgab::FgGroup a = bench::chain_group(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::tor(a, a));
}
BENCHMARK(BM_Tor)->DenseRange(1, 6);

void BM_Ext(benchmark::State& state) {
  const fgab::FgGroup a = bench::chain_group(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::ext(a, a));
}
BENCHMARK(BM_Ext)->DenseRange(1, 6);

}  // namespace

BENCHMARK_MAIN();
