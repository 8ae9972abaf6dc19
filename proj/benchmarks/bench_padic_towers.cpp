#include "fgab/padic.hpp"
#include "fgab/towers.hpp"
#include "inputs.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_InvertUnit(benchmark::State& state) {
  const auto k = static_cast<unsigned long>(state.range(0));
  const fgab::PadicInt x(3, k, fgab::Integer("123456789012345678901234567891"));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::invert_unit(x));
}
BENCHMARK(BM_InvertUnit)->RangeMultiplier(4)->Range(16, 4096);

void BM_Digits(benchmark::State& state) {
  const auto k = static_cast<unsigned long>(state.range(0));
  const fgab::PadicInt x(5, k, -1);
  for (auto _ : state) benchmark::DoNotOptimize(x.digits());
}
BENCHMARK(BM_Digits)->RangeMultiplier(4)->Range(16, 4096);

void BM_Complete(benchmark::State& state) {
  const fgab::FgGroup a = bench::chain_group(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::complete(a, 3));
}
BENCHMARK(BM_Complete)->DenseRange(1, 6);

// x2 on Z/2^n: the image chain needs n steps to stabilize.
void BM_LimEndo(benchmark::State& state) {
  const fgab::FgGroup a = fgab::FgGroup::cyclic(fgab::pow(fgab::Integer(2), state.range(0)));
  const fgab::Tower t({a}, {}, fgab::TowerTail::endo_iterate(fgab::Homomorphism::scalar(a, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::lim(t));
}
BENCHMARK(BM_LimEndo)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
