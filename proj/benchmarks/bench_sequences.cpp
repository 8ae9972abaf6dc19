#include "fgab/six_term.hpp"
#include "inputs.hpp"

#include <benchmark/benchmark.h>

namespace {

// Split A -> A + (Z/4 + Z) -> Z/4 + Z, with A a chain of n torsion summands.
fgab::ShortExactSeq split_input(std::size_t n) {
  return fgab::split_sequence(bench::chain_group(0, n), fgab::FgGroup(1, {4}));
}

void BM_SixTermModN(benchmark::State& state) {
  const auto e = split_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::six_term_mod_n(e, 12));
}
BENCHMARK(BM_SixTermModN)->DenseRange(1, 4);

void BM_SixTermTor(benchmark::State& state) {
  const auto e = split_input(static_cast<std::size_t>(state.range(0)));
  const fgab::FgGroup u = fgab::FgGroup::cyclic(12);
  for (auto _ : state) benchmark::DoNotOptimize(fgab::six_term_tor(u, e));
}
BENCHMARK(BM_SixTermTor)->DenseRange(1, 4);

void BM_SixTermExtCov(benchmark::State& state) {
  const auto e = split_input(static_cast<std::size_t>(state.range(0)));
  const fgab::FgGroup u = fgab::FgGroup(1, {12});
  for (auto _ : state) benchmark::DoNotOptimize(fgab::six_term_ext_cov(u, e));
}
BENCHMARK(BM_SixTermExtCov)->DenseRange(1, 4);

void BM_SixTermExtContra(benchmark::State& state) {
  const auto e = split_input(static_cast<std::size_t>(state.range(0)));
  const fgab::FgGroup u = fgab::FgGroup(1, {12});
  for (auto _ : state) benchmark::DoNotOptimize(fgab::six_term_ext_contra(e, u));
}
BENCHMARK(BM_SixTermExtContra)->DenseRange(1, 4);

// Multiplication by 6 on both rows of a split sequence.
void BM_Snake(benchmark::State& state) {
  const auto e = split_input(static_cast<std::size_t>(state.range(0)));
  const fgab::SnakeInput in(e, e, fgab::Homomorphism::scalar(e.a(), 6),
                            fgab::Homomorphism::scalar(e.b(), 6), fgab::Homomorphism::scalar(e.c(), 6));
  for (auto _ : state) benchmark::DoNotOptimize(fgab::snake(in));
}
BENCHMARK(BM_Snake)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
