#include <benchmark/benchmark.h>

#include <random>

#include "hartop/numerics.hpp"
#include "hartop/transport.hpp"
#include "hartop/verify.hpp"

namespace {

using namespace hartop;

MultiIndex window(std::size_t n, std::int64_t m) { return MultiIndex(std::vector<std::int64_t>(n, m)); }

void BM_WindowMatrix(benchmark::State& state) {
  const auto m = state.range(0);
  std::mt19937_64 rng(42);
  const auto t = OperatorExpr::toeplitz(random_symbol(2, rng), SpaceKind::Triangle);
  for (auto _ : state) benchmark::DoNotOptimize(window_matrix(t, window(2, m)));
  state.SetComplexityN(m);
}
BENCHMARK(BM_WindowMatrix)->Arg(4)->Arg(8)->Arg(12);

void BM_SymbolMultiply(benchmark::State& state) {
  std::mt19937_64 rng(42);
  RandomSymbolOptions opts;
  opts.max_terms = static_cast<std::size_t>(state.range(0));
  const auto f = random_symbol(3, rng, opts);
  const auto g = random_symbol(3, rng, opts);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SymbolMultiply)->Arg(4)->Arg(16)->Arg(64);

void BM_Semicommutator(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto phi = random_symbol(2, rng);
  const auto psi = random_symbol(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(check_semicommutator(phi, psi, window(2, state.range(0))));
}
BENCHMARK(BM_Semicommutator)->Arg(3)->Arg(6);

void BM_ConjugationCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  const auto phi = random_symbol(n, rng);
  const auto m = window(n, n == 2 ? 6 : 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_conjugation(phi, m));
}
BENCHMARK(BM_ConjugationCheck)->Arg(2)->Arg(3);

void BM_NormEstimate(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto fl = to_float_matrix(OperatorExpr::toeplitz(random_symbol(2, rng), SpaceKind::Triangle),
                                  window(2, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm_estimate(fl.matrix));
}
BENCHMARK(BM_NormEstimate)->Arg(6)->Arg(12);

void BM_ProjectionRelation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_projection_relation(window(3, 5)));
}
BENCHMARK(BM_ProjectionRelation);

}  // namespace

BENCHMARK_MAIN();
