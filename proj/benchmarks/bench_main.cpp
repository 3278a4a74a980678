#include <benchmark/benchmark.h>

#include "spinhecke/characters.hpp"
#include "spinhecke/spin_hecke.hpp"
#include "spinhecke/symfunc.hpp"
#include "spinhecke/tensor_oracle.hpp"
#include "spinhecke/traces.hpp"
#include "spinhecke/verify.hpp"

#include <random>

using namespace spinhecke;

static void BM_Multiply(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  AlgebraElement a = random_element(n, rng, 4), b = random_element(n, rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->DenseRange(3, 6);

// cold cache: every iteration reduces the whole standard-element family
static void BM_ReduceStandard(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_reduction_cache();
    for (const auto &mu : enumerate_partitions(n)) benchmark::DoNotOptimize(reduce(build_T_w(Composition(mu.parts()))));
  }
}
BENCHMARK(BM_ReduceStandard)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_ReduceRandom(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    clear_reduction_cache();
    for (int k = 0; k < 20; ++k) benchmark::DoNotOptimize(reduce_term(random_basis_term(n, rng)));
  }
}
BENCHMARK(BM_ReduceRandom)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

// uncached table assembly from the g~ traces
static void BM_CharacterTable(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<SymPoly> traces;
    for (const auto &nu : odd_partitions(n)) traces.push_back(g_tilde(nu, n));
    benchmark::DoNotOptimize(table_from_traces(n, traces));
  }
}
BENCHMARK(BM_CharacterTable)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_OracleTable(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_characters(n));
}
BENCHMARK(BM_OracleTable)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SpinGimel(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(gimel_minus({2, 1, 3, 2, 3, 1}, 4));
}
BENCHMARK(BM_SpinGimel)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
