#include <benchmark/benchmark.h>

#include <map>

#include "primekit/bigrecipes.hpp"
#include "primekit/harness.hpp"

namespace {

using namespace primekit;

const BenchSet& cached_set(int id) {
  static std::map<int, BenchSet> sets;
  auto it = sets.find(id);
  if (it == sets.end()) it = sets.emplace(id, generate_set(id)).first;
  return it->second;
}

// One iteration = one full pass over a benchmark set.
void BM_Set(benchmark::State& state, Algorithm algo) {
  const BenchSet& set = cached_set(static_cast<int>(state.range(0)));
  std::size_t primes = 0;
  for (auto _ : state) {
    primes = 0;
    for (const Nat64 n : set.values) primes += run_algorithm(algo, n).is_prime();
    benchmark::DoNotOptimize(primes);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * set.values.size()));
  state.counters["primes"] = static_cast<double>(primes);
}

BENCHMARK_CAPTURE(BM_Set, gauss_euler, Algorithm::GaussEuler)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Set, seven_base_variant, Algorithm::SevenBase)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Set, mr_ge, Algorithm::MrGe)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Mulmod(benchmark::State& state) {
  Nat64 x = 0x9E3779B97F4A7C15ull;
  const Nat64 m = 18446744073709551557ull;
  for (auto _ : state) {
    x = mulmod(x, x | 1, m);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Mulmod);

void BM_Recipe(benchmark::State& state, const Recipe& (*definition)()) {
  BigNat p;
  const BigNat start = BigNat(1) << static_cast<unsigned long>(state.range(0) - 1);
  mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
  for (auto _ : state) benchmark::DoNotOptimize(run_recipe(definition(), p).outcome);
}
BENCHMARK_CAPTURE(BM_Recipe, recipe256, recipe256_definition)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Recipe, recipe2048, recipe2048_definition)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
