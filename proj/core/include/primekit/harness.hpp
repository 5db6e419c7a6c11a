#pragma once

// Benchmark sets and the timing runner for comparing the 64-bit tests.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "primekit/algorithms.hpp"

namespace primekit {

inline constexpr std::size_t kBenchSetSize = 100000;

struct BenchSet {
  int id = 0;
  std::string description;
  std::vector<Nat64> values;
  // Every value is prime by construction (sets 2 and 4).
  bool all_prime = false;
};

/// Set 1: odd 1..199999. Set 2: the first 100000 primes (2..1299709).
/// Set 3: odd 10^18+1..10^18+199999. Set 4: the first 100000 primes from
/// 10^18+3 upward, found with reference_oracle64.
/// Throws std::invalid_argument for id outside 1..4.
BenchSet generate_set(int id);

/// Differences between a generated set and its expected endpoints and size
/// (empty when it matches).
std::vector<std::string> validate_set(const BenchSet& set);

struct BenchResult {
  int set_id = 0;
  Algorithm algo = Algorithm::GaussEuler;
  int reps = 0;
  double median_seconds = 0.0;
  double ns_per_call = 0.0;
  std::size_t primes = 0;
  std::size_t composites = 0;
};

/// True for the algorithms the timing comparison covers: gauss_euler,
/// mr_ge, seven_base_variant.
bool is_benchmarkable(Algorithm algo) noexcept;

/// One discarded warm-up pass, then `reps` timed passes over the set on a
/// monotonic clock; reports the median. Throws std::invalid_argument for
/// reps < 1 or an algorithm outside is_benchmarkable.
BenchResult run_bench(const BenchSet& set, Algorithm algo, int reps = 3);

inline constexpr const char* kBenchCsvHeader = "set,algo,reps,median_seconds,ns_per_call,primes,composites";

std::string to_csv_row(const BenchResult& result);

}  // namespace primekit
