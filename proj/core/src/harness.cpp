#include "primekit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "primekit/sprp.hpp"
#include "primekit/verification.hpp"

namespace primekit {
namespace {

constexpr Nat64 kNineteenDigitBase = 1000000000000000000ull;

struct ExpectedSet {
  Nat64 first;
  Nat64 last;
};

constexpr ExpectedSet kExpectedSets[] = {
    {1, 199999},
    {2, 1299709},
    {kNineteenDigitBase + 1, kNineteenDigitBase + 199999},
    {1000000000000000003ull, 1000000000004133179ull},
};

std::vector<Nat64> odd_run(Nat64 first) {
  std::vector<Nat64> out(kBenchSetSize);
  for (std::size_t i = 0; i < kBenchSetSize; ++i) out[i] = first + 2 * i;
  return out;
}

}  // namespace

BenchSet generate_set(int id) {
  BenchSet set;
  set.id = id;
  switch (id) {
    case 1:
      set.description = "the smallest 100000 odd numbers (1..199999)";
      set.values = odd_run(1);
      break;
    case 2: {
      set.description = "the smallest 100000 primes (2..1299709)";
      set.all_prime = true;
      auto primes = PrimeSieve(kExpectedSets[1].last).primes();
      primes.resize(std::min(primes.size(), kBenchSetSize));
      set.values = std::move(primes);
      break;
    }
    case 3:
      set.description = "100000 odd 19-digit numbers (10^18+1..10^18+199999)";
      set.values = odd_run(kNineteenDigitBase + 1);
      break;
    case 4:
      set.description = "100000 19-digit primes from 10^18+3";
      set.all_prime = true;
      set.values.reserve(kBenchSetSize);
      for (Nat64 n = kNineteenDigitBase + 1; set.values.size() < kBenchSetSize; n += 2) {
        if (reference_oracle64(n).is_prime()) set.values.push_back(n);
      }
      break;
    default:
      throw std::invalid_argument("bench set id must be 1..4, got " + std::to_string(id));
  }
  return set;
}

std::vector<std::string> validate_set(const BenchSet& set) {
  std::vector<std::string> problems;
  if (set.id < 1 || set.id > 4) return {"unknown set id " + std::to_string(set.id)};
  const ExpectedSet& expected = kExpectedSets[set.id - 1];
  if (set.values.size() != kBenchSetSize) {
    problems.push_back("expected " + std::to_string(kBenchSetSize) + " values, generated " +
                       std::to_string(set.values.size()));
  }
  if (set.values.empty()) return problems;
  if (set.values.front() != expected.first) {
    problems.push_back("first value " + std::to_string(set.values.front()) + " != " + std::to_string(expected.first));
  }
  if (set.values.back() != expected.last) {
    problems.push_back("last value " + std::to_string(set.values.back()) + " != " + std::to_string(expected.last));
  }
  return problems;
}

bool is_benchmarkable(Algorithm algo) noexcept {
  return algo == Algorithm::GaussEuler || algo == Algorithm::MrGe || algo == Algorithm::SevenBase;
}

BenchResult run_bench(const BenchSet& set, Algorithm algo, int reps) {
  if (reps < 1) throw std::invalid_argument("repetitions must be at least 1");
  if (!is_benchmarkable(algo)) {
    throw std::invalid_argument("algorithm " + std::string(name(algo)) + " is not part of the timing comparison");
  }
  BenchResult result;
  result.set_id = set.id;
  result.algo = algo;
  result.reps = reps;

  auto pass = [&] {
    std::size_t primes = 0;
    for (const Nat64 n : set.values) primes += run_algorithm(algo, n).is_prime() ? 1 : 0;
    return primes;
  };

  result.primes = pass();  // warm-up, also the verdict side-check
  result.composites = set.values.size() - result.primes;

  std::vector<double> seconds;
  seconds.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t primes = pass();
    const auto t1 = std::chrono::steady_clock::now();
    if (primes != result.primes) throw std::logic_error("verdicts changed between benchmark passes");
    seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(seconds.begin(), seconds.end());
  const std::size_t mid = seconds.size() / 2;
  result.median_seconds = seconds.size() % 2 == 1 ? seconds[mid] : (seconds[mid - 1] + seconds[mid]) / 2;
  result.ns_per_call = set.values.empty() ? 0.0 : result.median_seconds * 1e9 / static_cast<double>(set.values.size());
  return result;
}

std::string to_csv_row(const BenchResult& r) {
  std::ostringstream out;
  out << r.set_id << ',' << name(r.algo) << ',' << r.reps << ',' << r.median_seconds << ',' << r.ns_per_call << ','
      << r.primes << ',' << r.composites;
  return out.str();
}

}  // namespace primekit
