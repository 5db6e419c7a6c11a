#include "primekit/verification.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "parallel.hpp"
#include "primekit/sprp.hpp"

namespace primekit {

std::string to_json_line(const MismatchRecord& record) {
  nlohmann::ordered_json j;
  j["n"] = std::to_string(record.n);
  j["algo"] = std::string(name(record.algo));
  j["expected"] = record.expected_prime ? "prime" : "composite";
  j["actual"] = record.actual_prime ? "prime" : "composite";
  j["stage"] = to_string(record.stage);
  return j.dump();
}

std::vector<MismatchRecord> exhaustive_verify(Algorithm algo, const PrimeSieve& sieve, Nat64 limit, unsigned jobs,
                                              const TestOptions& options) {
  if (limit > sieve.limit()) throw std::invalid_argument("exhaustive_verify: limit exceeds the sieve");
  std::vector<MismatchRecord> mismatches;
  auto check = [&](Nat64 n, std::vector<MismatchRecord>& out) {
    const Verdict v = run_algorithm(algo, n, options);
    const bool expected = sieve.is_prime(n);
    if (v.is_prime() != expected) out.push_back({n, algo, expected, v.is_prime(), v.stage});
  };
  if (limit >= 2) check(2, mismatches);
  if (limit < 3) return mismatches;

  const std::size_t odd_count = (limit - 1) / 2;  // 3, 5, ..., limit
  std::vector<std::vector<MismatchRecord>> per_worker(std::max(1u, jobs));
  detail::parallel_blocks(odd_count, jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i) check(3 + 2 * static_cast<Nat64>(i), per_worker[w]);
  });
  for (auto& part : per_worker) mismatches.insert(mismatches.end(), part.begin(), part.end());
  std::sort(mismatches.begin(), mismatches.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  return mismatches;
}

std::vector<MismatchRecord> exhaustive_verify(Algorithm algo, Nat64 limit, unsigned jobs, const TestOptions& options) {
  const PrimeSieve sieve(limit);
  return exhaustive_verify(algo, sieve, limit, jobs, options);
}

std::vector<Nat64> draw_random_odd(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Nat64> out;
  out.reserve(count);
  while (out.size() < count) {
    const Nat64 x = gen() | 1u;
    if (x >= 3) out.push_back(x);
  }
  return out;
}

std::vector<MismatchRecord> verify_values(Algorithm algo, std::span<const Nat64> values, unsigned jobs,
                                          const TestOptions& options) {
  std::vector<std::vector<std::pair<std::size_t, MismatchRecord>>> per_worker(std::max(1u, jobs));
  detail::parallel_blocks(values.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i) {
      const Nat64 n = values[i];
      const Verdict v = run_algorithm(algo, n, options);
      const bool expected = reference_oracle64(n).is_prime();
      if (v.is_prime() != expected) per_worker[w].push_back({i, {n, algo, expected, v.is_prime(), v.stage}});
    }
  });
  std::vector<std::pair<std::size_t, MismatchRecord>> merged;
  for (auto& part : per_worker) merged.insert(merged.end(), part.begin(), part.end());
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MismatchRecord> out;
  out.reserve(merged.size());
  for (auto& [index, record] : merged) out.push_back(record);
  return out;
}

std::vector<MismatchRecord> random_verify(Algorithm algo, std::size_t count, std::uint64_t seed, unsigned jobs,
                                          const TestOptions& options) {
  const std::vector<Nat64> values = draw_random_odd(count, seed);
  return verify_values(algo, values, jobs, options);
}

}  // namespace primekit
