#pragma once

// Ground truth and systematic cross-checks: a sieve, the worked-example
// corpus, exhaustive and random sweeps, and a resumable sharded search for
// counterexamples.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primekit/algorithms.hpp"

namespace primekit {

// ---------------------------------------------------------------------------
// Sieve

/// Odd-only Sieve of Eratosthenes over [0, limit].
class PrimeSieve {
 public:
  static constexpr std::size_t kDefaultMaxBytes = std::size_t{1} << 30;

  /// Throws std::length_error if the bitmap would exceed `max_bytes`.
  explicit PrimeSieve(Nat64 limit, std::size_t max_bytes = kDefaultMaxBytes);

  Nat64 limit() const noexcept { return limit_; }
  bool is_prime(Nat64 n) const;
  std::size_t count() const noexcept { return count_; }
  std::vector<Nat64> primes() const;

 private:
  Nat64 limit_;
  std::size_t count_ = 0;
  std::vector<bool> odd_composite_;  // index i <-> 2i+1
};

// ---------------------------------------------------------------------------
// Mismatches

struct MismatchRecord {
  Nat64 n = 0;
  Algorithm algo = Algorithm::GaussEuler;
  bool expected_prime = false;
  bool actual_prime = false;
  Stage stage;

  friend bool operator==(const MismatchRecord&, const MismatchRecord&) = default;
};

/// {"n": "<decimal>", "algo": ..., "expected": "prime"|"composite",
///  "actual": ..., "stage": ...} on a single line, no trailing newline.
std::string to_json_line(const MismatchRecord& record);

/// Checks n = 2 and every odd n in [3, limit] against a sieve.
std::vector<MismatchRecord> exhaustive_verify(Algorithm algo, Nat64 limit, unsigned jobs = 1,
                                              const TestOptions& options = {});

/// Same as above against an existing sieve (limit <= sieve.limit()).
std::vector<MismatchRecord> exhaustive_verify(Algorithm algo, const PrimeSieve& sieve, Nat64 limit,
                                              unsigned jobs = 1, const TestOptions& options = {});

/// `count` odd integers uniform over [3, 2^64): std::mt19937_64 seeded with
/// `seed`, each draw forced odd, draws below 3 rejected.
std::vector<Nat64> draw_random_odd(std::size_t count, std::uint64_t seed);

/// Compares `algo` with reference_oracle64 on the given values. Results keep
/// the input order.
std::vector<MismatchRecord> verify_values(Algorithm algo, std::span<const Nat64> values, unsigned jobs = 1,
                                          const TestOptions& options = {});

std::vector<MismatchRecord> random_verify(Algorithm algo, std::size_t count, std::uint64_t seed, unsigned jobs = 1,
                                          const TestOptions& options = {});

// ---------------------------------------------------------------------------
// Corpus

struct ExpectedVerdict {
  Algorithm algo;
  bool prime;
  std::optional<Stage> stage;  // where the rejecting step is documented
};

/// Known auxiliary-prime search outcome under the skip policy.
struct ExpectedSearch {
  FormSpec form;
  Nat64 prime;
  bool euler_minus_one;  // whether prime^((n-1)/2) = n-1
};

struct CorpusEntry {
  Nat64 n;
  std::vector<Nat64> factors;  // prime factorization, with multiplicity
  std::vector<ExpectedVerdict> expected;
  std::vector<Stage> gauss_euler_passes;  // steps Gauss-Euler must pass
  std::vector<ExpectedSearch> searches;
  std::string provenance;
};

const std::vector<CorpusEntry>& corpus();

struct CorpusCheck {
  std::string description;
  bool passed;
  std::string detail;
};

struct CorpusReport {
  Nat64 n;
  std::string provenance;
  std::vector<CorpusCheck> checks;

  bool passed() const noexcept;
};

std::vector<CorpusReport> corpus_verify();

// ---------------------------------------------------------------------------
// Sharded counterexample search

/// The checkpoint file cannot be trusted; resuming is refused.
class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShardRange {
  Nat64 start;
  Nat64 end;  // inclusive

  friend bool operator==(const ShardRange&, const ShardRange&) = default;
};

/// Splits [start, end] into `shard_count` contiguous, nearly equal shards
/// (fewer when the range is shorter than shard_count).
std::vector<ShardRange> partition_range(Nat64 start, Nat64 end, std::size_t shard_count);

struct SearchConfig {
  Algorithm algo = Algorithm::GaussEuler;
  Nat64 range_start = 3;
  Nat64 range_end = 3;
  std::size_t shard_count = 1;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> checkpoint;
  // Run at most this many not-yet-completed shards, then stop (0 = all).
  std::size_t max_shards = 0;
  TestOptions options;
  // Called for every odd n examined. May run concurrently when jobs > 1.
  std::function<void(Nat64)> on_visit;
  // Called with each mismatch as soon as its shard finishes, serialized.
  std::function<void(const MismatchRecord&)> on_mismatch;
};

struct SearchResult {
  std::vector<MismatchRecord> mismatches;
  std::size_t shards_total = 0;
  std::size_t shards_resumed = 0;  // skipped, already in the checkpoint
  std::size_t shards_run = 0;
  bool complete() const noexcept { return shards_resumed + shards_run == shards_total; }
};

/// Runs the algorithm against reference_oracle64 on every odd n in the range.
/// Completed shards are appended to the checkpoint (JSON lines
/// {"shard_start", "shard_end", "completed_at"}, fsync'd) and skipped on a
/// later run. Throws std::invalid_argument for shard_count == 0 or an empty
/// range, CheckpointError for an unreadable or foreign checkpoint.
SearchResult search_counterexamples(const SearchConfig& config);

}  // namespace primekit
