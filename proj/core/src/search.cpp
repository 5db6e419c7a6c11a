#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <mutex>
#include <set>
#include <system_error>
#include <thread>
#include <utility>

#include <json.hpp>

#include "primekit/sprp.hpp"
#include "primekit/verification.hpp"

namespace primekit {
namespace {

std::string utc_now_iso8601() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Nat64 parse_decimal(const nlohmann::json& j, const char* key, std::size_t line_no) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw CheckpointError("checkpoint line " + std::to_string(line_no) + ": missing string field '" + key + "'");
  }
  const std::string& s = it->get_ref<const std::string&>();
  Nat64 value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw CheckpointError("checkpoint line " + std::to_string(line_no) + ": bad integer in '" + key + "'");
  }
  return value;
}

std::set<std::size_t> load_checkpoint(const std::filesystem::path& path, const std::vector<ShardRange>& shards) {
  std::set<std::size_t> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      throw CheckpointError("checkpoint line " + std::to_string(line_no) + " is not a JSON object");
    }
    const ShardRange range{parse_decimal(j, "shard_start", line_no), parse_decimal(j, "shard_end", line_no)};
    if (!j.contains("completed_at") || !j["completed_at"].is_string()) {
      throw CheckpointError("checkpoint line " + std::to_string(line_no) + ": missing completed_at");
    }
    std::size_t index = shards.size();
    for (std::size_t i = 0; i < shards.size(); ++i) {
      if (shards[i] == range) {
        index = i;
        break;
      }
    }
    if (index == shards.size()) {
      throw CheckpointError("checkpoint line " + std::to_string(line_no) +
                            " names a shard outside this search's partition");
    }
    if (!done.insert(index).second) {
      throw CheckpointError("checkpoint line " + std::to_string(line_no) + " repeats a completed shard");
    }
  }
  return done;
}

void append_checkpoint(const std::filesystem::path& path, const ShardRange& shard) {
  nlohmann::ordered_json j;
  j["shard_start"] = std::to_string(shard.start);
  j["shard_end"] = std::to_string(shard.end);
  j["completed_at"] = utc_now_iso8601();
  const std::string line = j.dump() + "\n";

  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw std::system_error(errno, std::generic_category(), "open checkpoint " + path.string());
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t r = ::write(fd, line.data() + written, line.size() - written);
    if (r < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      throw std::system_error(err, std::generic_category(), "write checkpoint");
    }
    written += static_cast<std::size_t>(r);
  }
  if (::fsync(fd) != 0) {
    const int err = errno;
    ::close(fd);
    throw std::system_error(err, std::generic_category(), "fsync checkpoint");
  }
  ::close(fd);
}

std::vector<MismatchRecord> run_shard(const SearchConfig& config, const ShardRange& shard) {
  std::vector<MismatchRecord> out;
  Nat64 n = shard.start | 1u;
  while (n <= shard.end) {
    if (config.on_visit) config.on_visit(n);
    const Verdict v = run_algorithm(config.algo, n, config.options);
    const bool expected = reference_oracle64(n).is_prime();
    if (v.is_prime() != expected) out.push_back({n, config.algo, expected, v.is_prime(), v.stage});
    if (shard.end - n < 2) break;
    n += 2;
  }
  return out;
}

}  // namespace

std::vector<ShardRange> partition_range(Nat64 start, Nat64 end, std::size_t shard_count) {
  if (shard_count == 0) throw std::invalid_argument("shard count must be at least 1");
  if (end < start) throw std::invalid_argument("empty search range");
  using Wide = Nat128;
  const Wide length = Wide{end} - start + 1;
  const Wide shards = std::min<Wide>(shard_count, length);
  std::vector<ShardRange> out;
  out.reserve(static_cast<std::size_t>(shards));
  for (Wide i = 0; i < shards; ++i) {
    const Wide lo = start + length * i / shards;
    const Wide hi = start + length * (i + 1) / shards - 1;
    out.push_back({static_cast<Nat64>(lo), static_cast<Nat64>(hi)});
  }
  return out;
}

SearchResult search_counterexamples(const SearchConfig& config) {
  const std::vector<ShardRange> shards = partition_range(config.range_start, config.range_end, config.shard_count);
  SearchResult result;
  result.shards_total = shards.size();

  std::set<std::size_t> done;
  if (config.checkpoint) done = load_checkpoint(*config.checkpoint, shards);
  result.shards_resumed = done.size();

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < shards.size(); ++i) {
    if (!done.count(i)) pending.push_back(i);
  }
  if (config.max_shards != 0 && pending.size() > config.max_shards) pending.resize(config.max_shards);

  std::vector<std::vector<MismatchRecord>> per_shard(shards.size());
  std::atomic<std::size_t> next{0};
  std::mutex aggregate;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= pending.size()) return;
        const std::size_t index = pending[k];
        auto found = run_shard(config, shards[index]);
        std::lock_guard lock(aggregate);
        if (config.checkpoint) append_checkpoint(*config.checkpoint, shards[index]);
        if (config.on_mismatch) {
          for (const auto& m : found) config.on_mismatch(m);
        }
        per_shard[index] = std::move(found);
        ++result.shards_run;
      }
    } catch (...) {
      std::lock_guard lock(aggregate);
      if (!error) error = std::current_exception();
      next = pending.size();
    }
  };

  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (auto& part : per_shard) result.mismatches.insert(result.mismatches.end(), part.begin(), part.end());
  return result;
}

}  // namespace primekit
