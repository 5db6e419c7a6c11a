#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "primekit/bigrecipes.hpp"
#include "primekit/harness.hpp"
#include "primekit/verification.hpp"

namespace primekit::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Nat64 parse_plain(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  Nat64 value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec == std::errc::invalid_argument || end != text.data() + text.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  if (ec == std::errc::result_out_of_range) {
    throw std::invalid_argument("integer '" + std::string(text) + "' does not fit in 64 bits");
  }
  return value;
}

Algorithm require_algorithm(const std::string& text) {
  if (const auto algo = parse_algorithm(text)) return *algo;
  throw UsageError("unknown algorithm '" + text + "' (expected ge, mrge, mr7, first, oracle)");
}

Nat64 require_nat64(const std::string& text, const char* what) {
  try {
    return parse_nat64(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

TestOptions options_from_environment() {
  TestOptions options;
  if (const char* cap = std::getenv("PRIME_SEARCH_CAP"); cap != nullptr && *cap != '\0') {
    const Nat64 value = require_nat64(cap, "PRIME_SEARCH_CAP");
    if (value == 0) throw UsageError("PRIME_SEARCH_CAP must be positive");
    options.search_cap = static_cast<std::size_t>(value);
  }
  return options;
}

void print_mismatches(const std::vector<MismatchRecord>& mismatches, std::ostream& out) {
  for (const auto& m : mismatches) out << to_json_line(m) << '\n';
}

// ---------------------------------------------------------------------------

struct TestArgs {
  std::string n;
  std::string algo = "ge";
  bool trace = false;
  bool full_trace = false;
};

int cmd_test(const TestArgs& args, std::ostream& out) {
  const Nat64 n = require_nat64(args.n, "N");
  const Algorithm algo = require_algorithm(args.algo);
  const bool traceable = algo == Algorithm::GaussEuler || algo == Algorithm::MrGe || algo == Algorithm::FirstAttempt;
  Trace trace;
  trace.continue_after_failure = args.full_trace;
  const bool want_trace = (args.trace || args.full_trace) && traceable;
  const Verdict v = run_algorithm(algo, n, options_from_environment(), want_trace ? &trace : nullptr);
  out << to_string(v.outcome) << '\n';
  out << "stage: " << to_string(v.stage) << '\n';
  if (v.witness) out << "witness: " << *v.witness << '\n';
  if (args.trace || args.full_trace) {
    if (!traceable) {
      out << "trace: not available for " << name(algo) << '\n';
    } else {
      out << "trace:\n";
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        out << "  " << (i + 1) << ". " << to_string(s.stage) << " residue=" << s.residue << ' '
            << (s.passed ? "pass" : "FAIL") << '\n';
      }
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string algo;
  std::string limit;
  std::string random;
  std::string seed = "0";
  unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const Algorithm algo = require_algorithm(args.algo);
  const TestOptions options = options_from_environment();
  if (args.limit.empty() == args.random.empty()) throw UsageError("verify needs exactly one of --limit or --random");
  std::vector<MismatchRecord> mismatches;
  std::string scope;
  if (!args.limit.empty()) {
    const Nat64 limit = require_nat64(args.limit, "--limit");
    scope = "n <= " + std::to_string(limit) + " against the sieve";
    try {
      const PrimeSieve sieve(limit);
      mismatches = exhaustive_verify(algo, sieve, limit, args.jobs, options);
    } catch (const std::length_error& e) {
      throw UsageError(e.what());
    }
  } else {
    const Nat64 count = require_nat64(args.random, "--random");
    const Nat64 seed = require_nat64(args.seed, "--seed");
    mismatches = random_verify(algo, static_cast<std::size_t>(count), seed, args.jobs, options);
    scope = std::to_string(count) + " random odd values (seed " + std::to_string(seed) + ") against the oracle";
  }
  print_mismatches(mismatches, out);
  err << name(algo) << ": " << scope << ", " << mismatches.size() << " mismatches\n";
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

struct BenchArgs {
  int set = 0;
  std::string algo;
  int reps = 3;
  bool csv = false;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  const Algorithm algo = require_algorithm(args.algo);
  if (!is_benchmarkable(algo)) throw UsageError("bench supports ge, mrge and mr7 only");
  if (args.reps < 1) throw UsageError("--reps must be at least 1");
  const BenchSet set = generate_set(args.set);
  int status = kExitOk;
  for (const std::string& problem : validate_set(set)) {
    err << "set " << set.id << ": " << problem << '\n';
    status = kExitMismatch;
  }
  const BenchResult result = run_bench(set, algo, args.reps);
  if (set.all_prime && result.primes != set.values.size()) {
    err << "set " << set.id << ": " << name(algo) << " reported " << result.composites << " composites in a prime set\n";
    status = kExitMismatch;
  }
  if (args.csv) {
    out << kBenchCsvHeader << '\n' << to_csv_row(result) << '\n';
  } else {
    out << "set " << set.id << " (" << set.description << ")\n"
        << "  " << name(algo) << ": median " << std::fixed << std::setprecision(4) << result.median_seconds << " s over "
        << result.reps << " reps, " << std::setprecision(1) << result.ns_per_call << " ns/call, " << result.primes
        << " prime / " << result.composites << " composite\n";
  }
  return status;
}

struct SearchArgs {
  std::string algo;
  std::string from;
  std::string to;
  unsigned jobs = 1;
  std::size_t shards = 64;
  std::string checkpoint;
  bool restart = false;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchConfig config;
  config.algo = require_algorithm(args.algo);
  config.range_start = require_nat64(args.from, "--from");
  config.range_end = require_nat64(args.to, "--to");
  if (config.range_end < config.range_start) throw UsageError("--to must not be below --from");
  if (args.shards == 0) throw UsageError("--shards must be at least 1");
  config.shard_count = args.shards;
  config.jobs = std::max(1u, args.jobs);
  config.options = options_from_environment();
  if (!args.checkpoint.empty()) {
    config.checkpoint = args.checkpoint;
    if (args.restart) std::filesystem::remove(args.checkpoint);
  }
  config.on_mismatch = [&](const MismatchRecord& m) { out << to_json_line(m) << '\n' << std::flush; };
  SearchResult result;
  try {
    result = search_counterexamples(config);
  } catch (const CheckpointError& e) {
    throw UsageError(std::string(e.what()) + "; rerun with --restart to discard the checkpoint");
  }
  err << "search: " << result.shards_run << " shards run, " << result.shards_resumed << " resumed of "
      << result.shards_total << ", " << result.mismatches.size() << " mismatches\n";
  return result.mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_corpus(std::ostream& out) {
  bool all = true;
  for (const CorpusReport& report : corpus_verify()) {
    out << report.n << ": " << report.provenance << '\n';
    for (const CorpusCheck& check : report.checks) {
      out << "  [" << (check.passed ? "ok" : "FAIL") << "] " << check.description;
      if (!check.passed && !check.detail.empty()) out << " (" << check.detail << ')';
      out << '\n';
    }
    all = all && report.passed();
  }
  return all ? kExitOk : kExitMismatch;
}

struct BigtestArgs {
  std::string n;
  std::string recipe;
};

int cmd_bigtest(const BigtestArgs& args, std::ostream& out) {
  BigNat n;
  try {
    n = parse_bignat(args.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("N: ") + e.what());
  }
  const Recipe* recipe = nullptr;
  if (args.recipe == "256") {
    recipe = &recipe256_definition();
  } else if (args.recipe == "2048") {
    recipe = &recipe2048_definition();
  } else {
    throw UsageError("--recipe must be 256 or 2048");
  }
  const BigVerdict v = run_recipe(*recipe, n, options_from_environment());
  out << to_string(v.outcome) << '\n'
      << "stage: " << to_string(v.stage) << '\n'
      << "recipe: " << recipe->name << " v" << recipe->version << '\n';
  return kExitOk;
}

}  // namespace

Nat64 parse_nat64(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return parse_plain(text);
  const Nat64 base = parse_plain(text.substr(0, caret));
  const Nat64 exponent = parse_plain(text.substr(caret + 1));
  Nat128 value = 1;
  for (Nat64 i = 0; i < exponent; ++i) {
    value *= base;
    if (value > ~Nat64{0}) throw std::invalid_argument("integer '" + std::string(text) + "' does not fit in 64 bits");
    if (base <= 1) break;
  }
  if (exponent > 0 && base == 0) value = 0;
  return static_cast<Nat64>(value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"primekit: Gauss-Euler / MR-GE primality tests, verification and benchmarks", "primekit"};
  app.require_subcommand(1, 1);

  TestArgs test_args;
  auto* test = app.add_subcommand("test", "test one 64-bit integer");
  test->add_option("N", test_args.n, "integer to test")->required();
  test->add_option("--algo", test_args.algo, "ge | mrge | mr7 | first | oracle")->capture_default_str();
  test->add_flag("--trace", test_args.trace, "print the evaluated steps");
  test->add_flag("--full-trace", test_args.full_trace, "keep evaluating steps after the first failure");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "compare an algorithm with ground truth");
  verify->add_option("--algo", verify_args.algo, "algorithm")->required();
  verify->add_option("--limit", verify_args.limit, "exhaustive check of odd n <= LIMIT against a sieve");
  verify->add_option("--random", verify_args.random, "check COUNT random odd 64-bit integers");
  verify->add_option("--seed", verify_args.seed, "seed for --random")->capture_default_str();
  verify->add_option("--jobs", verify_args.jobs, "worker threads")->capture_default_str();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time an algorithm over a benchmark set");
  bench->add_option("--set", bench_args.set, "set id 1..4")->required()->check(CLI::Range(1, 4));
  bench->add_option("--algo", bench_args.algo, "ge | mrge | mr7")->required();
  bench->add_option("--reps", bench_args.reps, "timed repetitions")->capture_default_str();
  bench->add_flag("--csv", bench_args.csv, "CSV output");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "sharded counterexample search against the oracle");
  search->add_option("--algo", search_args.algo, "algorithm")->required();
  search->add_option("--from", search_args.from, "range start")->required();
  search->add_option("--to", search_args.to, "range end (inclusive)")->required();
  search->add_option("--jobs", search_args.jobs, "worker threads")->capture_default_str();
  search->add_option("--shards", search_args.shards, "number of shards")->capture_default_str();
  search->add_option("--checkpoint", search_args.checkpoint, "JSON-lines checkpoint file for resuming");
  search->add_flag("--restart", search_args.restart, "discard an existing checkpoint");

  auto* corpus_cmd = app.add_subcommand("corpus", "check the worked-example corpus");

  BigtestArgs big_args;
  auto* bigtest = app.add_subcommand("bigtest", "run a big-integer recipe");
  bigtest->add_option("N", big_args.n, "decimal or 0x-hex integer")->required();
  bigtest->add_option("--recipe", big_args.recipe, "256 | 2048")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*test) return cmd_test(test_args, out);
    if (*verify) return cmd_verify(verify_args, out, err);
    if (*bench) return cmd_bench(bench_args, out, err);
    if (*search) return cmd_search(search_args, out, err);
    if (*corpus_cmd) return cmd_corpus(out);
    if (*bigtest) return cmd_bigtest(big_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace primekit::cli
