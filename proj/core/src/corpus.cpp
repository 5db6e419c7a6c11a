#include <algorithm>

#include "primekit/verification.hpp"

namespace primekit {
namespace {

constexpr Stage mod8() { return {StageKind::Mod8EulerStep, 2, {}}; }
constexpr Stage sqrt_base_stage(Nat64 a) { return {StageKind::SqrtBaseStep, a, {}}; }
constexpr Stage reciprocity(FormSpec form, Nat64 p) { return {StageKind::ReciprocityStep, p, form}; }

ExpectedVerdict composite(Algorithm algo, std::optional<Stage> stage = std::nullopt) { return {algo, false, stage}; }
ExpectedVerdict prime(Algorithm algo) { return {algo, true, std::nullopt}; }

std::vector<ExpectedVerdict> all_composite(std::optional<Stage> ge_stage = std::nullopt) {
  return {composite(Algorithm::GaussEuler, ge_stage), composite(Algorithm::MrGe), composite(Algorithm::SevenBase),
          composite(Algorithm::FirstAttempt), composite(Algorithm::Oracle)};
}

std::string verdict_word(bool prime) { return prime ? "prime" : "composite"; }

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {341, {11, 31}, all_composite(mod8()), {}, {}, "base-2 Euler step rejects (341 = 5 mod 8, residue is not n-1)"},
      {561, {3, 11, 17}, all_composite(), {mod8()}, {}, "Carmichael number passing the base-2 Euler step"},
      {1729,
       {7, 13, 19},
       all_composite(),
       {},
       {{kForm4k1, 17, false}},
       "smallest absolute Euler pseudoprime; 4k+1 search skips 13 (symbol 0) and stops at 17"},
      {46657,
       {13, 37, 97},
       all_composite(reciprocity(kForm8k5, 5)),
       {mod8(), sqrt_base_stage(216), sqrt_base_stage(217), sqrt_base_stage(152), sqrt_base_stage(153)},
       {{kForm8k5, 5, false}},
       "absolute Euler pseudoprime passing every sqrt base, rejected by p1 = 5"},
      {172081,
       {7, 13, 31, 61},
       all_composite(sqrt_base_stage(294)),
       {mod8(), sqrt_base_stage(414), sqrt_base_stage(415), sqrt_base_stage(293)},
       {},
       "rejected by the fourth sqrt base [sqrt(n/2)]+1 = 294"},
      {6164578258027337,
       {64107089, 96160633},
       all_composite(reciprocity(kForm8k1, 17)),
       {mod8(), sqrt_base_stage(78514828), sqrt_base_stage(78514829), sqrt_base_stage(55518367),
        sqrt_base_stage(55518368), reciprocity(kForm8k5, 5)},
       {{kForm4k1, 5, true}, {kForm8k1, 17, false}},
       "passes base 2, all sqrt bases and a single 4k+1 check; needs the 8k+1 check (p2 = 17)"},
      {33077785078626881,
       {105004421, 315013261},
       {composite(Algorithm::GaussEuler), composite(Algorithm::MrGe), prime(Algorithm::SevenBase),
        composite(Algorithm::FirstAttempt), composite(Algorithm::Oracle)},
       {},
       {},
       "strong pseudoprime to the seven-base Miller-Rabin schedule"},
      {17364052083370132981ull,
       {548893, 1646677, 19211221},
       {composite(Algorithm::GaussEuler), composite(Algorithm::MrGe), composite(Algorithm::SevenBase),
        prime(Algorithm::FirstAttempt), composite(Algorithm::Oracle)},
       {},
       {},
       "defeats the first MR-GE design (bases 2, [sqrt n], [sqrt n]+1, [sqrt(n/2)], [sqrt(n/2)]+1 + 4k+1)"},
  };
  return entries;
}

bool CorpusReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CorpusCheck& c) { return c.passed; });
}

std::vector<CorpusReport> corpus_verify() {
  std::vector<CorpusReport> reports;
  for (const CorpusEntry& entry : corpus()) {
    CorpusReport report{entry.n, entry.provenance, {}};
    const Nat64 n = entry.n;

    Nat128 product = 1;
    bool factors_prime = true;
    for (const Nat64 f : entry.factors) {
      product *= f;
      factors_prime = factors_prime && is_small_prime(f);
    }
    report.checks.push_back({"factorization multiplies back to n with prime factors",
                             factors_prime && product == n, ""});

    for (const ExpectedVerdict& expected : entry.expected) {
      const Verdict v = run_algorithm(expected.algo, n);
      bool ok = v.is_prime() == expected.prime;
      std::string detail = "got " + verdict_word(v.is_prime()) + " at " + to_string(v.stage);
      if (expected.stage) ok = ok && v.stage == *expected.stage;
      std::string what = std::string(name(expected.algo)) + " -> " + verdict_word(expected.prime);
      if (expected.stage) what += " at " + to_string(*expected.stage);
      report.checks.push_back({what, ok, detail});
    }

    if (!entry.gauss_euler_passes.empty()) {
      Trace trace;
      gauss_euler(n, {}, &trace);
      for (const Stage& stage : entry.gauss_euler_passes) {
        const bool ok = std::any_of(trace.steps.begin(), trace.steps.end(),
                                    [&](const TraceStep& s) { return s.stage == stage && s.passed; });
        report.checks.push_back({"gauss_euler passes " + to_string(stage), ok, ""});
      }
    }

    for (const ExpectedSearch& s : entry.searches) {
      const auto found = smallest_nonresidue_prime(n, s.form, DivisorPolicy::Skip);
      const bool found_ok = found.kind == NonresidueSearchResult::Kind::Found && found.prime == s.prime;
      const bool minus_one = powmod<Nat64>(s.prime, (n - 1) / 2, n) == n - 1;
      report.checks.push_back({"smallest " + to_string(s.form) + " prime with (n/p) = -1 is " + std::to_string(s.prime),
                               found_ok, "found " + std::to_string(found.prime)});
      report.checks.push_back({std::to_string(s.prime) + "^((n-1)/2) " + (s.euler_minus_one ? "=" : "!=") + " -1 mod n",
                               minus_one == s.euler_minus_one, ""});
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace primekit
