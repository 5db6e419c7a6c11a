#include "primekit/detprime64.hpp"

#include <array>
#include <utility>

#include "primekit/sprp.hpp"

namespace primekit {
namespace {

constexpr Nat64 kSmallScreenBound = 100;

/// Records steps and remembers the first failure. In short-circuit mode the
/// caller stops as soon as `record` returns false.
class StepRunner {
 public:
  explicit StepRunner(Trace* trace) : trace_(trace) {}

  bool record(const Stage& stage, Nat64 residue, bool passed, std::optional<Nat64> witness) {
    last_ = stage;
    if (trace_ != nullptr) trace_->steps.push_back({stage, residue, passed});
    if (!passed && !failure_) failure_ = make_composite(stage, witness);
    return passed || (trace_ != nullptr && trace_->continue_after_failure);
  }

  bool failed() const noexcept { return failure_.has_value(); }
  bool tracing() const noexcept { return trace_ != nullptr; }

  Verdict finish() const {
    if (failure_) return *failure_;
    return Verdict{Outcome::Prime, last_, std::nullopt};
  }

 private:
  Trace* trace_;
  std::optional<Verdict> failure_;
  Stage last_;
};

Verdict decided(Outcome outcome, Stage stage, Trace* trace, std::optional<Nat64> witness = std::nullopt) {
  if (trace != nullptr) trace->steps.push_back({stage, 0, outcome != Outcome::Composite});
  return Verdict{outcome, stage, outcome == Outcome::Composite ? witness : std::nullopt};
}

Verdict trial_division_verdict(Nat64 n, Trace* trace) {
  const Stage stage{StageKind::SmallPrimeScreen, n, {}};
  if (is_small_prime(n)) return decided(Outcome::Prime, stage, trace);
  Nat64 d = 2;
  while (n % d != 0) ++d;
  return decided(Outcome::Composite, stage, trace, d);
}

/// n < 2 or even n (other than 2).
std::optional<Verdict> unit_or_even(Nat64 n, Trace* trace) {
  if (n == 2) return decided(Outcome::Prime, {StageKind::SmallPrimeScreen, 2, {}}, trace);
  if (n < 2 || !is_odd(n)) {
    return decided(Outcome::Composite, {StageKind::EvenOrUnit, n, {}}, trace,
                   n < 2 ? std::nullopt : std::optional<Nat64>{2});
  }
  return std::nullopt;
}

Nat64 signed_residue(int sign, Nat64 n) { return sign > 0 ? Nat64{1} : n - 1; }

/// Searches `form` for the auxiliary prime and runs its Euler check against
/// the sign reciprocity dictates. Returns false when the runner should stop.
/// Reaching n itself proves n prime by trial division and ends the test.
bool reciprocity_step(StepRunner& run, Nat64 n, const FormSpec& form, const TestOptions& options) {
  const auto search = smallest_nonresidue_prime(n, form, options.divisor_policy, options.search_cap);
  using Kind = NonresidueSearchResult::Kind;
  switch (search.kind) {
    case Kind::Exhausted:
      if (run.failed()) return false;
      throw SearchExhausted(std::to_string(n), form, options.search_cap);
    case Kind::DivisorFound:
      return run.record({StageKind::DivisorFound, search.prime, {}}, 0, false, search.prime);
    case Kind::ReachedInput:
      run.record({StageKind::ReciprocityStep, search.prime, form}, 0, true, std::nullopt);
      return false;
    case Kind::Found:
      break;
  }
  const Nat64 p = search.prime;
  const Nat64 expected = signed_residue(reciprocity_expected_sign(p % 4, n % 4), n);
  const Nat64 residue = powmod<Nat64>(p, (n - 1) / 2, n);
  return run.record({StageKind::ReciprocityStep, p, form}, residue, residue == expected, p);
}

bool mr_step(StepRunner& run, Nat64 n, Nat64 a, const Decomposition& d) {
  const bool pass = sprp_round(n, a, d);
  const Nat64 residue = run.tracing() ? powmod(a, d.t, n) : 0;
  return run.record({StageKind::MRRound, a, {}}, residue, pass, a);
}

}  // namespace

EulerCheck euler_criterion_check(Nat64 n, Nat64 a) {
  const Nat64 r = powmod<Nat64>(a, (n - 1) / 2, n);
  if (r == 1) return {EulerClass::PlusOne, r};
  if (r == n - 1) return {EulerClass::MinusOne, r};
  return {EulerClass::Other, r};
}

Verdict gauss_euler(Nat64 n, const TestOptions& options, Trace* trace) {
  if (auto v = unit_or_even(n, trace)) return *v;
  if (n < kSmallScreenBound) return trial_division_verdict(n, trace);

  StepRunner run(trace);
  const Nat64 half = (n - 1) / 2;

  const Nat64 two = powmod<Nat64>(2, half, n);
  if (!run.record({StageKind::Mod8EulerStep, 2, {}}, two, two == signed_residue(theorem1_expected_sign(n), n), 2)) {
    return run.finish();
  }

  const Nat64 root = isqrt(n);
  const Nat64 half_root = isqrt(n / 2);
  for (const Nat64 a : {root, root + 1, half_root, half_root + 1}) {
    const EulerCheck check = euler_criterion_check(n, a);
    if (!run.record({StageKind::SqrtBaseStep, a, {}}, check.residue, check.kind != EulerClass::Other, a)) {
      return run.finish();
    }
  }

  for (const FormSpec& form : {kForm8k5, kForm8k1}) {
    if (!reciprocity_step(run, n, form, options)) break;
  }
  return run.finish();
}

Verdict mr_ge(Nat64 n, const TestOptions& options, Trace* trace) {
  if (auto v = unit_or_even(n, trace)) return *v;
  if (n == 3 || n == 5 || n == 7) return decided(Outcome::Prime, {StageKind::SmallPrimeScreen, n, {}}, trace);

  StepRunner run(trace);
  const Decomposition d = decompose(n);
  const Nat64 root = isqrt(n);
  const Nat64 half_root = isqrt(n / 2);
  // n >= 9 keeps every base in [1, n).
  for (const Nat64 a : {Nat64{2}, root - 1, root + 1, half_root - 1, half_root + 1}) {
    if (!mr_step(run, n, a, d)) return run.finish();
  }

  if (root * root == n) {
    if (!run.record({StageKind::PerfectSquare, n, {}}, 0, false, root)) return run.finish();
  }

  reciprocity_step(run, n, kForm4k3, options);
  return run.finish();
}

Verdict mr_ge_first_attempt(Nat64 n, const TestOptions& options, Trace* trace) {
  if (auto v = unit_or_even(n, trace)) return *v;
  if (n == 3 || n == 5 || n == 7) return decided(Outcome::Prime, {StageKind::SmallPrimeScreen, n, {}}, trace);

  StepRunner run(trace);
  const Decomposition d = decompose(n);
  const Nat64 root = isqrt(n);
  const Nat64 half_root = isqrt(n / 2);
  for (const Nat64 a : {Nat64{2}, root, root + 1, half_root, half_root + 1}) {
    if (!mr_step(run, n, a, d)) return run.finish();
  }

  reciprocity_step(run, n, kForm4k1, options);
  return run.finish();
}

}  // namespace primekit
