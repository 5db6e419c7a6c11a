#include <gtest/gtest.h>

#include "primekit/detprime64.hpp"
#include "primekit/verification.hpp"

namespace primekit {
namespace {

Stage mod8() { return {StageKind::Mod8EulerStep, 2, {}}; }
Stage sqrt_stage(Nat64 a) { return {StageKind::SqrtBaseStep, a, {}}; }
Stage reciprocity(FormSpec form, Nat64 p) { return {StageKind::ReciprocityStep, p, form}; }
Stage mr_round(Nat64 a) { return {StageKind::MRRound, a, {}}; }

TEST(EulerCriterionCheck, Classes) {
  EXPECT_EQ(euler_criterion_check(561, 2).kind, EulerClass::PlusOne);
  EXPECT_EQ(euler_criterion_check(341, 2).kind, EulerClass::PlusOne);
  EXPECT_EQ(euler_criterion_check(6164578258027337, 5).kind, EulerClass::MinusOne);
  const auto c = euler_criterion_check(6164578258027337, 17);
  EXPECT_EQ(c.kind, EulerClass::Other);
  EXPECT_EQ(c.residue, powmod<Nat64>(17, 6164578258027336 / 2, 6164578258027337));
  EXPECT_EQ(euler_criterion_check(23, 5).kind, EulerClass::MinusOne);
  EXPECT_EQ(euler_criterion_check(23, 2).kind, EulerClass::PlusOne);
}

TEST(GaussEuler, Screens) {
  EXPECT_EQ(gauss_euler(0).outcome, Outcome::Composite);
  EXPECT_EQ(gauss_euler(1).stage.kind, StageKind::EvenOrUnit);
  EXPECT_EQ(gauss_euler(2).outcome, Outcome::Prime);
  EXPECT_EQ(gauss_euler(4).stage.kind, StageKind::EvenOrUnit);
  EXPECT_EQ(gauss_euler(97).outcome, Outcome::Prime);
  EXPECT_EQ(gauss_euler(97).stage.kind, StageKind::SmallPrimeScreen);
  EXPECT_EQ(gauss_euler(91).outcome, Outcome::Composite);
  EXPECT_EQ(gauss_euler(91).stage.kind, StageKind::SmallPrimeScreen);
}

TEST(GaussEuler, DocumentedRejections) {
  EXPECT_EQ(gauss_euler(341).stage, mod8());
  EXPECT_EQ(gauss_euler(561).stage, sqrt_stage(23));
  EXPECT_EQ(gauss_euler(1729).stage, sqrt_stage(42));
  EXPECT_EQ(gauss_euler(46657).stage, reciprocity(kForm8k5, 5));
  EXPECT_EQ(gauss_euler(172081).stage, sqrt_stage(294));
  EXPECT_EQ(gauss_euler(6164578258027337).stage, reciprocity(kForm8k1, 17));
  EXPECT_EQ(gauss_euler(33077785078626881).stage, reciprocity(kForm8k5, 13));
  EXPECT_EQ(gauss_euler(17364052083370132981ull).stage, reciprocity(kForm8k5, 53));
  const Verdict v = gauss_euler(172081);
  EXPECT_EQ(v.outcome, Outcome::Composite);
  EXPECT_EQ(v.witness, 294u);
}

TEST(MrGe, DocumentedRejections) {
  EXPECT_EQ(mr_ge(3).outcome, Outcome::Prime);
  EXPECT_EQ(mr_ge(7).outcome, Outcome::Prime);
  EXPECT_EQ(mr_ge(9).outcome, Outcome::Composite);
  EXPECT_EQ(mr_ge(561).outcome, Outcome::Composite);
  EXPECT_EQ(mr_ge(33077785078626881).stage, mr_round(181872990));
  EXPECT_EQ(mr_ge(17364052083370132981ull).stage, mr_round(2946527793));
  EXPECT_EQ(mr_ge(18446744073709551557ull).outcome, Outcome::Prime);
}

TEST(FirstAttempt, AcceptsItsCounterexample) {
  EXPECT_EQ(mr_ge_first_attempt(17364052083370132981ull).outcome, Outcome::Prime);
  EXPECT_EQ(mr_ge_first_attempt(33077785078626881).outcome, Outcome::Composite);
}

TEST(Soundness, EveryPrimeBelowTenMillionIsAccepted) {
  const PrimeSieve sieve(10'000'000);
  for (const Nat64 p : sieve.primes()) {
    ASSERT_TRUE(gauss_euler(p).is_prime()) << p;
    ASSERT_TRUE(mr_ge(p).is_prime()) << p;
    ASSERT_TRUE(mr_ge_first_attempt(p).is_prime()) << p;
  }
}

TEST(Squares, OddAndEvenSquaresAreRejected) {
  for (Nat64 k = 3; k <= 10000; ++k) {
    const Nat64 n = k * k;
    ASSERT_EQ(gauss_euler(n).outcome, Outcome::Composite) << n;
    ASSERT_EQ(mr_ge(n).outcome, Outcome::Composite) << n;
  }
  // A square of a prime that survives the Miller-Rabin bases must stop at the screen.
  for (const Nat64 p : PrimeSieve(100000).primes()) {
    if (p < 3) continue;
    const Verdict v = mr_ge(p * p);
    ASSERT_TRUE(v.stage.kind == StageKind::PerfectSquare || v.stage.kind == StageKind::MRRound) << p;
  }
}

TEST(SearchCap, ExhaustionThrows) {
  // 101 = 1 (mod 5), so 5 is skipped and a cap of one candidate is exceeded.
  EXPECT_THROW(gauss_euler(101, TestOptions{1, DivisorPolicy::Abort}), SearchExhausted);
  EXPECT_EQ(gauss_euler(101).outcome, Outcome::Prime);
}

TEST(TraceMode, StopsAtFirstFailure) {
  for (const Nat64 n : {341ull, 561ull, 46657ull, 172081ull, 6164578258027337ull}) {
    Trace trace;
    const Verdict v = gauss_euler(n, {}, &trace);
    ASSERT_FALSE(trace.steps.empty());
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) EXPECT_TRUE(trace.steps[i].passed) << n;
    EXPECT_FALSE(trace.steps.back().passed) << n;
    EXPECT_EQ(trace.steps.back().stage, v.stage);
  }
}

TEST(TraceMode, PrimeTraceAllPasses) {
  Trace trace;
  const Verdict v = gauss_euler(1000000007, {}, &trace);
  EXPECT_EQ(v.outcome, Outcome::Prime);
  ASSERT_EQ(trace.steps.size(), 7u);  // mod 8, four sqrt bases, two reciprocity checks
  for (const auto& s : trace.steps) EXPECT_TRUE(s.passed);
  EXPECT_EQ(trace.steps[0].stage, mod8());
}

TEST(TraceMode, ContinueAfterFailureRecordsLaterSteps) {
  Trace stop;
  const Verdict a = gauss_euler(561, {}, &stop);
  Trace cont{true, {}};
  const Verdict b = gauss_euler(561, {}, &cont);
  EXPECT_EQ(a.stage, b.stage);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_GT(cont.steps.size(), stop.steps.size());
  for (std::size_t i = 0; i < stop.steps.size(); ++i) {
    EXPECT_EQ(cont.steps[i].stage, stop.steps[i].stage);
    EXPECT_EQ(cont.steps[i].passed, stop.steps[i].passed);
  }
}

TEST(TraceMode, MrGeTraceListsBasesInOrder) {
  Trace trace;
  mr_ge(1000000007, {}, &trace);
  ASSERT_GE(trace.steps.size(), 5u);
  const Nat64 m = isqrt<Nat64>(1000000007);
  const Nat64 r = isqrt<Nat64>(1000000007 / 2);
  const Nat64 bases[] = {2, m - 1, m + 1, r - 1, r + 1};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(trace.steps[i].stage, mr_round(bases[i]));
}

}  // namespace
}  // namespace primekit
