#pragma once

// Gauss-Euler and MR-GE primality tests for 64-bit integers, plus the
// rejected first MR-GE design kept for reproducing its false positive.

#include <cstddef>

#include "primekit/residues.hpp"
#include "primekit/verdict.hpp"

namespace primekit {

struct TestOptions {
  std::size_t search_cap = kDefaultSearchCap;
  DivisorPolicy divisor_policy = DivisorPolicy::Abort;
};

enum class EulerClass { PlusOne, MinusOne, Other };

struct EulerCheck {
  EulerClass kind;
  Nat64 residue;  // a^((n-1)/2) mod n
};

/// Classifies a^((n-1)/2) mod n as 1, n-1, or anything else. n odd, 0 < a < n.
EulerCheck euler_criterion_check(Nat64 n, Nat64 a);

/// Gauss-Euler test, exact below 2^64 (conjectured; verified here only at
/// desk scale).
///
///   0. n < 2 or even: composite; n = 2 prime; n < 100 by trial division.
///   1. 2^((n-1)/2) must be 1 for n = 1,7 (mod 8) and n-1 for n = 3,5 (mod 8).
///   2. bases [sqrt n], [sqrt n]+1, [sqrt(n/2)], [sqrt(n/2)]+1 must give +-1.
///   3. smallest 8k+5 prime p1 with (n/p1) = -1 must give p1^((n-1)/2) = n-1,
///      then the same for the smallest such 8k+1 prime p2.
///
/// Throws SearchExhausted if an auxiliary-prime search runs past its cap.
Verdict gauss_euler(Nat64 n, const TestOptions& options = {}, Trace* trace = nullptr);

/// MR-GE test: Miller-Rabin with 2, [sqrt n]-1, [sqrt n]+1, [sqrt(n/2)]-1,
/// [sqrt(n/2)]+1, a perfect-square screen, then one reciprocity check with the
/// smallest 4k+3 prime p having (n/p) = -1; p^((n-1)/2) must be n-1 when
/// n = 1 (mod 4) and 1 when n = 3 (mod 4).
Verdict mr_ge(Nat64 n, const TestOptions& options = {}, Trace* trace = nullptr);

/// First MR-GE design: bases 2, [sqrt n], [sqrt n]+1, [sqrt(n/2)],
/// [sqrt(n/2)]+1, then the smallest 4k+1 prime p with (n/p) = -1 must give
/// p^((n-1)/2) = n-1. Accepts the composite 17364052083370132981.
Verdict mr_ge_first_attempt(Nat64 n, const TestOptions& options = {}, Trace* trace = nullptr);

}  // namespace primekit
