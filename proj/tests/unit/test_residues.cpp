#include <gtest/gtest.h>

#include <set>

#include "primekit/residues.hpp"
#include "primekit/verification.hpp"

namespace primekit {
namespace {

using Kind = NonresidueSearchResult::Kind;

TEST(SmallPrime, Basics) {
  EXPECT_TRUE(is_small_prime(2));
  EXPECT_FALSE(is_small_prime(1));
  EXPECT_FALSE(is_small_prime(0));
  EXPECT_FALSE(is_small_prime(9));
  EXPECT_TRUE(is_small_prime(29));
  EXPECT_FALSE(is_small_prime(91));  // 7 * 13
}

TEST(SmallPrime, AgreesWithSieveBelowOneHundredThousand) {
  const PrimeSieve sieve(100000);
  for (Nat64 n = 0; n <= 100000; ++n) ASSERT_EQ(is_small_prime(n), sieve.is_prime(n)) << n;
}

TEST(Legendre, KnownSymbols) {
  EXPECT_EQ(legendre<Nat64>(1729, 5), Legendre::Plus);
  EXPECT_EQ(legendre<Nat64>(1729, 13), Legendre::Zero);
  EXPECT_EQ(legendre<Nat64>(1729, 17), Legendre::Minus);
  EXPECT_EQ(legendre<Nat64>(46657, 5), Legendre::Minus);
  EXPECT_EQ(legendre<Nat64>(6164578258027337, 17), Legendre::Minus);
  EXPECT_EQ(legendre(BigNat(6164578258027337), 17), Legendre::Minus);
}

// Residue sets by brute force: a is a residue iff a = x^2 (mod p) for some x.
TEST(Legendre, MatchesSquaresAndHalfAreResidues) {
  const PrimeSieve sieve(10000);
  for (const Nat64 p : sieve.primes()) {
    if (p == 2) continue;
    std::vector<bool> square(p, false);
    for (Nat64 x = 1; x < p; ++x) square[x * x % p] = true;
    std::size_t residues = 0;
    for (Nat64 a = 1; a < p; ++a) {
      const bool is_residue = legendre(a, p) == Legendre::Plus;
      ASSERT_EQ(is_residue, square[a]) << a << " mod " << p;
      residues += is_residue;
    }
    ASSERT_EQ(residues, (p - 1) / 2) << p;
  }
}

TEST(Legendre, QuadraticReciprocity) {
  const auto primes = PrimeSieve(500).primes();
  for (const Nat64 p : primes) {
    for (const Nat64 q : primes) {
      if (p == 2 || q == 2 || p == q) continue;
      const int lhs = to_int(legendre(p, q)) * to_int(legendre(q, p));
      const int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
      ASSERT_EQ(lhs, rhs) << p << ", " << q;
    }
  }
}

TEST(Legendre, TwoIsResidueExactlyForPlusMinusOneModEight) {
  for (const Nat64 p : PrimeSieve(1'000'000).primes()) {
    if (p == 2) continue;
    const bool residue = legendre<Nat64>(2, p) == Legendre::Plus;
    ASSERT_EQ(residue, p % 8 == 1 || p % 8 == 7) << p;
    ASSERT_EQ(theorem1_expected_sign(p), residue ? 1 : -1);
  }
}

TEST(BaseTwoEulerSign, Examples) {
  EXPECT_EQ(theorem1_expected_sign(561), 1);
  EXPECT_EQ(theorem1_expected_sign(341), -1);
  EXPECT_EQ(theorem1_expected_sign(7), 1);
  EXPECT_EQ(theorem1_expected_sign(3), -1);
  EXPECT_THROW(theorem1_expected_sign(10), std::invalid_argument);
}

TEST(NonresidueSearch, WorkedExamples) {
  const auto r1729 = smallest_nonresidue_prime<Nat64>(1729, kForm4k1, DivisorPolicy::Skip);
  EXPECT_EQ(r1729.kind, Kind::Found);
  EXPECT_EQ(r1729.prime, 17u);
  EXPECT_EQ(r1729.inspected, 3u);  // 5, 13 (symbol 0, skipped), 17

  const auto r46657 = smallest_nonresidue_prime<Nat64>(46657, kForm8k5, DivisorPolicy::Skip);
  EXPECT_EQ(r46657.kind, Kind::Found);
  EXPECT_EQ(r46657.prime, 5u);

  const auto big = smallest_nonresidue_prime<Nat64>(6164578258027337, kForm8k1, DivisorPolicy::Skip);
  EXPECT_EQ(big.kind, Kind::Found);
  EXPECT_EQ(big.prime, 17u);
}

TEST(NonresidueSearch, AbortReportsDivisor) {
  const auto r = smallest_nonresidue_prime<Nat64>(1729, kForm4k1, DivisorPolicy::Abort);
  EXPECT_EQ(r.kind, Kind::DivisorFound);
  EXPECT_EQ(r.prime, 13u);
}

TEST(NonresidueSearch, AbortReachesPrimeInput) {
  // 5 is the first 8k+5 candidate: the search meets n itself.
  const auto r = smallest_nonresidue_prime<Nat64>(5, kForm8k5, DivisorPolicy::Abort);
  EXPECT_EQ(r.kind, Kind::ReachedInput);
  EXPECT_EQ(r.prime, 5u);
}

TEST(NonresidueSearch, SquareExhaustsCap) {
  for (const FormSpec& form : {kForm4k1, kForm4k3, kForm8k1, kForm8k3, kForm8k5, kForm8k7}) {
    const auto r = smallest_nonresidue_prime<Nat64>(25, form, DivisorPolicy::Skip, 1000);
    EXPECT_EQ(r.kind, Kind::Exhausted) << to_string(form);
    EXPECT_EQ(r.inspected, 1000u);
  }
}

TEST(NonresidueSearch, FoundPrimeHasFormAndMinusOne) {
  for (Nat64 n = 3; n < 20000; n += 2) {
    if (is_perfect_square(n)) continue;
    for (const FormSpec& form : {kForm4k1, kForm4k3, kForm8k1, kForm8k5}) {
      const auto r = smallest_nonresidue_prime(n, form, DivisorPolicy::Abort);
      ASSERT_NE(r.kind, Kind::Exhausted);
      ASSERT_TRUE(is_small_prime(r.prime));
      ASSERT_EQ(r.prime % form.modulus, form.residue);
      if (r.kind == Kind::Found) {
        ASSERT_EQ(legendre(n, r.prime), Legendre::Minus);
        ASSERT_NE(n % r.prime, 0u) << "Found must never be a divisor";
      } else if (r.kind == Kind::DivisorFound) {
        ASSERT_EQ(n % r.prime, 0u);
        ASSERT_LT(r.prime, n);
      } else {
        ASSERT_EQ(r.prime, n);
      }
    }
  }
}

TEST(NonresidueSearch, RejectsUnknownForm) {
  EXPECT_THROW(smallest_nonresidue_prime<Nat64>(101, FormSpec{6, 1, 7}, DivisorPolicy::Skip), std::invalid_argument);
}

// (p/n) for small prime n by direct evaluation must match the sign table
// whenever (n/p) = -1.
TEST(ReciprocitySign, MatchesDirectLegendre) {
  const auto primes = PrimeSieve(2000).primes();
  for (const Nat64 n : primes) {
    if (n == 2) continue;
    for (const Nat64 p : primes) {
      if (p == 2 || p == n || legendre(n, p) != Legendre::Minus) continue;
      ASSERT_EQ(to_int(legendre(p, n)), reciprocity_expected_sign(p % 4, n % 4)) << "p=" << p << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace primekit
