#pragma once

// Overflow-safe modular arithmetic and exact integer square roots.
//
// Every routine is written once as a template over the integer type and is
// instantiated for two widths:
//   Nat64  - std::uint64_t, full range [0, 2^64)
//   BigNat - GMP mpz_class, arbitrary precision (non-negative by convention)
// The operation contracts are identical for both.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>

#include <gmpxx.h>

namespace primekit {

using Nat64 = std::uint64_t;
using BigNat = mpz_class;
__extension__ typedef unsigned __int128 Nat128;

template <class N>
concept Natural = std::is_same_v<N, Nat64> || std::is_same_v<N, BigNat>;

// ---------------------------------------------------------------------------
// Width-specific primitives. Everything else is generic over these.

inline bool is_odd(Nat64 n) noexcept { return (n & 1u) != 0; }
inline bool is_odd(const BigNat& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

inline unsigned bit_length(Nat64 n) noexcept { return static_cast<unsigned>(std::bit_width(n)); }
inline unsigned bit_length(const BigNat& n) {
  return sgn(n) == 0 ? 0u : static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

/// n mod m for a word-sized modulus m > 0.
inline Nat64 mod_word(Nat64 n, Nat64 m) noexcept { return n % m; }
inline Nat64 mod_word(const BigNat& n, Nat64 m) {
  static_assert(sizeof(unsigned long) == sizeof(Nat64), "LP64 platform required");
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

inline Nat64 to_nat64(Nat64 n) noexcept { return n; }
inline Nat64 to_nat64(const BigNat& n) { return mpz_get_ui(n.get_mpz_t()); }

// ---------------------------------------------------------------------------

/// (a * b) mod m, exact over the full operand range.
///
/// Callers reduce a and b below m first. m == 0 is rejected.
inline Nat64 mulmod(Nat64 a, Nat64 b, Nat64 m) {
  if (m == 0) throw std::domain_error("mulmod: modulus must be non-zero");
  return static_cast<Nat64>(static_cast<Nat128>(a) * b % m);
}

inline BigNat mulmod(const BigNat& a, const BigNat& b, const BigNat& m) {
  if (sgn(m) == 0) throw std::domain_error("mulmod: modulus must be non-zero");
  BigNat r = a * b;
  r %= m;
  return r;
}

/// a^e mod m by right-to-left square-and-multiply; e == 0 gives 1.
template <Natural N>
N powmod(N a, N e, const N& m) {
  if (m == 0) throw std::domain_error("powmod: modulus must be non-zero");
  if (m == 1) return N(0);
  N result = 1;
  a %= m;
  while (e != 0) {
    if (is_odd(e)) result = mulmod(result, a, m);
    e >>= 1;
    if (e != 0) a = mulmod(a, a, m);
  }
  return result;
}

/// floor(sqrt(n)) by Newton iteration from above. No floating point.
template <Natural N>
N isqrt(const N& n) {
  if (n < 2) return n;
  // 2^ceil(bits/2) >= sqrt(n), so the iteration decreases monotonically.
  N x = N(1);
  x <<= (bit_length(n) + 1) / 2;
  for (;;) {
    N y = x + n / x;
    y >>= 1;
    if (y >= x) return x;
    x = y;
  }
}

template <Natural N>
bool is_perfect_square(const N& n) {
  const N r = isqrt(n);
  return r * r == n;
}

/// Divisors accepted by sqrt_base.
inline constexpr bool is_sqrt_divisor(unsigned d) noexcept {
  return d == 1 || d == 2 || d == 3 || d == 5 || d == 7;
}

/// isqrt(floor(n / divisor)) + offset, or nullopt if the result falls
/// outside (0, n) and therefore cannot be used as a base.
///
/// For odd n and the divisors above, isqrt(floor(n / d)) equals the integer
/// part of sqrt(n / d): the dropped fraction is below 1 and cannot carry the
/// quotient across a square.
template <Natural N>
std::optional<N> sqrt_base(const N& n, unsigned divisor, int offset) {
  if (!is_sqrt_divisor(divisor)) throw std::invalid_argument("sqrt_base: divisor must be one of 1, 2, 3, 5, 7");
  N root = isqrt(N(n / divisor));
  if (offset < 0) {
    const auto down = static_cast<unsigned>(-offset);
    if (root <= down) return std::nullopt;
    root -= down;
  } else {
    root += static_cast<unsigned>(offset);
  }
  if (root == 0 || root >= n) return std::nullopt;
  return root;
}

}  // namespace primekit
