#pragma once

// Legendre symbols against small primes and the auxiliary-prime search used
// by the reciprocity steps.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "primekit/modarith.hpp"
#include "primekit/verdict.hpp"

namespace primekit {

inline constexpr std::size_t kDefaultSearchCap = 1000;

/// Primality by trial division up to isqrt(p).
bool is_small_prime(Nat64 p) noexcept;

enum class Legendre : int { Minus = -1, Zero = 0, Plus = 1 };

inline int to_int(Legendre l) noexcept { return static_cast<int>(l); }

/// (n / p) for an odd prime p, via Euler's criterion modulo p.
template <Natural N>
Legendre legendre(const N& n, Nat64 p) {
  const Nat64 r = mod_word(n, p);
  if (r == 0) return Legendre::Zero;
  return powmod<Nat64>(r, (p - 1) / 2, p) == 1 ? Legendre::Plus : Legendre::Minus;
}

/// What to do when the candidate p divides n (symbol 0).
enum class DivisorPolicy {
  Skip,   // keep searching
  Abort,  // report the divisor (or, if p == n, that n itself was reached)
};

struct NonresidueSearchResult {
  enum class Kind {
    Found,         // legendre(n, prime) == -1
    DivisorFound,  // prime < n and prime | n
    ReachedInput,  // prime == n; n is a trial-division-proven prime
    Exhausted,     // more than `cap` prime candidates inspected
  };
  Kind kind = Kind::Exhausted;
  Nat64 prime = 0;
  std::size_t inspected = 0;
};

/// Thrown when a search runs past its cap. Never a verdict.
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& n, const FormSpec& form, std::size_t cap);
};

/// Smallest prime p = form.first_candidate + k*form.modulus with (n/p) = -1.
///
/// Candidates are filtered by trial division. Requires n odd, n > 1 and not a
/// perfect square; for a square every symbol is 0 or +1 and the search ends
/// Exhausted.
template <Natural N>
NonresidueSearchResult smallest_nonresidue_prime(const N& n, const FormSpec& form, DivisorPolicy policy,
                                                 std::size_t cap = kDefaultSearchCap) {
  if (!is_known_form(form)) throw std::invalid_argument("smallest_nonresidue_prime: unsupported form " + to_string(form));
  NonresidueSearchResult result;
  for (Nat64 p = form.first_candidate;; p += form.modulus) {
    if (!is_small_prime(p)) continue;
    if (result.inspected == cap) {
      result.kind = NonresidueSearchResult::Kind::Exhausted;
      return result;
    }
    ++result.inspected;
    const Legendre symbol = legendre(n, p);
    if (symbol == Legendre::Minus) {
      result.kind = NonresidueSearchResult::Kind::Found;
      result.prime = p;
      return result;
    }
    if (symbol == Legendre::Zero && policy == DivisorPolicy::Abort) {
      result.kind = n > p ? NonresidueSearchResult::Kind::DivisorFound : NonresidueSearchResult::Kind::ReachedInput;
      result.prime = p;
      return result;
    }
  }
}

/// The value 2^((n-1)/2) mod n must take (as +1 or -1) if n is prime:
/// +1 for n = 1, 7 (mod 8), -1 for n = 3, 5 (mod 8).
int theorem1_expected_sign(Nat64 n);

/// Sign p^((n-1)/2) mod n must have when n is prime and (n/p) = -1 for an
/// odd prime p != n. By reciprocity (p/n) = -(-1)^((p-1)/2 * (n-1)/2):
/// -1 unless both p and n are 3 (mod 4), in which case +1.
inline int reciprocity_expected_sign(Nat64 p_mod4, Nat64 n_mod4) noexcept {
  return (p_mod4 % 4 == 3 && n_mod4 % 4 == 3) ? 1 : -1;
}

}  // namespace primekit
