#pragma once

// Strong-probable-prime (Miller-Rabin) rounds over configurable base
// schedules.

#include <optional>
#include <variant>
#include <vector>

#include "primekit/modarith.hpp"
#include "primekit/verdict.hpp"

namespace primekit {

/// n - 1 = 2^s * t with t odd.
template <Natural N>
struct BasicDecomposition {
  unsigned s = 0;
  N t{};
};

using Decomposition = BasicDecomposition<Nat64>;

template <Natural N>
BasicDecomposition<N> decompose(const N& n) {
  BasicDecomposition<N> d;
  d.t = n - 1;
  while (d.t != 0 && !is_odd(d.t)) {
    d.t >>= 1;
    ++d.s;
  }
  return d;
}

/// One strong round for base a, 1 <= a < n. Returns true (pass) iff n is a
/// strong probable prime to base a:
///   b = a^t mod n, then square s times; a square equal to 1 from a b other
///   than +-1 fails, and the final value must be 1.
template <Natural N>
bool sprp_round(const N& n, const N& a, const BasicDecomposition<N>& d) {
  const N minus_one = n - 1;
  N b = powmod(N(a), N(d.t), n);
  for (unsigned j = 0; j < d.s; ++j) {
    N k = mulmod(b, b, n);
    if (k == 1 && b != 1 && b != minus_one) return false;
    b = std::move(k);
  }
  return b == 1;
}

struct LiteralBase {
  Nat64 value;
};

/// isqrt(n / divisor) + offset, resolved against each n.
struct SqrtBase {
  unsigned divisor;
  int offset;
};

using BaseSpec = std::variant<LiteralBase, SqrtBase>;
using BaseSchedule = std::vector<BaseSpec>;

/// The base `spec` resolves to for this n, or nullopt when it is unusable:
/// a literal that reduces to 0 mod n, or a sqrt-derived value outside (0, n).
template <Natural N>
std::optional<N> resolve_base(const BaseSpec& spec, const N& n) {
  if (const auto* lit = std::get_if<LiteralBase>(&spec)) {
    N a = N(lit->value) % n;
    if (a == 0) return std::nullopt;
    return a;
  }
  const auto& sq = std::get<SqrtBase>(spec);
  return sqrt_base(n, sq.divisor, sq.offset);
}

/// Miller-Rabin over every usable base of `schedule`. Composite at the first
/// failing round; otherwise ProbablePrime (the schedule makes no exactness
/// claim). n < 3 and even n are decided directly.
template <Natural N>
BasicVerdict<N> mr_with_schedule(const N& n, const BaseSchedule& schedule) {
  using V = BasicVerdict<N>;
  if (n == 2) return V{Outcome::Prime, {StageKind::SmallPrimeScreen, N(2), {}}, {}};
  if (n < 2 || !is_odd(n)) return V{Outcome::Composite, {StageKind::EvenOrUnit, n, {}}, {}};
  const auto d = decompose(n);
  V verdict{Outcome::ProbablePrime, {StageKind::SmallPrimeScreen, n, {}}, {}};
  for (const BaseSpec& spec : schedule) {
    const std::optional<N> a = resolve_base(spec, n);
    if (!a) continue;
    verdict.stage = {StageKind::MRRound, *a, {}};
    if (!sprp_round(n, *a, d)) {
      verdict.outcome = Outcome::Composite;
      verdict.witness = *a;
      return verdict;
    }
  }
  return verdict;
}

/// 2, 5, 17, [sqrt n], [sqrt n]+1, [sqrt(n/2)], [sqrt(n/2)]+1.
const BaseSchedule& seven_base_schedule();

/// Miller-Rabin with the seven-base schedule. Screens n < 9 and the
/// special cases 2, 5, 17 before resolving bases. Not exact below 2^64:
/// 33077785078626881 is a known strong pseudoprime to all seven bases.
Verdict seven_base_variant(Nat64 n);

/// Trusted deterministic comparator: Miller-Rabin with the first twelve
/// primes (2..37) as bases, known to be exact for every n < 3.3e24. This is
/// prior knowledge independent of the tests under study.
Verdict reference_oracle64(Nat64 n);

}  // namespace primekit
