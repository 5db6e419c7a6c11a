#include "primekit/sprp.hpp"

#include <array>

namespace primekit {

const BaseSchedule& seven_base_schedule() {
  static const BaseSchedule schedule{
      LiteralBase{2}, LiteralBase{5}, LiteralBase{17}, SqrtBase{1, 0},
      SqrtBase{1, 1}, SqrtBase{2, 0}, SqrtBase{2, 1},
  };
  return schedule;
}

Verdict seven_base_variant(Nat64 n) {
  if (n == 2 || n == 3 || n == 5 || n == 7 || n == 17) {
    return Verdict{Outcome::Prime, {StageKind::SmallPrimeScreen, n, {}}, {}};
  }
  if (n < 9 || !is_odd(n)) return make_composite({StageKind::EvenOrUnit, n, {}}, std::nullopt);
  return mr_with_schedule(n, seven_base_schedule());
}

Verdict reference_oracle64(Nat64 n) {
  static constexpr std::array<Nat64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return make_composite({StageKind::EvenOrUnit, n, {}}, std::nullopt);
  for (const Nat64 p : kBases) {
    if (n == p) return Verdict{Outcome::Prime, {StageKind::SmallPrimeScreen, n, {}}, {}};
    if (n % p == 0) {
      const StageKind kind = p == 2 ? StageKind::EvenOrUnit : StageKind::DivisorFound;
      return make_composite({kind, p, {}}, p);
    }
  }
  const Decomposition d = decompose(n);
  for (const Nat64 a : kBases) {
    if (!sprp_round(n, a, d)) return make_composite({StageKind::MRRound, a, {}}, a);
  }
  return Verdict{Outcome::Prime, {StageKind::MRRound, kBases.back(), {}}, {}};
}

}  // namespace primekit
