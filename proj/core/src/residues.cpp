#include "primekit/residues.hpp"

namespace primekit {

bool is_small_prime(Nat64 p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  const Nat64 limit = isqrt(p);
  for (Nat64 d = 3; d <= limit; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

SearchExhausted::SearchExhausted(const std::string& n, const FormSpec& form, std::size_t cap)
    : std::runtime_error("nonresidue search for n=" + n + " over form " + to_string(form) + " exceeded " +
                         std::to_string(cap) + " candidates") {}

int theorem1_expected_sign(Nat64 n) {
  if (!is_odd(n)) throw std::invalid_argument("theorem1_expected_sign: n must be odd");
  const Nat64 r = n % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace primekit
