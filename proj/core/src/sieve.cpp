#include <stdexcept>
#include <string>

#include "primekit/verification.hpp"

namespace primekit {

PrimeSieve::PrimeSieve(Nat64 limit, std::size_t max_bytes) : limit_(limit) {
  const Nat64 slots = limit / 2 + 1;
  if (slots / 8 > max_bytes) {
    throw std::length_error("sieve limit " + std::to_string(limit) + " exceeds the memory budget of " +
                            std::to_string(max_bytes) + " bytes");
  }
  odd_composite_.assign(slots, false);
  odd_composite_[0] = true;  // 1
  for (Nat64 p = 3; p * p <= limit; p += 2) {
    if (odd_composite_[p / 2]) continue;
    for (Nat64 m = p * p; m <= limit; m += 2 * p) odd_composite_[m / 2] = true;
  }
  count_ = limit >= 2 ? 1 : 0;
  for (Nat64 i = 1; i < slots; ++i) {
    if (2 * i + 1 <= limit && !odd_composite_[i]) ++count_;
  }
}

bool PrimeSieve::is_prime(Nat64 n) const {
  if (n > limit_) throw std::out_of_range("n=" + std::to_string(n) + " is beyond the sieve limit");
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  return !odd_composite_[n / 2];
}

std::vector<Nat64> PrimeSieve::primes() const {
  std::vector<Nat64> out;
  out.reserve(count_);
  if (limit_ >= 2) out.push_back(2);
  for (Nat64 n = 3; n <= limit_; n += 2) {
    if (!odd_composite_[n / 2]) out.push_back(n);
  }
  return out;
}

}  // namespace primekit
