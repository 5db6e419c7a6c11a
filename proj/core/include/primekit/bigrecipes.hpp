#pragma once

// Probabilistic recipes for wide candidates (256-bit and 1024/2048-bit RSA
// sizes): a Miller-Rabin schedule of sqrt-derived bases followed by one
// reciprocity check per residue-class form. Neither recipe is certified
// exact; a pass is reported as ProbablePrime.

#include <string>
#include <string_view>
#include <vector>

#include "primekit/detprime64.hpp"
#include "primekit/sprp.hpp"

namespace primekit {

struct Recipe {
  std::string name;
  // Bumped whenever the base schedule or forms are amended, so recorded
  // results can name the exact definition they came from.
  int version = 1;
  BaseSchedule mr_bases;
  std::vector<FormSpec> reciprocity_forms;
};

/// 2 and [sqrt(n/i)] + j for i in {1,2,3}, j in {-1,0,+1}; forms 4k+1, 4k+3.
const Recipe& recipe256_definition();

/// 2 and [sqrt(n/i)] + j for i in {1,2,3,5,7}, j in {-2..+2} (26 bases);
/// forms 8k+1, 8k+3, 8k+5, 8k+7.
const Recipe& recipe2048_definition();

/// Runs `recipe` on n. n < 100 is decided by trial division; sqrt-derived
/// bases that resolve outside (0, n) are skipped. Each reciprocity check
/// requires p^((n-1)/2) = n-1, except +1 when p and n are both 3 (mod 4).
/// Throws SearchExhausted if a form search runs past its cap.
BigVerdict run_recipe(const Recipe& recipe, const BigNat& n, const TestOptions& options = {});

inline BigVerdict recipe256(const BigNat& n, const TestOptions& options = {}) {
  return run_recipe(recipe256_definition(), n, options);
}

inline BigVerdict recipe2048(const BigNat& n, const TestOptions& options = {}) {
  return run_recipe(recipe2048_definition(), n, options);
}

/// Parses a non-negative decimal or 0x-prefixed hexadecimal integer.
/// Throws std::invalid_argument on malformed text.
BigNat parse_bignat(std::string_view text);

}  // namespace primekit
