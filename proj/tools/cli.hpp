#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "primekit/modarith.hpp"

namespace primekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Parses a 64-bit argument: decimal, 0x-prefixed hex, or a power `a^b`.
/// Throws std::invalid_argument on malformed or out-of-range text.
Nat64 parse_nat64(std::string_view text);

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 mismatch or failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primekit::cli
