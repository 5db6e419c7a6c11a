#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "primekit/detprime64.hpp"

namespace primekit {

/// The 64-bit tests addressable by name from drivers and the CLI.
enum class Algorithm {
  GaussEuler,
  MrGe,
  SevenBase,
  FirstAttempt,
  Oracle,
};

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::GaussEuler, Algorithm::MrGe, Algorithm::SevenBase,
                                               Algorithm::FirstAttempt, Algorithm::Oracle};

/// Canonical name: gauss_euler, mr_ge, seven_base_variant, mr_ge_first_attempt,
/// reference_oracle64.
std::string_view name(Algorithm algo) noexcept;

/// CLI short name: ge, mrge, mr7, first, oracle.
std::string_view short_name(Algorithm algo) noexcept;

/// Accepts either the short or the canonical name.
std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept;

Verdict run_algorithm(Algorithm algo, Nat64 n, const TestOptions& options = {}, Trace* trace = nullptr);

}  // namespace primekit
