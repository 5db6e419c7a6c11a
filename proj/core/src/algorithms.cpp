#include "primekit/algorithms.hpp"

#include "primekit/sprp.hpp"

namespace primekit {

std::string_view name(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::GaussEuler: return "gauss_euler";
    case Algorithm::MrGe: return "mr_ge";
    case Algorithm::SevenBase: return "seven_base_variant";
    case Algorithm::FirstAttempt: return "mr_ge_first_attempt";
    case Algorithm::Oracle: return "reference_oracle64";
  }
  return "?";
}

std::string_view short_name(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::GaussEuler: return "ge";
    case Algorithm::MrGe: return "mrge";
    case Algorithm::SevenBase: return "mr7";
    case Algorithm::FirstAttempt: return "first";
    case Algorithm::Oracle: return "oracle";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept {
  for (const Algorithm algo : kAllAlgorithms) {
    if (text == name(algo) || text == short_name(algo)) return algo;
  }
  return std::nullopt;
}

Verdict run_algorithm(Algorithm algo, Nat64 n, const TestOptions& options, Trace* trace) {
  switch (algo) {
    case Algorithm::GaussEuler: return gauss_euler(n, options, trace);
    case Algorithm::MrGe: return mr_ge(n, options, trace);
    case Algorithm::FirstAttempt: return mr_ge_first_attempt(n, options, trace);
    case Algorithm::SevenBase: return seven_base_variant(n);
    case Algorithm::Oracle: return reference_oracle64(n);
  }
  return reference_oracle64(n);
}

}  // namespace primekit
