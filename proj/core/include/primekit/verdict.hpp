#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primekit/modarith.hpp"

namespace primekit {

/// Arithmetic progression `modulus*k + residue` restricting an auxiliary prime.
struct FormSpec {
  unsigned modulus;
  unsigned residue;
  unsigned first_candidate;  // smallest prime in the progression

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

inline constexpr FormSpec kForm4k1{4, 1, 5};
inline constexpr FormSpec kForm4k3{4, 3, 3};
inline constexpr FormSpec kForm8k1{8, 1, 17};
inline constexpr FormSpec kForm8k3{8, 3, 3};
inline constexpr FormSpec kForm8k5{8, 5, 5};
inline constexpr FormSpec kForm8k7{8, 7, 7};

/// True for the six progressions the tests use.
bool is_known_form(const FormSpec& form) noexcept;

/// "4k+1", "8k+5", ...
std::string to_string(const FormSpec& form);

enum class Outcome {
  Composite,
  ProbablePrime,  // passed a schedule with no exactness claim
  Prime,
};

inline bool is_prime_like(Outcome o) noexcept { return o != Outcome::Composite; }

enum class StageKind {
  EvenOrUnit,
  SmallPrimeScreen,
  PerfectSquare,
  Mod8EulerStep,    // value = 2
  SqrtBaseStep,     // value = base
  ReciprocityStep,  // value = auxiliary prime, form set
  MRRound,          // value = base
  DivisorFound,     // value = divisor
};

template <Natural N>
struct BasicStage {
  StageKind kind = StageKind::EvenOrUnit;
  N value{};
  std::optional<FormSpec> form;

  friend bool operator==(const BasicStage&, const BasicStage&) = default;
};

using Stage = BasicStage<Nat64>;
using BigStage = BasicStage<BigNat>;

template <Natural N>
struct BasicVerdict {
  Outcome outcome = Outcome::Composite;
  BasicStage<N> stage;
  // failing base, found divisor, or the reciprocity prime that rejected n
  std::optional<N> witness;

  bool is_prime() const noexcept { return is_prime_like(outcome); }
};

using Verdict = BasicVerdict<Nat64>;
using BigVerdict = BasicVerdict<BigNat>;

std::string to_string(Outcome o);
std::string to_string(StageKind kind);
std::string to_string(const Stage& stage);
std::string to_string(const BigStage& stage);

/// One evaluated step. `residue` is the power residue the step inspected
/// (0 for screens).
struct TraceStep {
  Stage stage;
  Nat64 residue = 0;
  bool passed = false;
};

/// Optional step recorder for the deterministic tests. By default the
/// test stops at the first failing step; with `continue_after_failure`
/// every later step is still evaluated and recorded.
struct Trace {
  bool continue_after_failure = false;
  std::vector<TraceStep> steps;
};

inline Verdict make_composite(Stage stage, std::optional<Nat64> witness) {
  return Verdict{Outcome::Composite, stage, witness};
}

}  // namespace primekit
