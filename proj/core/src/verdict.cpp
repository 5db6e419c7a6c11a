#include "primekit/verdict.hpp"

namespace primekit {

bool is_known_form(const FormSpec& form) noexcept {
  for (const FormSpec& known : {kForm4k1, kForm4k3, kForm8k1, kForm8k3, kForm8k5, kForm8k7}) {
    if (form == known) return true;
  }
  return false;
}

std::string to_string(const FormSpec& form) {
  return std::to_string(form.modulus) + "k+" + std::to_string(form.residue);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Composite: return "composite";
    case Outcome::ProbablePrime: return "probable prime";
    case Outcome::Prime: return "prime";
  }
  return "?";
}

std::string to_string(StageKind kind) {
  switch (kind) {
    case StageKind::EvenOrUnit: return "even-or-unit";
    case StageKind::SmallPrimeScreen: return "small-prime-screen";
    case StageKind::PerfectSquare: return "perfect-square";
    case StageKind::Mod8EulerStep: return "mod8-euler";
    case StageKind::SqrtBaseStep: return "sqrt-base";
    case StageKind::ReciprocityStep: return "reciprocity";
    case StageKind::MRRound: return "mr-round";
    case StageKind::DivisorFound: return "divisor-found";
  }
  return "?";
}

namespace {

template <Natural N>
std::string stage_string(const BasicStage<N>& stage) {
  std::string value;
  if constexpr (std::is_same_v<N, Nat64>) {
    value = std::to_string(stage.value);
  } else {
    value = stage.value.get_str();
  }
  switch (stage.kind) {
    case StageKind::EvenOrUnit:
    case StageKind::SmallPrimeScreen:
    case StageKind::PerfectSquare:
      return to_string(stage.kind);
    case StageKind::ReciprocityStep:
      return to_string(stage.kind) + "(" + (stage.form ? to_string(*stage.form) : std::string("?")) +
             ",p=" + value + ")";
    default:
      return to_string(stage.kind) + "(" + value + ")";
  }
}

}  // namespace

std::string to_string(const Stage& stage) { return stage_string(stage); }
std::string to_string(const BigStage& stage) { return stage_string(stage); }

}  // namespace primekit
