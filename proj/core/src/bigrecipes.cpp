#include "primekit/bigrecipes.hpp"

#include <cctype>
#include <stdexcept>

#include "primekit/residues.hpp"

namespace primekit {
namespace {

BaseSchedule sqrt_schedule(std::initializer_list<unsigned> divisors, int spread) {
  BaseSchedule schedule{LiteralBase{2}};
  for (const unsigned i : divisors) {
    for (int j = -spread; j <= spread; ++j) schedule.push_back(SqrtBase{i, j});
  }
  return schedule;
}

BigVerdict big_decided(Outcome outcome, StageKind kind, const BigNat& value) {
  BigVerdict v{outcome, {kind, value, {}}, {}};
  if (outcome == Outcome::Composite) v.witness = value;
  return v;
}

}  // namespace

const Recipe& recipe256_definition() {
  static const Recipe recipe{"recipe256", 1, sqrt_schedule({1, 2, 3}, 1), {kForm4k1, kForm4k3}};
  return recipe;
}

const Recipe& recipe2048_definition() {
  static const Recipe recipe{
      "recipe2048", 1, sqrt_schedule({1, 2, 3, 5, 7}, 2), {kForm8k1, kForm8k3, kForm8k5, kForm8k7}};
  return recipe;
}

BigVerdict run_recipe(const Recipe& recipe, const BigNat& n, const TestOptions& options) {
  if (n == 2) return big_decided(Outcome::Prime, StageKind::SmallPrimeScreen, n);
  if (n < 2 || !is_odd(n)) return BigVerdict{Outcome::Composite, {StageKind::EvenOrUnit, n, {}}, {}};
  if (n < 100) {
    const Nat64 small = to_nat64(n);
    if (is_small_prime(small)) return big_decided(Outcome::Prime, StageKind::SmallPrimeScreen, n);
    Nat64 d = 3;
    while (small % d != 0) d += 2;
    return big_decided(Outcome::Composite, StageKind::SmallPrimeScreen, BigNat(d));
  }

  BigVerdict verdict = mr_with_schedule(n, recipe.mr_bases);
  if (!verdict.is_prime()) return verdict;

  const BigNat half = (n - 1) / 2;
  const Nat64 n_mod4 = mod_word(n, 4);
  for (const FormSpec& form : recipe.reciprocity_forms) {
    const auto search = smallest_nonresidue_prime(n, form, options.divisor_policy, options.search_cap);
    using Kind = NonresidueSearchResult::Kind;
    switch (search.kind) {
      case Kind::Exhausted:
        throw SearchExhausted(n.get_str(), form, options.search_cap);
      case Kind::DivisorFound:
        return big_decided(Outcome::Composite, StageKind::DivisorFound, BigNat(search.prime));
      case Kind::ReachedInput:
        return BigVerdict{Outcome::Prime, {StageKind::ReciprocityStep, n, form}, {}};
      case Kind::Found:
        break;
    }
    const BigNat p(search.prime);
    const BigNat expected = reciprocity_expected_sign(search.prime % 4, n_mod4) > 0 ? BigNat(1) : BigNat(n - 1);
    verdict.stage = {StageKind::ReciprocityStep, p, form};
    if (powmod(p, half, n) != expected) {
      verdict.outcome = Outcome::Composite;
      verdict.witness = p;
      return verdict;
    }
  }
  verdict.outcome = Outcome::ProbablePrime;
  return verdict;
}

BigNat parse_bignat(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) throw std::invalid_argument("empty integer");
  for (const char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (base == 10 ? !std::isdigit(u) : !std::isxdigit(u)) {
      throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    }
  }
  return BigNat(std::string(text), base);
}

}  // namespace primekit
