#include "catchain/witnesses.hpp"

#include <stdexcept>

namespace catchain {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::table1: return "table1";
    case FamilyKind::table2: return "table2";
    case FamilyKind::two_letter: return "two_letter";
    case FamilyKind::three_letter: return "three_letter";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family(const std::string& name) {
  if (name == "table1") return FamilyKind::table1;
  if (name == "table2") return FamilyKind::table2;
  if (name == "two_letter") return FamilyKind::two_letter;
  if (name == "three_letter") return FamilyKind::three_letter;
  return std::nullopt;
}

namespace {

void check_alpha(FamilyKind kind, std::size_t alpha) {
  switch (kind) {
    case FamilyKind::table1:
      if (alpha < 1) throw std::invalid_argument("table1 needs at least one automaton");
      return;
    case FamilyKind::table2:
      if (alpha < 2) throw std::invalid_argument("table2 needs at least two automata");
      return;
    case FamilyKind::two_letter:
      if (alpha != 2) {
        throw std::invalid_argument("two_letter builds exactly 2 automata, got " + std::to_string(alpha));
      }
      return;
    case FamilyKind::three_letter:
      if (alpha != 3) {
        throw std::invalid_argument("three_letter builds exactly 3 automata, got " + std::to_string(alpha));
      }
      return;
  }
}

Transformation action_transformation(char symbol, std::size_t n) {
  switch (symbol) {
    case 'p': return Transformation::cycle(n);
    case 't': return Transformation::transposition(n, 0, 1);
    case 'c': return Transformation::contraction(n, 1, 0);
    default: return Transformation::identity(n);
  }
}

std::vector<Dfa> build(FamilyKind kind, const SizeProfile& sizes) {
  const std::size_t alpha = sizes.alpha();
  check_alpha(kind, alpha);
  const std::size_t letters = family_alphabet_size(kind, alpha);
  std::vector<Dfa> out;
  out.reserve(alpha);
  for (std::size_t k = 0; k < alpha; ++k) {
    const std::size_t n = sizes[k];
    std::vector<Transformation> actions;
    actions.reserve(letters);
    for (std::size_t a = 0; a < letters; ++a) actions.push_back(action_transformation(family_action(kind, alpha, k, a), n));
    out.push_back(dfa_from_transformations(n, actions, 0, {static_cast<State>(n - 1)}));
  }
  return out;
}

}  // namespace

std::size_t family_alphabet_size(FamilyKind kind, std::size_t alpha) {
  return kind == FamilyKind::table1 ? alpha + 1 : alpha;
}

char family_action(FamilyKind kind, std::size_t alpha, std::size_t component, std::size_t letter) {
  check_alpha(kind, alpha);
  if (component >= alpha || letter >= family_alphabet_size(kind, alpha)) {
    throw std::out_of_range("component or letter outside the family table");
  }
  const bool last_without_transposition = kind != FamilyKind::table1 && component + 1 == alpha;
  if (component >= 1 && letter == component - 1) return 'c';
  if (last_without_transposition) {
    if (letter == component) return 'p';
    return '1';
  }
  if (letter == component) return 't';
  if (letter == component + 1) return 'p';
  return '1';
}

std::vector<Dfa> build_table1(const SizeProfile& sizes) { return build(FamilyKind::table1, sizes); }

std::vector<Dfa> build_table2(const SizeProfile& sizes) { return build(FamilyKind::table2, sizes); }

std::array<Dfa, 2> build_two_letter(unsigned m, unsigned n) {
  auto v = build(FamilyKind::two_letter, SizeProfile({m, n}));
  return {std::move(v[0]), std::move(v[1])};
}

std::array<Dfa, 3> build_three_letter(unsigned m, unsigned n, unsigned p) {
  auto v = build(FamilyKind::three_letter, SizeProfile({m, n, p}));
  return {std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

WitnessFamily build_family(FamilyKind kind, const SizeProfile& sizes) {
  auto automata = build(kind, sizes);
  return WitnessFamily{kind, sizes, family_alphabet_size(kind, sizes.alpha()), std::move(automata)};
}

}  // namespace catchain
