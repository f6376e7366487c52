#pragma once

// Brzozowski witness families for multiple catenation. Every component has
// states 0..n-1, initial 0, the single final n-1, and each letter acts as
// the cycle p, the transposition t = (0,1), the contraction c = (1 -> 0) or
// the identity.
//
// Letter indexing: letter i is sigma_{i+1}. For the two- and three-letter
// witnesses the named letters follow the same row order, so
//   two_letter:   b = 0, a = 1
//   three_letter: c = 0, b = 1, a = 2
// which makes table2 at alpha = 2 and 3 byte-identical to them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "catchain/automaton.hpp"
#include "catchain/bounds.hpp"

namespace catchain {

enum class FamilyKind { table1, table2, two_letter, three_letter };

std::string to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family(const std::string& name);

/// Alphabet size used by a family at a given chain length.
std::size_t family_alphabet_size(FamilyKind kind, std::size_t alpha);

/// Action symbol ('p', 't', 'c' or '1') of letter `letter` on component
/// `component` (both 0-based) for a family of length alpha.
char family_action(FamilyKind kind, std::size_t alpha, std::size_t component, std::size_t letter);

struct WitnessFamily {
  FamilyKind kind;
  SizeProfile sizes;
  std::size_t alphabet_size;
  std::vector<Dfa> automata;
};

/// (alpha+1)-letter family: A_k has contraction on sigma_{k-1} (absent for
/// k = 1), transposition on sigma_k and the cycle on sigma_{k+1}.
std::vector<Dfa> build_table1(const SizeProfile& sizes);

/// alpha-letter family. Same as table1 for k < alpha; A_alpha has the
/// contraction on sigma_{alpha-1} and the cycle on sigma_alpha. This last
/// column is read off the alpha = 2 and alpha = 3 instances.
std::vector<Dfa> build_table2(const SizeProfile& sizes);

std::array<Dfa, 2> build_two_letter(unsigned m, unsigned n);
std::array<Dfa, 3> build_three_letter(unsigned m, unsigned n, unsigned p);

/// Builds any family, checking that alpha is compatible with the kind.
WitnessFamily build_family(FamilyKind kind, const SizeProfile& sizes);

}  // namespace catchain
