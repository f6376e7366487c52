#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catchain/automaton.hpp"

namespace catchain {

/// Where each component of a catenation chain lives inside the fused NFA.
struct ChainLayout {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> offsets;  // offsets[k] = sizes[0] + ... + sizes[k-1]

  static ChainLayout from_sizes(std::vector<std::size_t> sizes);
  std::size_t alpha() const noexcept { return sizes.size(); }
  std::size_t total() const noexcept { return offsets.empty() ? 0 : offsets.back() + sizes.back(); }
};

/// A subset-construction state split per component: (S_1, ..., S_alpha).
struct ValidSequence {
  std::vector<StateSet> parts;
  friend bool operator==(const ValidSequence&, const ValidSequence&) = default;
};

struct ValidityCheck {
  bool p1 = false;  // S_1 is a singleton
  bool p2 = false;  // S_k empty forces S_{k+1} empty
  bool p3 = false;  // S_k meeting F_k forces i_{k+1} into S_{k+1}
  bool valid() const noexcept { return p1 && p2 && p3; }
};

/// Epsilon-free catenation: the left operand's transitions that land in one
/// of its finals also reach the right operand's initials.
Nfa catenate(const Nfa& a, const Nfa& b);

struct Chain {
  Nfa nfa;
  ChainLayout layout;
};

/// Left-associated fold ((A1 . A2) . A3) ... . A_alpha.
Chain chain_catenate(std::span<const Dfa> dfas);

struct Determinized {
  Dfa dfa;
  std::vector<StateSet> subsets;  // subsets[q] is the NFA subset of DFA state q
};

/// Accessible subset construction. States are numbered in BFS order with
/// letters taken in ascending order.
Determinized determinize_with_subsets(const Nfa& nfa);
Dfa determinize(const Nfa& nfa);

/// Block index of every state under language equivalence (Moore refinement).
/// Block numbers are dense and ordered by first occurrence.
std::vector<std::size_t> equivalence_classes(const Dfa& dfa);

/// Minimal DFA of the same language, renumbered by BFS from the initial
/// state with letters ascending.
Dfa minimize(const Dfa& dfa);

/// Language equality via breadth-first search over the synchronized product.
bool equivalent(const Dfa& a, const Dfa& b);

ValidSequence decode_state(const StateSet& subset, const ChainLayout& layout);
ValidityCheck check_validity(const ValidSequence& seq, std::span<const Dfa> components);

}  // namespace catchain
