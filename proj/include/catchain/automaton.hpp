#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "catchain/state_set.hpp"

namespace catchain {

enum class TransformationKind { cycle, rotation, transposition, contraction, identity, explicit_map };

/// A total self-map of {0..n-1}. Structured kinds keep their tag for printing,
/// but application always goes through the image table.
class Transformation {
 public:
  static Transformation cycle(std::size_t n);
  static Transformation rotation(std::size_t n, std::size_t k);
  static Transformation transposition(std::size_t n, State i, State j);
  /// Maps `from` onto `to` and fixes every other state.
  static Transformation contraction(std::size_t n, State from, State to);
  static Transformation identity(std::size_t n);
  static Transformation from_images(std::vector<State> images);

  std::size_t size() const noexcept { return images_.size(); }
  State operator()(State q) const { return images_.at(q); }
  const std::vector<State>& images() const noexcept { return images_; }
  TransformationKind kind() const noexcept { return kind_; }
  bool is_permutation() const;

  /// Short symbol: p (cycle), t (transposition), c (contraction), 1 (identity),
  /// r<k> (rotation) or the bracketed image list.
  std::string symbol() const;

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.images_ == b.images_;
  }

 private:
  Transformation(TransformationKind kind, std::vector<State> images, std::size_t param = 0)
      : kind_(kind), images_(std::move(images)), param_(param) {}

  TransformationKind kind_;
  std::vector<State> images_;
  std::size_t param_;
};

class Nfa;

/// Complete deterministic automaton. delta is stored row-major by state.
class Dfa {
 public:
  Dfa(std::size_t state_count, std::size_t alphabet_size, State initial,
      const std::vector<State>& finals, std::vector<State> delta);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  State initial() const noexcept { return initial_; }
  const StateSet& finals() const noexcept { return finals_; }
  bool is_final(State q) const noexcept { return finals_.contains(q); }

  State next(State q, Letter a) const { return delta_[q * alphabet_size_ + a]; }
  const std::vector<State>& delta() const noexcept { return delta_; }

  Nfa to_nfa() const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t state_count_;
  std::size_t alphabet_size_;
  State initial_;
  StateSet finals_;
  std::vector<State> delta_;
};

/// Complete nondeterministic automaton without epsilon moves.
class Nfa {
 public:
  Nfa(std::size_t state_count, std::size_t alphabet_size, StateSet initials, StateSet finals,
      std::vector<StateSet> delta);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  const StateSet& initials() const noexcept { return initials_; }
  const StateSet& finals() const noexcept { return finals_; }
  const StateSet& next(State q, Letter a) const { return delta_[q * alphabet_size_ + a]; }

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  std::size_t state_count_;
  std::size_t alphabet_size_;
  StateSet initials_;
  StateSet finals_;
  std::vector<StateSet> delta_;
};

/// Letter i of the alphabet acts on the states as letter_actions[i].
Dfa dfa_from_transformations(std::size_t n, std::span<const Transformation> letter_actions,
                             State initial, const std::vector<State>& finals);

State run_word(const Dfa& dfa, std::span<const Letter> word);
State run_word_from(const Dfa& dfa, State start, std::span<const Letter> word);
bool accepts(const Dfa& dfa, std::span<const Letter> word);

StateSet run_word(const Nfa& nfa, std::span<const Letter> word);
bool accepts(const Nfa& nfa, std::span<const Letter> word);

StateSet accessible_states(const Dfa& dfa);
StateSet accessible_states(const Nfa& nfa);

}  // namespace catchain
