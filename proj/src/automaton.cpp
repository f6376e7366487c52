#include "catchain/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace catchain {

namespace {

void require_state(std::size_t n, State q, const char* what) {
  if (q >= n) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(q) +
                                " out of range for " + std::to_string(n) + " states");
  }
}

void require_letter(std::size_t k, Letter a) {
  if (a >= k) {
    throw std::out_of_range("letter " + std::to_string(a) + " out of range for alphabet of size " +
                            std::to_string(k));
  }
}

}  // namespace

// ---------------------------------------------------------------- Transformation

Transformation Transformation::cycle(std::size_t n) {
  Transformation t = rotation(n, 1);
  t.kind_ = TransformationKind::cycle;
  return t;
}

Transformation Transformation::rotation(std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("transformation size must be positive");
  std::vector<State> images(n);
  for (std::size_t q = 0; q < n; ++q) images[q] = static_cast<State>((q + k) % n);
  return Transformation(TransformationKind::rotation, std::move(images), k % n);
}

Transformation Transformation::transposition(std::size_t n, State i, State j) {
  if (n == 0) throw std::invalid_argument("transformation size must be positive");
  require_state(n, i, "transposition index");
  require_state(n, j, "transposition index");
  if (i == j) throw std::invalid_argument("transposition needs two distinct states");
  std::vector<State> images(n);
  for (std::size_t q = 0; q < n; ++q) images[q] = static_cast<State>(q);
  std::swap(images[i], images[j]);
  return Transformation(TransformationKind::transposition, std::move(images));
}

Transformation Transformation::contraction(std::size_t n, State from, State to) {
  if (n == 0) throw std::invalid_argument("transformation size must be positive");
  require_state(n, from, "contraction index");
  require_state(n, to, "contraction index");
  if (from == to) throw std::invalid_argument("contraction needs two distinct states");
  std::vector<State> images(n);
  for (std::size_t q = 0; q < n; ++q) images[q] = static_cast<State>(q);
  images[from] = to;
  return Transformation(TransformationKind::contraction, std::move(images));
}

Transformation Transformation::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("transformation size must be positive");
  std::vector<State> images(n);
  for (std::size_t q = 0; q < n; ++q) images[q] = static_cast<State>(q);
  return Transformation(TransformationKind::identity, std::move(images));
}

Transformation Transformation::from_images(std::vector<State> images) {
  if (images.empty()) throw std::invalid_argument("transformation size must be positive");
  for (State q : images) require_state(images.size(), q, "image");
  return Transformation(TransformationKind::explicit_map, std::move(images));
}

bool Transformation::is_permutation() const {
  std::vector<State> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t q = 0; q < sorted.size(); ++q) {
    if (sorted[q] != q) return false;
  }
  return true;
}

std::string Transformation::symbol() const {
  switch (kind_) {
    case TransformationKind::cycle: return "p";
    case TransformationKind::transposition: return "t";
    case TransformationKind::contraction: return "c";
    case TransformationKind::identity: return "1";
    case TransformationKind::rotation: return "r" + std::to_string(param_);
    case TransformationKind::explicit_map: break;
  }
  std::ostringstream os;
  os << '[';
  for (std::size_t q = 0; q < images_.size(); ++q) os << (q ? "," : "") << images_[q];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Dfa / Nfa

Dfa::Dfa(std::size_t state_count, std::size_t alphabet_size, State initial,
         const std::vector<State>& finals, std::vector<State> delta)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      initial_(initial),
      finals_(state_count),
      delta_(std::move(delta)) {
  if (state_count == 0) throw std::invalid_argument("a DFA needs at least one state");
  if (alphabet_size == 0) throw std::invalid_argument("a DFA needs a non-empty alphabet");
  require_state(state_count, initial, "initial state");
  for (State f : finals) {
    require_state(state_count, f, "final state");
    finals_.insert(f);
  }
  if (delta_.size() != state_count * alphabet_size) {
    throw std::invalid_argument("DFA transition table is incomplete");
  }
  for (State q : delta_) require_state(state_count, q, "transition target");
}

Nfa Dfa::to_nfa() const {
  std::vector<StateSet> delta;
  delta.reserve(delta_.size());
  for (State q : delta_) delta.push_back(StateSet(state_count_, {q}));
  return Nfa(state_count_, alphabet_size_, StateSet(state_count_, {initial_}), finals_, std::move(delta));
}

Nfa::Nfa(std::size_t state_count, std::size_t alphabet_size, StateSet initials, StateSet finals,
         std::vector<StateSet> delta)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      initials_(std::move(initials)),
      finals_(std::move(finals)),
      delta_(std::move(delta)) {
  if (state_count == 0) throw std::invalid_argument("an NFA needs at least one state");
  if (alphabet_size == 0) throw std::invalid_argument("an NFA needs a non-empty alphabet");
  if (initials_.universe() != state_count || finals_.universe() != state_count) {
    throw std::invalid_argument("NFA initial/final sets sized for a different state count");
  }
  if (initials_.empty()) throw std::invalid_argument("an NFA needs at least one initial state");
  if (delta_.size() != state_count * alphabet_size) {
    throw std::invalid_argument("NFA transition table has the wrong shape");
  }
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (delta_[i].universe() != state_count) {
      throw std::invalid_argument("NFA transition image sized for a different state count");
    }
    if (delta_[i].empty()) {
      throw std::invalid_argument("NFA is not complete: state " + std::to_string(i / alphabet_size) +
                                  " has no image under letter " + std::to_string(i % alphabet_size));
    }
  }
}

Dfa dfa_from_transformations(std::size_t n, std::span<const Transformation> letter_actions,
                             State initial, const std::vector<State>& finals) {
  if (letter_actions.empty()) throw std::invalid_argument("at least one letter action is required");
  for (const auto& t : letter_actions) {
    if (t.size() != n) {
      throw std::invalid_argument("letter action of size " + std::to_string(t.size()) +
                                  " does not match automaton size " + std::to_string(n));
    }
  }
  const std::size_t k = letter_actions.size();
  std::vector<State> delta(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < k; ++a) delta[q * k + a] = letter_actions[a](static_cast<State>(q));
  }
  return Dfa(n, k, initial, finals, std::move(delta));
}

// ---------------------------------------------------------------- runs

State run_word_from(const Dfa& dfa, State start, std::span<const Letter> word) {
  require_state(dfa.state_count(), start, "start state");
  State q = start;
  for (Letter a : word) {
    require_letter(dfa.alphabet_size(), a);
    q = dfa.next(q, a);
  }
  return q;
}

State run_word(const Dfa& dfa, std::span<const Letter> word) {
  return run_word_from(dfa, dfa.initial(), word);
}

bool accepts(const Dfa& dfa, std::span<const Letter> word) { return dfa.is_final(run_word(dfa, word)); }

StateSet run_word(const Nfa& nfa, std::span<const Letter> word) {
  StateSet current = nfa.initials();
  for (Letter a : word) {
    require_letter(nfa.alphabet_size(), a);
    StateSet next(nfa.state_count());
    current.for_each([&](State q) { next |= nfa.next(q, a); });
    current = std::move(next);
  }
  return current;
}

bool accepts(const Nfa& nfa, std::span<const Letter> word) {
  return run_word(nfa, word).intersects(nfa.finals());
}

StateSet accessible_states(const Dfa& dfa) {
  StateSet seen(dfa.state_count(), {dfa.initial()});
  std::deque<State> queue{dfa.initial()};
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      const State r = dfa.next(q, a);
      if (!seen.contains(r)) {
        seen.insert(r);
        queue.push_back(r);
      }
    }
  }
  return seen;
}

StateSet accessible_states(const Nfa& nfa) {
  StateSet seen = nfa.initials();
  std::deque<State> queue;
  seen.for_each([&](State q) { queue.push_back(q); });
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < nfa.alphabet_size(); ++a) {
      nfa.next(q, a).for_each([&](State r) {
        if (!seen.contains(r)) {
          seen.insert(r);
          queue.push_back(r);
        }
      });
    }
  }
  return seen;
}

}  // namespace catchain
