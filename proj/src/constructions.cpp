#include "catchain/constructions.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace catchain {

ChainLayout ChainLayout::from_sizes(std::vector<std::size_t> sizes) {
  ChainLayout layout;
  layout.offsets.reserve(sizes.size());
  std::size_t acc = 0;
  for (std::size_t n : sizes) {
    if (n == 0) throw std::invalid_argument("chain component with no states");
    layout.offsets.push_back(acc);
    acc += n;
  }
  layout.sizes = std::move(sizes);
  return layout;
}

Nfa catenate(const Nfa& a, const Nfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw std::invalid_argument("catenation of automata over different alphabets");
  }
  const std::size_t na = a.state_count();
  const std::size_t total = na + b.state_count();
  const std::size_t k = a.alphabet_size();

  const StateSet b_initials = b.initials().embed(total, na);

  StateSet initials = a.initials().embed(total, 0);
  if (a.initials().intersects(a.finals())) initials |= b_initials;

  std::vector<StateSet> delta;
  delta.reserve(total * k);
  for (State q = 0; q < na; ++q) {
    for (Letter x = 0; x < k; ++x) {
      const StateSet& image = a.next(q, x);
      StateSet lifted = image.embed(total, 0);
      if (image.intersects(a.finals())) lifted |= b_initials;
      delta.push_back(std::move(lifted));
    }
  }
  for (State q = 0; q < b.state_count(); ++q) {
    for (Letter x = 0; x < k; ++x) delta.push_back(b.next(q, x).embed(total, na));
  }
  return Nfa(total, k, std::move(initials), b.finals().embed(total, na), std::move(delta));
}

Chain chain_catenate(std::span<const Dfa> dfas) {
  if (dfas.empty()) throw std::invalid_argument("cannot catenate an empty sequence of automata");
  std::vector<std::size_t> sizes;
  sizes.reserve(dfas.size());
  for (const auto& d : dfas) {
    if (d.alphabet_size() != dfas.front().alphabet_size()) {
      throw std::invalid_argument("catenation of automata over different alphabets");
    }
    sizes.push_back(d.state_count());
  }
  Nfa acc = dfas.front().to_nfa();
  for (std::size_t i = 1; i < dfas.size(); ++i) acc = catenate(acc, dfas[i].to_nfa());
  return Chain{std::move(acc), ChainLayout::from_sizes(std::move(sizes))};
}

Determinized determinize_with_subsets(const Nfa& nfa) {
  const std::size_t k = nfa.alphabet_size();
  std::vector<StateSet> subsets;
  std::unordered_map<StateSet, State, StateSetHash> index;
  std::vector<State> delta;
  std::vector<State> finals;

  auto intern = [&](StateSet s) -> State {
    auto [it, inserted] = index.try_emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };

  intern(nfa.initials());
  // subsets grows while we scan it, which yields BFS numbering.
  for (std::size_t current = 0; current < subsets.size(); ++current) {
    if (subsets[current].intersects(nfa.finals())) finals.push_back(static_cast<State>(current));
    for (Letter a = 0; a < k; ++a) {
      StateSet image(nfa.state_count());
      subsets[current].for_each([&](State q) { image |= nfa.next(q, a); });
      delta.push_back(intern(std::move(image)));
    }
  }
  Dfa dfa(subsets.size(), k, 0, finals, std::move(delta));
  return Determinized{std::move(dfa), std::move(subsets)};
}

Dfa determinize(const Nfa& nfa) { return determinize_with_subsets(nfa).dfa; }

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

std::vector<std::size_t> equivalence_classes(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  const std::size_t k = dfa.alphabet_size();

  std::vector<std::size_t> block(n);
  std::size_t block_count = 0;
  {
    std::size_t final_id = n, other_id = n;
    for (State q = 0; q < n; ++q) {
      std::size_t& id = dfa.is_final(q) ? final_id : other_id;
      if (id == n) id = block_count++;
      block[q] = id;
    }
  }

  std::vector<std::size_t> signature(k + 1);
  while (true) {
    std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> ids;
    std::vector<std::size_t> refined(n);
    for (State q = 0; q < n; ++q) {
      signature[0] = block[q];
      for (Letter a = 0; a < k; ++a) signature[a + 1] = block[dfa.next(q, a)];
      auto [it, inserted] = ids.try_emplace(signature, ids.size());
      refined[q] = it->second;
    }
    const std::size_t refined_count = ids.size();
    block = std::move(refined);
    // Refinement never merges blocks, so an unchanged count means a fixpoint.
    if (refined_count == block_count) break;
    block_count = refined_count;
  }
  return block;
}

Dfa minimize(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet_size();

  // Accessible part, numbered in BFS order.
  std::vector<State> old_of;
  std::vector<std::size_t> new_of(dfa.state_count(), dfa.state_count());
  old_of.push_back(dfa.initial());
  new_of[dfa.initial()] = 0;
  for (std::size_t i = 0; i < old_of.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const State r = dfa.next(old_of[i], a);
      if (new_of[r] == dfa.state_count()) {
        new_of[r] = old_of.size();
        old_of.push_back(r);
      }
    }
  }
  std::vector<State> acc_delta(old_of.size() * k);
  std::vector<State> acc_finals;
  for (std::size_t i = 0; i < old_of.size(); ++i) {
    if (dfa.is_final(old_of[i])) acc_finals.push_back(static_cast<State>(i));
    for (Letter a = 0; a < k; ++a) acc_delta[i * k + a] = static_cast<State>(new_of[dfa.next(old_of[i], a)]);
  }
  const Dfa accessible(old_of.size(), k, 0, acc_finals, std::move(acc_delta));

  const auto block = equivalence_classes(accessible);

  // Quotient, renumbered by BFS over blocks from the initial block.
  std::unordered_map<std::size_t, State> canonical;
  std::vector<State> representative;
  canonical.emplace(block[0], 0);
  representative.push_back(0);
  std::vector<State> delta;
  std::vector<State> finals;
  for (std::size_t i = 0; i < representative.size(); ++i) {
    const State rep = representative[i];
    if (accessible.is_final(rep)) finals.push_back(static_cast<State>(i));
    for (Letter a = 0; a < k; ++a) {
      const State target = accessible.next(rep, a);
      auto [it, inserted] = canonical.try_emplace(block[target], static_cast<State>(representative.size()));
      if (inserted) representative.push_back(target);
      delta.push_back(it->second);
    }
  }
  return Dfa(representative.size(), k, 0, finals, std::move(delta));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw std::invalid_argument("equivalence check over different alphabets");
  }
  auto key = [&](State p, State q) { return static_cast<std::uint64_t>(p) * b.state_count() + q; };
  std::unordered_set<std::uint64_t> seen{key(a.initial(), b.initial())};
  std::deque<std::pair<State, State>> queue{{a.initial(), b.initial()}};
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    if (a.is_final(p) != b.is_final(q)) return false;
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
      const State np = a.next(p, x);
      const State nq = b.next(q, x);
      if (seen.insert(key(np, nq)).second) queue.emplace_back(np, nq);
    }
  }
  return true;
}

ValidSequence decode_state(const StateSet& subset, const ChainLayout& layout) {
  if (subset.universe() != layout.total()) {
    throw std::invalid_argument("subset universe does not match the chain layout");
  }
  ValidSequence seq;
  seq.parts.reserve(layout.alpha());
  for (std::size_t j = 0; j < layout.alpha(); ++j) {
    seq.parts.push_back(subset.slice(layout.offsets[j], layout.sizes[j]));
  }
  return seq;
}

ValidityCheck check_validity(const ValidSequence& seq, std::span<const Dfa> components) {
  if (seq.parts.size() != components.size()) {
    throw std::invalid_argument("sequence length does not match the number of components");
  }
  ValidityCheck check;
  check.p1 = !seq.parts.empty() && seq.parts.front().count() == 1;
  check.p2 = true;
  check.p3 = true;
  for (std::size_t k = 0; k + 1 < seq.parts.size(); ++k) {
    if (seq.parts[k].empty() && !seq.parts[k + 1].empty()) check.p2 = false;
    if (seq.parts[k].intersects(components[k].finals()) &&
        !seq.parts[k + 1].contains(components[k + 1].initial())) {
      check.p3 = false;
    }
  }
  return check;
}

}  // namespace catchain
