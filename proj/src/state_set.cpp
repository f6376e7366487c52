#include "catchain/state_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catchain {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

StateSet::StateSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members) : StateSet(universe) {
  for (State q : members) insert(q);
}

StateSet StateSet::from_vector(std::size_t universe, const std::vector<State>& members) {
  StateSet s(universe);
  for (State q : members) s.insert(q);
  return s;
}

void StateSet::insert(State q) {
  if (q >= universe_) {
    throw std::out_of_range("state " + std::to_string(q) + " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[q >> 6] |= std::uint64_t{1} << (q & 63);
}

void StateSet::erase(State q) {
  if (q < universe_) words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
}

bool StateSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t StateSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool StateSet::intersects(const StateSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  if (other.universe_ != universe_) {
    throw std::invalid_argument("state set union over different universes");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

StateSet StateSet::slice(std::size_t first, std::size_t length) const {
  if (first + length > universe_) throw std::out_of_range("state set slice out of range");
  StateSet out(length);
  for (std::size_t q = 0; q < length; ++q) {
    if (contains(static_cast<State>(first + q))) out.insert(static_cast<State>(q));
  }
  return out;
}

StateSet StateSet::embed(std::size_t universe, std::size_t offset) const {
  if (offset + universe_ > universe) throw std::out_of_range("state set embedding out of range");
  StateSet out(universe);
  for_each([&](State q) { out.insert(static_cast<State>(q + offset)); });
  return out;
}

std::vector<State> StateSet::to_vector() const {
  std::vector<State> out;
  out.reserve(count());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::string StateSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](State q) {
    if (!first) os << ',';
    os << q;
    first = false;
  });
  os << '}';
  return os.str();
}

std::size_t StateSet::hash() const noexcept {
  // FNV-1a over the words, mixed with the universe size.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace catchain
