#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace catchain {

using State = std::uint32_t;
using Letter = std::uint32_t;

// Fixed-universe bitset over states 0..universe-1.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);
  StateSet(std::size_t universe, std::initializer_list<State> members);

  static StateSet from_vector(std::size_t universe, const std::vector<State>& members);

  std::size_t universe() const noexcept { return universe_; }

  void insert(State q);
  void erase(State q);
  bool contains(State q) const noexcept {
    return q < universe_ && ((words_[q >> 6] >> (q & 63)) & 1u) != 0;
  }

  bool empty() const noexcept;
  std::size_t count() const noexcept;
  bool intersects(const StateSet& other) const;

  StateSet& operator|=(const StateSet& other);

  // Members in [first, first+length) shifted down by first.
  StateSet slice(std::size_t first, std::size_t length) const;
  // Copy of this set placed at offset inside a larger universe.
  StateSet embed(std::size_t universe, std::size_t offset) const;

  std::vector<State> to_vector() const;
  std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<State>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const StateSet&, const StateSet&) = default;
  friend auto operator<=>(const StateSet& a, const StateSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace catchain
