#pragma once

// Plain-text automaton files:
//
//   dfa <state_count> <alphabet_size>
//   initial <i>
//   finals <f1> <f2> ...
//   trans <state> <letter> <state>
//
// NFAs use the `nfa` header, an `initials` line, and one `trans` line per
// target. `#` starts a comment that runs to the end of the line.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "catchain/automaton.hpp"

namespace catchain {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

std::string to_text(const Dfa& dfa);
std::string to_text(const Nfa& nfa);

Dfa parse_dfa(std::string_view text);
Nfa parse_nfa(std::string_view text);
std::variant<Dfa, Nfa> parse_automaton(std::string_view text);

}  // namespace catchain
