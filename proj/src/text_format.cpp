#include "catchain/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace catchain {

std::string to_text(const Dfa& dfa) {
  std::ostringstream os;
  os << "dfa " << dfa.state_count() << ' ' << dfa.alphabet_size() << '\n';
  os << "initial " << dfa.initial() << '\n';
  os << "finals";
  dfa.finals().for_each([&](State f) { os << ' ' << f; });
  os << '\n';
  for (State q = 0; q < dfa.state_count(); ++q) {
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      os << "trans " << q << ' ' << a << ' ' << dfa.next(q, a) << '\n';
    }
  }
  return os.str();
}

std::string to_text(const Nfa& nfa) {
  std::ostringstream os;
  os << "nfa " << nfa.state_count() << ' ' << nfa.alphabet_size() << '\n';
  os << "initials";
  nfa.initials().for_each([&](State q) { os << ' ' << q; });
  os << '\n';
  os << "finals";
  nfa.finals().for_each([&](State f) { os << ' ' << f; });
  os << '\n';
  for (State q = 0; q < nfa.state_count(); ++q) {
    for (Letter a = 0; a < nfa.alphabet_size(); ++a) {
      nfa.next(q, a).for_each([&](State r) { os << "trans " << q << ' ' << a << ' ' << r << '\n'; });
    }
  }
  return os.str();
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
      if (end > pos) parsed.tokens.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

std::size_t to_index(const Line& line, std::string_view token) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

State to_state(const Line& line, std::string_view token, std::size_t state_count) {
  const std::size_t q = to_index(line, token);
  if (q >= state_count) throw ParseError(line.number, "state " + std::to_string(q) + " out of range");
  return static_cast<State>(q);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, "'" + std::string(line.tokens[0]) + "' expects " +
                                      std::to_string(n - 1) + " arguments");
  }
}

struct Header {
  bool deterministic;
  std::size_t states;
  std::size_t letters;
};

Header parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "empty automaton description");
  const Line& first = lines.front();
  if (first.tokens[0] != "dfa" && first.tokens[0] != "nfa") {
    throw ParseError(first.number, "expected 'dfa' or 'nfa' header");
  }
  expect_arity(first, 3);
  Header h{first.tokens[0] == "dfa", to_index(first, first.tokens[1]), to_index(first, first.tokens[2])};
  if (h.states == 0 || h.letters == 0) throw ParseError(first.number, "sizes must be positive");
  return h;
}

Dfa build_dfa(const Header& h, const std::vector<Line>& lines) {
  std::optional<State> initial;
  std::vector<State> finals;
  bool saw_finals = false;
  std::vector<std::optional<State>> delta(h.states * h.letters);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto key = line.tokens[0];
    if (key == "initial") {
      expect_arity(line, 2);
      if (initial) throw ParseError(line.number, "duplicate 'initial'");
      initial = to_state(line, line.tokens[1], h.states);
    } else if (key == "finals") {
      if (saw_finals) throw ParseError(line.number, "duplicate 'finals'");
      saw_finals = true;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) finals.push_back(to_state(line, line.tokens[t], h.states));
    } else if (key == "trans") {
      expect_arity(line, 4);
      const State q = to_state(line, line.tokens[1], h.states);
      const std::size_t a = to_index(line, line.tokens[2]);
      if (a >= h.letters) throw ParseError(line.number, "letter " + std::to_string(a) + " out of range");
      const State r = to_state(line, line.tokens[3], h.states);
      auto& slot = delta[q * h.letters + a];
      if (slot && *slot != r) throw ParseError(line.number, "nondeterministic transition in a dfa");
      slot = r;
    } else {
      throw ParseError(line.number, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!initial) throw ParseError(lines.back().number, "missing 'initial'");
  if (!saw_finals) throw ParseError(lines.back().number, "missing 'finals'");
  std::vector<State> table(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (!delta[i]) {
      throw ParseError(lines.back().number, "missing transition for state " + std::to_string(i / h.letters) +
                                                " letter " + std::to_string(i % h.letters));
    }
    table[i] = *delta[i];
  }
  return Dfa(h.states, h.letters, *initial, finals, std::move(table));
}

Nfa build_nfa(const Header& h, const std::vector<Line>& lines) {
  StateSet initials(h.states);
  StateSet finals(h.states);
  bool saw_initials = false;
  bool saw_finals = false;
  std::vector<StateSet> delta(h.states * h.letters, StateSet(h.states));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto key = line.tokens[0];
    if (key == "initials") {
      if (saw_initials) throw ParseError(line.number, "duplicate 'initials'");
      saw_initials = true;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) initials.insert(to_state(line, line.tokens[t], h.states));
    } else if (key == "finals") {
      if (saw_finals) throw ParseError(line.number, "duplicate 'finals'");
      saw_finals = true;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) finals.insert(to_state(line, line.tokens[t], h.states));
    } else if (key == "trans") {
      expect_arity(line, 4);
      const State q = to_state(line, line.tokens[1], h.states);
      const std::size_t a = to_index(line, line.tokens[2]);
      if (a >= h.letters) throw ParseError(line.number, "letter " + std::to_string(a) + " out of range");
      delta[q * h.letters + a].insert(to_state(line, line.tokens[3], h.states));
    } else {
      throw ParseError(line.number, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!saw_initials) throw ParseError(lines.back().number, "missing 'initials'");
  if (!saw_finals) throw ParseError(lines.back().number, "missing 'finals'");
  try {
    return Nfa(h.states, h.letters, std::move(initials), std::move(finals), std::move(delta));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.back().number, e.what());
  }
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = parse_header(lines);
  if (!h.deterministic) throw ParseError(lines.front().number, "expected a dfa, found an nfa");
  return build_dfa(h, lines);
}

Nfa parse_nfa(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = parse_header(lines);
  if (h.deterministic) throw ParseError(lines.front().number, "expected an nfa, found a dfa");
  return build_nfa(h, lines);
}

std::variant<Dfa, Nfa> parse_automaton(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = parse_header(lines);
  if (h.deterministic) return build_dfa(h, lines);
  return build_nfa(h, lines);
}

}  // namespace catchain
