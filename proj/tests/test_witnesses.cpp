#include <stdexcept>

#include "catchain/constructions.hpp"
#include "catchain/witnesses.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace catchain;

namespace {

Transformation action(char symbol, std::size_t n) {
  switch (symbol) {
    case 'p': return Transformation::cycle(n);
    case 't': return Transformation::transposition(n, 0, 1);
    case 'c': return Transformation::contraction(n, 1, 0);
    default: return Transformation::identity(n);
  }
}

// Rows are letters, columns are components.
void check_against_rows(const std::vector<Dfa>& fam, const std::vector<std::string>& rows) {
  REQUIRE(fam.size() == rows.front().size());
  for (std::size_t letter = 0; letter < rows.size(); ++letter) {
    for (std::size_t k = 0; k < fam.size(); ++k) {
      const std::size_t n = fam[k].state_count();
      const auto expected = action(rows[letter][k], n);
      for (State q = 0; q < n; ++q) CHECK(fam[k].next(q, static_cast<Letter>(letter)) == expected(q));
    }
  }
}

BigCount sc_of_chain(const std::vector<Dfa>& fam) { return BigCount(minimize(determinize(chain_catenate(fam).nfa)).state_count()); }

template <std::size_t N>
std::vector<Dfa> as_vector(const std::array<Dfa, N>& a) {
  return {a.begin(), a.end()};
}

}  // namespace

TEST_CASE("family names") {
  for (auto kind : {FamilyKind::table1, FamilyKind::table2, FamilyKind::two_letter, FamilyKind::three_letter})
    CHECK(parse_family(to_string(kind)) == kind);
  CHECK_FALSE(parse_family("table5").has_value());
  CHECK(family_alphabet_size(FamilyKind::table1, 3) == 4);
  CHECK(family_alphabet_size(FamilyKind::table2, 3) == 3);
}

TEST_CASE("every component is a Brzozowski automaton") {
  const auto fam = build_table1(SizeProfile({3, 4, 5}));
  for (std::size_t k = 0; k < fam.size(); ++k) {
    CHECK(fam[k].initial() == 0);
    CHECK(fam[k].finals() == StateSet(fam[k].state_count(), {static_cast<State>(fam[k].state_count() - 1)}));
  }
}

TEST_CASE("two-letter witness matches its table") {
  // rows: b, a
  check_against_rows(as_vector(build_two_letter(3, 4)), {"tc", "pp"});
  check_against_rows(as_vector(build_two_letter(2, 2)), {"tc", "pp"});
}

TEST_CASE("three-letter witness matches its table") {
  // rows: c, b, a
  check_against_rows(as_vector(build_three_letter(3, 4, 5)), {"tc1", "ptc", "1pp"});
}

TEST_CASE("table1 pattern") {
  check_against_rows(build_table1(SizeProfile({4})), {"t", "p"});
  // A_2 of (3,3,3): c, t, p, 1
  check_against_rows(build_table1(SizeProfile({3, 3, 3})), {"tc1", "ptc", "1pt", "11p"});
  check_against_rows(build_table1(SizeProfile({2, 3, 4, 5, 2})),
                     {"tc111", "ptc11", "1ptc1", "11ptc", "111pt", "1111p"});
  CHECK(build_table1(SizeProfile({3, 3, 3})).front().alphabet_size() == 4);
}

TEST_CASE("table2 pattern") {
  check_against_rows(build_table2(SizeProfile({2, 3, 4, 5})), {"tc11", "ptc1", "1ptc", "11pp"});
  CHECK_THROWS_AS(build_table2(SizeProfile({3})), std::invalid_argument);
}

TEST_CASE("family_action agrees with the built automata") {
  for (auto kind : {FamilyKind::table1, FamilyKind::table2}) {
    for (std::size_t alpha = 2; alpha <= 6; ++alpha) {
      const auto fam = build_family(kind, SizeProfile(std::vector<unsigned>(alpha, 4))).automata;
      for (std::size_t k = 0; k < alpha; ++k) {
        for (std::size_t a = 0; a < family_alphabet_size(kind, alpha); ++a) {
          const auto expected = action(family_action(kind, alpha, k, a), 4);
          for (State q = 0; q < 4; ++q) CHECK(fam[k].next(q, static_cast<Letter>(a)) == expected(q));
        }
      }
    }
  }
}

TEST_CASE("table2 reproduces the two- and three-letter witnesses") {
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned n = 2; n <= 5; ++n) {
      CHECK(build_table2(SizeProfile({m, n})) == as_vector(build_two_letter(m, n)));
      for (unsigned p = 2; p <= 4; ++p) CHECK(build_table2(SizeProfile({m, n, p})) == as_vector(build_three_letter(m, n, p)));
    }
  }
}

TEST_CASE("build_family checks arity") {
  CHECK_THROWS_AS(build_family(FamilyKind::two_letter, SizeProfile({3, 3, 3})), std::invalid_argument);
  CHECK_THROWS_AS(build_family(FamilyKind::three_letter, SizeProfile({3, 3})), std::invalid_argument);
  CHECK_THROWS_AS(build_family(FamilyKind::table2, SizeProfile({3})), std::invalid_argument);
  const auto fam = build_family(FamilyKind::three_letter, SizeProfile({2, 3, 4}));
  CHECK(fam.alphabet_size == 3);
  CHECK(fam.automata.size() == 3);
}

TEST_CASE("components are minimal") {
  for (auto kind : {FamilyKind::table1, FamilyKind::table2}) {
    for (const auto& d : build_family(kind, SizeProfile({2, 3, 4, 5, 6})).automata)
      CHECK(minimize(d).state_count() == d.state_count());
  }
}

TEST_CASE("pipeline size matches an independent simulation") {
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned n = 2; n <= 5; ++n) {
      const auto fam = as_vector(build_two_letter(m, n));
      CHECK(sc_of_chain(fam) == testing::chain_sc_by_simulation(fam));
    }
  }
  for (unsigned m = 2; m <= 3; ++m) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (unsigned p = 2; p <= 3; ++p) {
        for (const auto& fam : {as_vector(build_three_letter(m, n, p)), build_table1(SizeProfile({m, n, p}))})
          CHECK(sc_of_chain(fam) == testing::chain_sc_by_simulation(fam));
      }
    }
  }
  const auto t2 = build_table2(SizeProfile({2, 3, 2, 3}));
  CHECK(sc_of_chain(t2) == testing::chain_sc_by_simulation(t2));
}

TEST_CASE("two-letter witness attains m 2^n - 2^(n-1) when m >= 3 or n = 2") {
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned n = 2; n <= 5; ++n) {
      const BigCount expected = BigCount(m) * (BigCount(1) << n) - (BigCount(1) << (n - 1));
      const BigCount got = sc_of_chain(as_vector(build_two_letter(m, n)));
      if (m >= 3 || n == 2) {
        CHECK(got == expected);
      } else {
        // t and p coincide on two states, so A_1 sees one letter
        CHECK(got < expected);
      }
    }
  }
}

TEST_CASE("three-letter and table1 witnesses attain the recurrence when n_2 >= 3") {
  for (unsigned m = 2; m <= 3; ++m) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (unsigned p = 2; p <= 3; ++p) {
        const SizeProfile prof({m, n, p});
        const BigCount three = sc_of_chain(as_vector(build_three_letter(m, n, p)));
        const BigCount one = sc_of_chain(build_table1(prof));
        if (n >= 3) {
          CHECK(three == recurrence_count(prof));
          CHECK(one == recurrence_count(prof));
        } else {
          CHECK(three <= recurrence_count(prof));
          CHECK(one <= recurrence_count(prof));
        }
      }
    }
  }
  CHECK(sc_of_chain(as_vector(build_three_letter(2, 2, 3))) == 21);
  CHECK(sc_of_chain(build_table1(SizeProfile({3, 2, 2}))) == 22);
}
