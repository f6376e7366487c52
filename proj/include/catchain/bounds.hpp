#pragma once

// Exact upper bound on the number of reachable subset states of a catenation
// chain of alpha DFAs, computed three ways:
//
//   brute_force_count   enumerate every tuple (S_1..S_alpha) and test P1-P3
//   recurrence_count    crossing recurrence on the minus/plus prefix counts
//   formula_count       composition expansion of r_{alpha-1}, evaluated
//
// All three must agree exactly.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catchain/mpoly.hpp"

namespace catchain {

using BigCount = mpz_class;

/// Component sizes (n_1, ..., n_alpha), each at least 2.
class SizeProfile {
 public:
  explicit SizeProfile(std::vector<unsigned> sizes);

  /// Parses "3,4,5".
  static SizeProfile parse(const std::string& text);

  const std::vector<unsigned>& sizes() const noexcept { return sizes_; }
  std::size_t alpha() const noexcept { return sizes_.size(); }
  unsigned operator[](std::size_t j) const { return sizes_.at(j); }
  unsigned total() const noexcept;
  std::string to_string() const;  // "3,4,5"

  friend auto operator<=>(const SizeProfile&, const SizeProfile&) = default;
  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;

 private:
  std::vector<unsigned> sizes_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest total size the enumerator accepts.
inline constexpr unsigned kBruteForceMaxTotal = 24;

BigCount brute_force_count(const SizeProfile& profile);

/// #T^-_j and #T^+_j for j = 1..alpha (stored 0-based).
struct CrossingCounts {
  std::vector<BigCount> minus;
  std::vector<BigCount> plus;
};

CrossingCounts crossing_counts(const SizeProfile& profile);

/// The plus count from the sum form #T^-_j + #T^-_{j-1}; must match
/// crossing_counts().plus, which uses the power-of-two combination.
std::vector<BigCount> plus_counts_by_sum(const CrossingCounts& counts);

BigCount recurrence_count(const SizeProfile& profile);

// ---------------------------------------------------------------- compositions

/// Ordered list of positive parts summing to target.
struct Composition {
  std::vector<unsigned> parts;

  unsigned target() const noexcept;
  std::size_t length() const noexcept { return parts.size(); }
  std::string to_string() const;  // "212113"

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Iterates the 2^(n-1) compositions of n in lexicographic order of parts,
/// from (1,...,1) up to (n).
class CompositionGenerator {
 public:
  explicit CompositionGenerator(unsigned n);
  std::optional<Composition> next();

 private:
  std::vector<unsigned> current_;
  bool done_ = false;
};

std::vector<Composition> compositions(unsigned n);

/// Unit parts among c_1..c_{l-1}.
unsigned theta(const Composition& c);
/// Unit parts among c_2..c_{l-1}.
unsigned theta_tilde(const Composition& c);

/// [c] = x_1 x_{1+c_1} ... x_{1+c_1+...+c_{l-1}}; the empty composition gives 0.
MPoly bracket_monomial(const Composition& c);
/// {c} = x_{c_1} x_{c_1+c_2} ... x_{c_1+...+c_{l-1}}; a single part gives 1.
MPoly brace_monomial(const Composition& c);

// ---------------------------------------------------------------- polynomials

struct SPolynomials {
  std::vector<MPoly> minus;  // s^-_0 .. s^-_{alpha-1}
  std::vector<MPoly> plus;   // s^+_0 .. s^+_{alpha-1}
  MPoly s;                   // s_{alpha-1}
  MPoly r;                   // s_{alpha-1} with x_{alpha-1} -> x_{alpha-1}/2
};

SPolynomials s_polynomials(unsigned alpha);

/// r_{alpha-1} from the s recurrences.
MPoly r_polynomial(unsigned alpha);

/// r_{alpha-1} summed directly over compositions whose last part is odd.
/// Requires alpha >= 2.
MPoly r_expanded(unsigned alpha);

/// m_i as the signed composition sum over c |= i.
MPoly m_by_compositions(unsigned i);
/// m_0 .. m_max from m_i = (3/2 x_i - 1) m_{i-1} + 1/2 x_i m_{i-2}.
std::vector<MPoly> m_by_recurrence(unsigned max_index);

/// z-coefficient of s^-_i as the composition sum over c |= i+1 with theta_tilde and {c}.
MPoly z_coefficient_by_compositions(unsigned i);

/// Evaluates r_{alpha-1} (composition route) at x_j = 2^{n_{j+1}-1} for
/// j < alpha-1, x_{alpha-1} = 2^{n_alpha}, y = 1/2, z = n_1 - 1.
/// A non-integral value is an internal error and throws std::logic_error.
BigCount formula_count(const SizeProfile& profile);

/// Same substitution applied to an arbitrary r polynomial.
mpq_class evaluate_bound_polynomial(const MPoly& r, const SizeProfile& profile);

}  // namespace catchain
