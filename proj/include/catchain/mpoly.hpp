#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace catchain {

/// Variables of the bound polynomials: x_1, x_2, ..., y, z.
struct Variable {
  enum class Kind { x, y, z };
  Kind kind;
  unsigned index = 0;  // only meaningful for x (1-based)

  static Variable x(unsigned j) { return {Kind::x, j}; }
  static Variable y() { return {Kind::y, 0}; }
  static Variable z() { return {Kind::z, 0}; }
};

/// Exponent vector. x[j-1] is the exponent of x_j; trailing zeros are trimmed
/// so equal monomials compare equal.
struct Monomial {
  std::vector<unsigned> x;
  unsigned y = 0;
  unsigned z = 0;

  unsigned degree() const noexcept;
  unsigned exponent(Variable v) const noexcept;
  void set_exponent(Variable v, unsigned e);
  Monomial operator*(const Monomial& other) const;
  std::string to_string() const;  // "x1*x3*y", "1" for the unit monomial

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic comparison with x_1 > x_2 > ... > y > z.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const mpq_class& constant);
  MPoly(const Monomial& m, const mpq_class& coefficient);

  static MPoly variable(Variable v);
  static MPoly x(unsigned j) { return variable(Variable::x(j)); }
  static MPoly y() { return variable(Variable::y()); }
  static MPoly z() { return variable(Variable::z()); }

  const std::map<Monomial, mpq_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpq_class coefficient(const Monomial& m) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const mpq_class& scalar);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const mpq_class& s) { return a *= s; }
  friend MPoly operator*(const mpq_class& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;

  /// Replaces v by factor * v.
  MPoly scale_variable(Variable v, const mpq_class& factor) const;

  /// Sum of the terms of exact degree 1 in v, with v divided out.
  MPoly linear_coefficient(Variable v) const;

  /// Exact value at x_j = xs[j-1], y, z. Missing x values are an error.
  mpq_class evaluate(std::span<const mpq_class> xs, const mpq_class& y, const mpq_class& z) const;

  /// Canonical text, terms in decreasing graded-lex order, e.g.
  /// "3/2*x1*x2*y - x2*z + z". The zero polynomial prints as "0".
  std::string to_string() const;

  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  void add_term(const Monomial& m, const mpq_class& c);

  std::map<Monomial, mpq_class> terms_;
};

}  // namespace catchain
