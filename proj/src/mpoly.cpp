#include "catchain/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catchain {

namespace {

void trim(std::vector<unsigned>& x) {
  while (!x.empty() && x.back() == 0) x.pop_back();
}

}  // namespace

unsigned Monomial::degree() const noexcept {
  unsigned d = y + z;
  for (unsigned e : x) d += e;
  return d;
}

unsigned Monomial::exponent(Variable v) const noexcept {
  switch (v.kind) {
    case Variable::Kind::y: return y;
    case Variable::Kind::z: return z;
    case Variable::Kind::x: break;
  }
  if (v.index == 0 || v.index > x.size()) return 0;
  return x[v.index - 1];
}

void Monomial::set_exponent(Variable v, unsigned e) {
  switch (v.kind) {
    case Variable::Kind::y: y = e; return;
    case Variable::Kind::z: z = e; return;
    case Variable::Kind::x: break;
  }
  if (v.index == 0) throw std::invalid_argument("x variables are indexed from 1");
  if (x.size() < v.index) x.resize(v.index, 0);
  x[v.index - 1] = e;
  trim(x);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.x.resize(std::max(x.size(), other.x.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out.x[i] += x[i];
  for (std::size_t i = 0; i < other.x.size(); ++i) out.x[i] += other.x[i];
  out.y = y + other.y;
  out.z = z + other.z;
  trim(out.x);
  return out;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto factor = [&](const std::string& name, unsigned e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << name;
    if (e > 1) os << '^' << e;
  };
  for (std::size_t i = 0; i < x.size(); ++i) factor("x" + std::to_string(i + 1), x[i]);
  factor("y", y);
  factor("z", z);
  if (first) return "1";
  return os.str();
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const std::size_t len = std::max(a.x.size(), b.x.size());
  for (std::size_t i = 0; i < len; ++i) {
    const unsigned ea = i < a.x.size() ? a.x[i] : 0;
    const unsigned eb = i < b.x.size() ? b.x[i] : 0;
    if (ea != eb) return ea > eb;
  }
  if (a.y != b.y) return a.y > b.y;
  return a.z > b.z;
}

MPoly::MPoly(const mpq_class& constant) { add_term(Monomial{}, constant); }

MPoly::MPoly(const Monomial& m, const mpq_class& coefficient) { add_term(m, coefficient); }

MPoly MPoly::variable(Variable v) {
  Monomial m;
  m.set_exponent(v, 1);
  return MPoly(m, 1);
}

mpq_class MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::scale_variable(Variable v, const mpq_class& factor) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    mpq_class scaled = c;
    for (unsigned e = m.exponent(v); e > 0; --e) scaled *= factor;
    out.add_term(m, scaled);
  }
  return out;
}

MPoly MPoly::linear_coefficient(Variable v) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != 1) continue;
    Monomial reduced = m;
    reduced.set_exponent(v, 0);
    out.add_term(reduced, c);
  }
  return out;
}

mpq_class MPoly::evaluate(std::span<const mpq_class> xs, const mpq_class& y, const mpq_class& z) const {
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    if (m.x.size() > xs.size()) {
      throw std::invalid_argument("no value supplied for x" + std::to_string(m.x.size()));
    }
    mpq_class term = c;
    for (std::size_t i = 0; i < m.x.size(); ++i) {
      for (unsigned e = 0; e < m.x[i]; ++e) term *= xs[i];
    }
    for (unsigned e = 0; e < m.y; ++e) term *= y;
    for (unsigned e = 0; e < m.z; ++e) term *= z;
    total += term;
  }
  return total;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, mpq_class>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return grlex_greater(a->first, b->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : ordered) {
    const Monomial& m = t->first;
    mpq_class c = t->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = m.degree() == 0;
    if (unit_monomial) {
      os << c.get_str();
    } else if (c == 1) {
      os << m.to_string();
    } else {
      os << c.get_str() << '*' << m.to_string();
    }
  }
  return os.str();
}

}  // namespace catchain
