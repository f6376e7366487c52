#include "catchain/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace catchain {

// ---------------------------------------------------------------- SizeProfile

SizeProfile::SizeProfile(std::vector<unsigned> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("a size profile needs at least one component");
  for (unsigned n : sizes_) {
    if (n < 2) throw std::invalid_argument("component size " + std::to_string(n) + " is below 2");
  }
}

SizeProfile SizeProfile::parse(const std::string& text) {
  std::vector<unsigned> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid size '" + item + "'");
    }
    if (used != item.size() || item.empty() || item[0] == '-') {
      throw std::invalid_argument("invalid size '" + item + "'");
    }
    sizes.push_back(static_cast<unsigned>(value));
  }
  return SizeProfile(std::move(sizes));
}

unsigned SizeProfile::total() const noexcept {
  unsigned t = 0;
  for (unsigned n : sizes_) t += n;
  return t;
}

std::string SizeProfile::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < sizes_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(sizes_[j]);
  }
  return out;
}

// ---------------------------------------------------------------- brute force

namespace {

// Counts valid completions of components j..alpha-1, given whether S_{j-1}
// was empty and whether it contained its final state. Initial state is 0 and
// the single final is n-1.
std::uint64_t count_suffixes(const std::vector<unsigned>& sizes, std::size_t j, bool prev_empty,
                             bool prev_has_final) {
  if (j == sizes.size()) return 1;
  const unsigned n = sizes[j];
  const std::uint64_t final_bit = std::uint64_t{1} << (n - 1);
  std::uint64_t total = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    if (prev_empty && subset != 0) continue;        // P2
    if (prev_has_final && (subset & 1u) == 0) continue;  // P3
    total += count_suffixes(sizes, j + 1, subset == 0, (subset & final_bit) != 0);
  }
  return total;
}

}  // namespace

BigCount brute_force_count(const SizeProfile& profile) {
  if (profile.total() > kBruteForceMaxTotal) {
    throw BudgetExceeded("profile " + profile.to_string() + " has total size " +
                         std::to_string(profile.total()) + ", above the enumeration limit of " +
                         std::to_string(kBruteForceMaxTotal));
  }
  const auto& sizes = profile.sizes();
  std::uint64_t total = 0;
  // P1: S_1 is one of the n_1 singletons.
  for (unsigned q = 0; q < sizes[0]; ++q) {
    total += count_suffixes(sizes, 1, false, q == sizes[0] - 1);
  }
  BigCount out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(total), 0, 0, &total);
  return out;
}

// ---------------------------------------------------------------- recurrence

namespace {

BigCount pow2(unsigned e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

CrossingCounts crossing_counts(const SizeProfile& profile) {
  const auto& n = profile.sizes();
  CrossingCounts c;
  c.minus.reserve(n.size());
  c.plus.reserve(n.size());
  c.minus.emplace_back(n[0] - 1);
  c.plus.emplace_back(1);
  for (std::size_t j = 1; j < n.size(); ++j) {
    BigCount minus = (pow2(n[j] - 1) - 1) * c.minus[j - 1] + pow2(n[j] - 2) * c.plus[j - 1];
    BigCount plus = pow2(n[j] - 1) * c.minus[j - 1] + pow2(n[j] - 2) * c.plus[j - 1];
    c.minus.push_back(std::move(minus));
    c.plus.push_back(std::move(plus));
  }
  return c;
}

std::vector<BigCount> plus_counts_by_sum(const CrossingCounts& counts) {
  std::vector<BigCount> out;
  out.reserve(counts.plus.size());
  out.push_back(counts.plus.front());
  for (std::size_t j = 1; j < counts.minus.size(); ++j) out.push_back(counts.minus[j] + counts.minus[j - 1]);
  return out;
}

BigCount recurrence_count(const SizeProfile& profile) {
  const auto c = crossing_counts(profile);
  BigCount total = c.plus.back();
  for (const auto& m : c.minus) total += m;
  return total;
}

// ---------------------------------------------------------------- compositions

unsigned Composition::target() const noexcept {
  unsigned t = 0;
  for (unsigned p : parts) t += p;
  return t;
}

std::string Composition::to_string() const {
  std::string out;
  const bool wide = std::any_of(parts.begin(), parts.end(), [](unsigned p) { return p > 9; });
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

CompositionGenerator::CompositionGenerator(unsigned n) {
  if (n < 1) throw std::invalid_argument("compositions are defined for n >= 1");
  current_.assign(n, 1);
}

std::optional<Composition> CompositionGenerator::next() {
  if (done_) return std::nullopt;
  Composition out{current_};
  if (current_.size() == 1) {
    done_ = true;
  } else {
    // Lexicographic successor: (..., a, b) -> (..., a+1, 1, ..., 1) with b-1 ones.
    const unsigned b = current_.back();
    current_.pop_back();
    current_.back() += 1;
    current_.insert(current_.end(), b - 1, 1u);
  }
  return out;
}

std::vector<Composition> compositions(unsigned n) {
  std::vector<Composition> out;
  CompositionGenerator gen(n);
  while (auto c = gen.next()) out.push_back(std::move(*c));
  return out;
}

unsigned theta(const Composition& c) {
  unsigned count = 0;
  for (std::size_t j = 0; j + 1 < c.parts.size(); ++j) count += c.parts[j] == 1;
  return count;
}

unsigned theta_tilde(const Composition& c) {
  unsigned count = 0;
  for (std::size_t j = 1; j + 1 < c.parts.size(); ++j) count += c.parts[j] == 1;
  return count;
}

MPoly bracket_monomial(const Composition& c) {
  if (c.parts.empty()) return MPoly{};
  Monomial m;
  unsigned index = 1;
  m.set_exponent(Variable::x(index), 1);
  for (std::size_t j = 0; j + 1 < c.parts.size(); ++j) {
    index += c.parts[j];
    m.set_exponent(Variable::x(index), m.exponent(Variable::x(index)) + 1);
  }
  return MPoly(m, 1);
}

MPoly brace_monomial(const Composition& c) {
  Monomial m;
  unsigned index = 0;
  for (std::size_t j = 0; j + 1 < c.parts.size(); ++j) {
    index += c.parts[j];
    m.set_exponent(Variable::x(index), m.exponent(Variable::x(index)) + 1);
  }
  return MPoly(m, 1);
}

// ---------------------------------------------------------------- polynomials

namespace {

const mpq_class kHalf(1, 2);
const mpq_class kThreeHalves(3, 2);

mpq_class signed_power(unsigned sign_exponent, unsigned theta_value) {
  mpq_class out = (sign_exponent % 2 == 0) ? 1 : -1;
  for (unsigned k = 0; k < theta_value; ++k) out *= kThreeHalves;
  return out;
}

bool last_part_odd(const Composition& c) { return !c.parts.empty() && c.parts.back() % 2 == 1; }

}  // namespace

SPolynomials s_polynomials(unsigned alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  SPolynomials p;
  p.minus.push_back(MPoly::z());
  p.plus.push_back(mpq_class(2) * MPoly::y());
  for (unsigned j = 1; j < alpha; ++j) {
    const MPoly xj = MPoly::x(j);
    MPoly minus = (xj - MPoly(1)) * p.minus[j - 1] + kHalf * (xj * p.plus[j - 1]);
    MPoly plus = xj * p.minus[j - 1] + kHalf * (xj * p.plus[j - 1]);
    p.minus.push_back(std::move(minus));
    p.plus.push_back(std::move(plus));
  }
  p.s = p.plus.back();
  for (const auto& m : p.minus) p.s += m;
  p.r = alpha == 1 ? p.s : p.s.scale_variable(Variable::x(alpha - 1), kHalf);
  return p;
}

MPoly r_polynomial(unsigned alpha) { return s_polynomials(alpha).r; }

MPoly r_expanded(unsigned alpha) {
  if (alpha < 2) throw std::invalid_argument("the composition expansion of r needs alpha >= 2");
  MPoly y_part;
  for (const auto& c : compositions(alpha - 1)) {
    if (!last_part_odd(c)) continue;
    y_part += signed_power(static_cast<unsigned>(c.length()) + alpha - 1, theta(c)) * bracket_monomial(c);
  }
  MPoly z_part;
  for (const auto& c : compositions(alpha)) {
    if (!last_part_odd(c)) continue;
    z_part += signed_power(static_cast<unsigned>(c.length()) + alpha, theta_tilde(c)) * brace_monomial(c);
  }
  return MPoly::y() * y_part + MPoly::z() * z_part;
}

MPoly m_by_compositions(unsigned i) {
  if (i == 0) return MPoly{};  // [()] = 0
  MPoly out;
  for (const auto& c : compositions(i)) {
    out += signed_power(static_cast<unsigned>(c.length()) + i, theta(c)) * bracket_monomial(c);
  }
  return out;
}

std::vector<MPoly> m_by_recurrence(unsigned max_index) {
  std::vector<MPoly> m{MPoly{}};
  if (max_index >= 1) m.push_back(MPoly::x(1));
  for (unsigned i = 2; i <= max_index; ++i) {
    const MPoly xi = MPoly::x(i);
    m.push_back((kThreeHalves * xi - MPoly(1)) * m[i - 1] + kHalf * (xi * m[i - 2]));
  }
  return m;
}

MPoly z_coefficient_by_compositions(unsigned i) {
  MPoly out;
  for (const auto& c : compositions(i + 1)) {
    out += signed_power(static_cast<unsigned>(c.length()) + i + 1, theta_tilde(c)) * brace_monomial(c);
  }
  return out;
}

mpq_class evaluate_bound_polynomial(const MPoly& r, const SizeProfile& profile) {
  const auto& n = profile.sizes();
  const std::size_t alpha = n.size();
  std::vector<mpq_class> xs;
  for (std::size_t j = 1; j < alpha; ++j) {
    const unsigned exponent = (j == alpha - 1) ? n[j] : n[j] - 1;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, exponent);
    xs.emplace_back(power);
  }
  return r.evaluate(xs, kHalf, mpq_class(n[0] - 1));
}

BigCount formula_count(const SizeProfile& profile) {
  if (profile.alpha() == 1) return BigCount(profile[0]);
  const mpq_class value = evaluate_bound_polynomial(r_expanded(static_cast<unsigned>(profile.alpha())), profile);
  if (value.get_den() != 1) {
    throw std::logic_error("bound polynomial evaluated to the non-integer " + value.get_str() + " for " +
                           profile.to_string());
  }
  return value.get_num();
}

}  // namespace catchain
