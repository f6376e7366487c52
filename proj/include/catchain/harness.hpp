#pragma once

#include <functional>
#include <vector>

#include "catchain/report.hpp"

namespace catchain {

/// Default cap on the total size sum(n_j) of a verified chain; the subset
/// space is bounded by 2^total.
inline constexpr unsigned kDefaultBudget = 22;

struct BoundMethods {
  bool brute = false;
  bool recurrence = true;
  bool formula = true;
};

/// Fills the requested bound fields. status is bound_only, or inconsistent
/// when the methods disagree. Throws BudgetExceeded if brute force is
/// requested beyond its limit.
CountReport bound_report(const SizeProfile& profile, const BoundMethods& methods);

struct VerifyOptions {
  unsigned budget = kDefaultBudget;
  /// Brute-force bound is added when the total size is at most this.
  unsigned brute_force_limit = 16;
};

/// Builds the family, chains it, determinizes, checks every reachable state
/// against P1-P3, minimizes, and compares with the bound. Throws
/// BudgetExceeded beyond the budget and std::invalid_argument when the
/// family does not fit alpha.
CountReport verify_family(FamilyKind kind, const SizeProfile& profile, const VerifyOptions& options = {});

struct GridSpec {
  FamilyKind family = FamilyKind::table2;
  unsigned alpha_min = 2;
  unsigned alpha_max = 2;
  unsigned size_min = 2;
  unsigned size_max = 2;
  unsigned budget = kDefaultBudget;
  unsigned jobs = 1;
  unsigned brute_force_limit = 16;
};

/// Every profile of the grid, ordered by alpha and then lexicographically.
std::vector<SizeProfile> grid_profiles(const GridSpec& spec);

struct GridSummary {
  std::size_t attained = 0;
  std::size_t missed = 0;
  std::size_t skipped = 0;
  std::size_t inconsistent = 0;
};

/// Runs every profile, possibly on several threads, and hands reports to
/// `emit` on the calling thread in grid_profiles() order. Budget and arity
/// problems become skipped reports.
GridSummary run_grid(const GridSpec& spec, const std::function<void(const CountReport&)>& emit);

}  // namespace catchain
