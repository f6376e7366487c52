#include "catchain/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "catchain/constructions.hpp"

namespace catchain {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

CountReport bound_report(const SizeProfile& profile, const BoundMethods& methods) {
  const auto start = Clock::now();
  CountReport r;
  r.profile = profile;
  if (methods.brute) r.bound_bruteforce = brute_force_count(profile);
  if (methods.recurrence) r.bound_recurrence = recurrence_count(profile);
  if (methods.formula) r.bound_formula = formula_count(profile);
  r.status = r.bounds_agree() ? ReportStatus::bound_only : ReportStatus::inconsistent;
  if (r.status == ReportStatus::inconsistent) r.note = "bound methods disagree";
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

CountReport verify_family(FamilyKind kind, const SizeProfile& profile, const VerifyOptions& options) {
  if (profile.total() > options.budget) {
    throw BudgetExceeded("profile " + profile.to_string() + " has total size " +
                         std::to_string(profile.total()) + ", above the budget of " +
                         std::to_string(options.budget));
  }
  const auto start = Clock::now();
  const WitnessFamily family = build_family(kind, profile);

  CountReport r;
  r.profile = profile;
  r.family = kind;
  r.bound_recurrence = recurrence_count(profile);
  r.bound_formula = formula_count(profile);
  if (profile.total() <= options.brute_force_limit && profile.total() <= kBruteForceMaxTotal) {
    r.bound_bruteforce = brute_force_count(profile);
  }

  const Chain chain = chain_catenate(family.automata);
  const Determinized det = determinize_with_subsets(chain.nfa);
  bool all_valid = true;
  for (const auto& subset : det.subsets) {
    if (!check_validity(decode_state(subset, chain.layout), family.automata).valid()) {
      all_valid = false;
      break;
    }
  }
  const Dfa minimal = minimize(det.dfa);

  r.reachable_states = BigCount(static_cast<unsigned long>(det.subsets.size()));
  r.measured_sc = BigCount(static_cast<unsigned long>(minimal.state_count()));
  r.states_valid = all_valid;
  r.attained = *r.measured_sc == *r.bound_recurrence;

  if (!r.bounds_agree()) {
    r.status = ReportStatus::inconsistent;
    r.note = "bound methods disagree";
  } else if (!all_valid) {
    r.status = ReportStatus::inconsistent;
    r.note = "reachable state violates P1-P3";
  } else if (*r.measured_sc > *r.bound_recurrence) {
    r.status = ReportStatus::inconsistent;
    r.note = "measured size exceeds the bound";
  } else if (*r.attained) {
    r.status = ReportStatus::attained;
  } else {
    r.status = ReportStatus::missed;
    r.note = "counterexample: minimal size " + r.measured_sc->get_str() + " below bound " +
             r.bound_recurrence->get_str();
  }
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

std::vector<SizeProfile> grid_profiles(const GridSpec& spec) {
  if (spec.alpha_min < 1 || spec.alpha_min > spec.alpha_max) throw std::invalid_argument("empty alpha range");
  if (spec.size_min < 2 || spec.size_min > spec.size_max) {
    throw std::invalid_argument("size range must be non-empty and start at 2 or more");
  }
  std::vector<SizeProfile> out;
  for (unsigned alpha = spec.alpha_min; alpha <= spec.alpha_max; ++alpha) {
    std::vector<unsigned> sizes(alpha, spec.size_min);
    while (true) {
      out.emplace_back(sizes);
      // Odometer increment, last component fastest.
      std::size_t pos = alpha;
      while (pos > 0 && sizes[pos - 1] == spec.size_max) {
        sizes[pos - 1] = spec.size_min;
        --pos;
      }
      if (pos == 0) break;
      ++sizes[pos - 1];
    }
  }
  return out;
}

namespace {

CountReport run_one(const GridSpec& spec, const SizeProfile& profile) {
  auto skipped = [&](std::string why) {
    CountReport r;
    r.profile = profile;
    r.family = spec.family;
    r.status = ReportStatus::skipped;
    r.note = std::move(why);
    return r;
  };
  if (profile.total() > spec.budget) {
    return skipped("total size " + std::to_string(profile.total()) + " above budget " +
                   std::to_string(spec.budget));
  }
  try {
    return verify_family(spec.family, profile, VerifyOptions{spec.budget, spec.brute_force_limit});
  } catch (const std::invalid_argument& e) {
    return skipped(e.what());
  } catch (const std::exception& e) {
    CountReport r = skipped(e.what());
    r.status = ReportStatus::inconsistent;
    return r;
  }
}

}  // namespace

GridSummary run_grid(const GridSpec& spec, const std::function<void(const CountReport&)>& emit) {
  const auto profiles = grid_profiles(spec);
  std::vector<std::optional<CountReport>> results(profiles.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next_index{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next_index.fetch_add(1);
      if (i >= profiles.size()) return;
      CountReport report = run_one(spec, profiles[i]);
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(report);
      }
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(profiles.size())));
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  GridSummary summary;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    CountReport report;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return results[i].has_value(); });
      report = std::move(*results[i]);
      results[i].reset();
    }
    switch (report.status) {
      case ReportStatus::attained: ++summary.attained; break;
      case ReportStatus::missed: ++summary.missed; break;
      case ReportStatus::skipped: ++summary.skipped; break;
      case ReportStatus::inconsistent: ++summary.inconsistent; break;
      case ReportStatus::bound_only: break;
    }
    emit(report);
  }
  return summary;
}

}  // namespace catchain
