#include <sstream>

#include "catchain/harness.hpp"
#include "catchain/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace catchain;

namespace {

CountReport sample() {
  CountReport r;
  r.profile = SizeProfile({3, 3});
  r.family = FamilyKind::two_letter;
  r.bound_recurrence = 20;
  r.bound_formula = 20;
  r.measured_sc = 20;
  r.reachable_states = 20;
  r.attained = true;
  r.states_valid = true;
  r.note = "a, \"quoted\" note";
  r.status = ReportStatus::attained;
  return r;
}

}  // namespace

TEST_CASE("status names round-trip") {
  for (auto s : {ReportStatus::bound_only, ReportStatus::attained, ReportStatus::missed, ReportStatus::skipped,
                 ReportStatus::inconsistent})
    CHECK(parse_status(to_string(s)) == s);
  CHECK_FALSE(parse_status("done").has_value());
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("json round-trip") {
  const CountReport r = sample();
  CHECK(report_from_json(to_json(r, false)) == r);

  CountReport big;
  big.profile = SizeProfile({60, 60, 60});
  big.bound_recurrence = recurrence_count(big.profile);
  CHECK(report_from_json(to_json(big, false)) == big);

  CountReport timed = sample();
  timed.wall_time_ms = 42;
  CHECK(report_from_json(to_json(timed, true)) == timed);
}

TEST_CASE("json omits timing unless asked and writes counts as strings") {
  const auto j = nlohmann::json::parse(to_json(sample(), false));
  CHECK_FALSE(j.contains("wall_time_ms"));
  CHECK(j["bound_recurrence"] == "20");
  CHECK(j["bound_bruteforce"].is_null());
  CHECK(nlohmann::json::parse(to_json(sample(), true)).contains("wall_time_ms"));
  CHECK(to_json(sample(), false).find('\n') == std::string::npos);
}

TEST_CASE("csv rows quote fields with commas") {
  CHECK(csv_header(false) ==
        "family,alpha,sizes,bound_recurrence,bound_formula,bound_bruteforce,measured_sc,reachable_states,attained,"
        "states_valid,status,note");
  CHECK(csv_header(true).ends_with(",wall_time_ms"));
  CHECK(to_csv(sample(), false) == "two_letter,2,\"3,3\",20,20,,20,20,true,true,attained,\"a, \"\"quoted\"\" note\"");
}

TEST_CASE("writer emits one header") {
  std::ostringstream out;
  ReportWriter w(out, OutputFormat::csv, false);
  w.write(sample());
  w.write(sample());
  const std::string text = out.str();
  CHECK(text.find("family,") == 0);
  CHECK(text.find("family,", 1) == std::string::npos);
}

TEST_CASE("bounds_agree") {
  CountReport r = sample();
  CHECK(r.bounds_agree());
  r.bound_bruteforce = 19;
  CHECK_FALSE(r.bounds_agree());
}

TEST_CASE("bound_report") {
  const auto r = bound_report(SizeProfile({3, 3, 3}), BoundMethods{true, true, true});
  CHECK(r.status == ReportStatus::bound_only);
  CHECK(r.bound_bruteforce == r.bound_recurrence);
  CHECK(r.bound_formula == r.bound_recurrence);
}

TEST_CASE("verify_family") {
  const auto r = verify_family(FamilyKind::two_letter, SizeProfile({3, 3}));
  CHECK(r.status == ReportStatus::attained);
  CHECK(r.measured_sc == 20);
  const auto miss = verify_family(FamilyKind::two_letter, SizeProfile({2, 3}));
  CHECK(miss.status == ReportStatus::missed);
  CHECK(miss.measured_sc == 11);
  CHECK(miss.note.value_or("").find("counterexample") != std::string::npos);
  CHECK(r.states_valid == true);
  CHECK(r.bound_bruteforce == 20);
  CHECK_THROWS_AS(verify_family(FamilyKind::table1, SizeProfile({12, 12})), BudgetExceeded);
  CHECK_THROWS_AS(verify_family(FamilyKind::two_letter, SizeProfile({3, 3, 3})), std::invalid_argument);
}

TEST_CASE("grid runs in order regardless of worker count") {
  GridSpec spec;
  spec.family = FamilyKind::table2;
  spec.alpha_min = 2;
  spec.alpha_max = 3;
  spec.size_min = 3;
  spec.size_max = 4;
  const auto profiles = grid_profiles(spec);
  CHECK(profiles.size() == 4 + 8);
  CHECK(profiles.front() == SizeProfile({3, 3}));

  std::vector<std::string> serial, parallel;
  const auto s1 = run_grid(spec, [&](const CountReport& r) { serial.push_back(to_json(r, false)); });
  spec.jobs = 4;
  const auto s4 = run_grid(spec, [&](const CountReport& r) { parallel.push_back(to_json(r, false)); });
  CHECK(serial == parallel);
  CHECK(s1.attained == 12);
  CHECK(s4.attained == 12);
  CHECK(s1.missed + s1.skipped + s1.inconsistent == 0);
}

TEST_CASE("grid marks over-budget profiles as skipped") {
  GridSpec spec;
  spec.family = FamilyKind::table1;
  spec.alpha_min = spec.alpha_max = 2;
  spec.size_min = 2;
  spec.size_max = 3;
  spec.budget = 5;
  std::vector<CountReport> reports;
  const auto s = run_grid(spec, [&](const CountReport& r) { reports.push_back(r); });
  CHECK(s.attained == 3);
  CHECK(s.skipped == 1);
  CHECK(reports.back().status == ReportStatus::skipped);
}
