#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "catchain/bounds.hpp"
#include "catchain/witnesses.hpp"

namespace catchain {

enum class ReportStatus {
  bound_only,    // no automaton was built
  attained,      // measured minimal size equals the bound
  missed,        // measured minimal size is below the bound
  skipped,       // outside the budget or incompatible with the family
  inconsistent,  // bound methods disagree, or a reachable state is invalid
};

std::string to_string(ReportStatus status);
std::optional<ReportStatus> parse_status(const std::string& text);

struct CountReport {
  SizeProfile profile{std::vector<unsigned>{2}};
  std::optional<FamilyKind> family;
  std::optional<BigCount> bound_recurrence;
  std::optional<BigCount> bound_formula;
  std::optional<BigCount> bound_bruteforce;
  std::optional<BigCount> measured_sc;
  std::optional<BigCount> reachable_states;  // accessible subset states before minimization
  std::optional<bool> attained;
  std::optional<bool> states_valid;  // every reachable subset state satisfies P1-P3
  std::optional<std::string> note;
  ReportStatus status = ReportStatus::bound_only;
  std::int64_t wall_time_ms = 0;

  /// All present bound values agree.
  bool bounds_agree() const;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// One JSON object on a single line. wall_time_ms is only written when
/// include_timing is set.
std::string to_json(const CountReport& report, bool include_timing);
CountReport report_from_json(const std::string& line);

std::string csv_header(bool include_timing);
std::string to_csv(const CountReport& report, bool include_timing);

std::string table_header(bool include_timing);
std::string to_table_row(const CountReport& report, bool include_timing);

enum class OutputFormat { table, json, csv };
std::optional<OutputFormat> parse_format(const std::string& text);

/// Streams reports in one of the three formats; writes a header first for
/// table and csv.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, OutputFormat format, bool include_timing)
      : out_(out), format_(format), timing_(include_timing) {}
  void write(const CountReport& report);

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool timing_;
  bool header_written_ = false;
};

}  // namespace catchain
