#include "catchain/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace catchain {

using nlohmann::json;

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::bound_only: return "bound_only";
    case ReportStatus::attained: return "attained";
    case ReportStatus::missed: return "missed";
    case ReportStatus::skipped: return "skipped";
    case ReportStatus::inconsistent: return "inconsistent";
  }
  return "unknown";
}

std::optional<ReportStatus> parse_status(const std::string& text) {
  for (auto s : {ReportStatus::bound_only, ReportStatus::attained, ReportStatus::missed, ReportStatus::skipped,
                 ReportStatus::inconsistent}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

bool CountReport::bounds_agree() const {
  const BigCount* reference = nullptr;
  for (const auto* value : {&bound_recurrence, &bound_formula, &bound_bruteforce}) {
    if (!value->has_value()) continue;
    if (reference == nullptr) {
      reference = &**value;
    } else if (**value != *reference) {
      return false;
    }
  }
  return true;
}

namespace {

std::string opt_count(const std::optional<BigCount>& v) { return v ? v->get_str() : ""; }
std::string opt_bool(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

void put_count(json& j, const char* key, const std::optional<BigCount>& v) {
  j[key] = v ? json(v->get_str()) : json(nullptr);
}

std::optional<BigCount> get_count(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return BigCount(j.at(key).get<std::string>());
}

std::optional<bool> get_bool(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<bool>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const CountReport& r, bool include_timing) {
  json j;
  j["family"] = r.family ? json(to_string(*r.family)) : json(nullptr);
  j["alpha"] = r.profile.alpha();
  j["sizes"] = r.profile.sizes();
  put_count(j, "bound_recurrence", r.bound_recurrence);
  put_count(j, "bound_formula", r.bound_formula);
  put_count(j, "bound_bruteforce", r.bound_bruteforce);
  put_count(j, "measured_sc", r.measured_sc);
  put_count(j, "reachable_states", r.reachable_states);
  j["attained"] = r.attained ? json(*r.attained) : json(nullptr);
  j["states_valid"] = r.states_valid ? json(*r.states_valid) : json(nullptr);
  j["status"] = to_string(r.status);
  j["note"] = r.note ? json(*r.note) : json(nullptr);
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j.dump();
}

CountReport report_from_json(const std::string& line) {
  const json j = json::parse(line);
  CountReport r;
  r.profile = SizeProfile(j.at("sizes").get<std::vector<unsigned>>());
  if (!j.at("family").is_null()) {
    const auto name = j.at("family").get<std::string>();
    r.family = parse_family(name);
    if (!r.family) throw std::invalid_argument("unknown family '" + name + "' in report");
  }
  r.bound_recurrence = get_count(j, "bound_recurrence");
  r.bound_formula = get_count(j, "bound_formula");
  r.bound_bruteforce = get_count(j, "bound_bruteforce");
  r.measured_sc = get_count(j, "measured_sc");
  r.reachable_states = get_count(j, "reachable_states");
  r.attained = get_bool(j, "attained");
  r.states_valid = get_bool(j, "states_valid");
  const auto status = parse_status(j.at("status").get<std::string>());
  if (!status) throw std::invalid_argument("unknown report status");
  r.status = *status;
  if (j.contains("note") && !j.at("note").is_null()) r.note = j.at("note").get<std::string>();
  if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  return r;
}

std::string csv_header(bool include_timing) {
  std::string h =
      "family,alpha,sizes,bound_recurrence,bound_formula,bound_bruteforce,measured_sc,reachable_states,"
      "attained,states_valid,status,note";
  if (include_timing) h += ",wall_time_ms";
  return h;
}

std::string to_csv(const CountReport& r, bool include_timing) {
  std::ostringstream os;
  os << (r.family ? to_string(*r.family) : "") << ',' << r.profile.alpha() << ','
     << csv_field(r.profile.to_string()) << ',' << opt_count(r.bound_recurrence) << ','
     << opt_count(r.bound_formula) << ',' << opt_count(r.bound_bruteforce) << ',' << opt_count(r.measured_sc)
     << ',' << opt_count(r.reachable_states) << ',' << opt_bool(r.attained) << ',' << opt_bool(r.states_valid)
     << ',' << to_string(r.status) << ',' << csv_field(r.note.value_or(""));
  if (include_timing) os << ',' << r.wall_time_ms;
  return os.str();
}

namespace {

constexpr int kFamilyWidth = 13;
constexpr int kSizesWidth = 16;
constexpr int kCountWidth = 12;
constexpr int kStatusWidth = 13;

}  // namespace

std::string table_header(bool include_timing) {
  std::ostringstream os;
  os << std::left << std::setw(kFamilyWidth) << "family" << std::setw(kSizesWidth) << "sizes" << std::right
     << std::setw(kCountWidth) << "recurrence" << std::setw(kCountWidth) << "formula" << std::setw(kCountWidth)
     << "brute" << std::setw(kCountWidth) << "measured" << "  " << std::left << std::setw(kStatusWidth)
     << "status";
  if (include_timing) os << std::right << std::setw(10) << "ms";
  return os.str();
}

std::string to_table_row(const CountReport& r, bool include_timing) {
  auto cell = [](const std::optional<BigCount>& v) { return v ? v->get_str() : std::string("-"); };
  std::ostringstream os;
  os << std::left << std::setw(kFamilyWidth) << (r.family ? to_string(*r.family) : "-")
     << std::setw(kSizesWidth) << r.profile.to_string() << std::right << std::setw(kCountWidth)
     << cell(r.bound_recurrence) << std::setw(kCountWidth) << cell(r.bound_formula) << std::setw(kCountWidth)
     << cell(r.bound_bruteforce) << std::setw(kCountWidth) << cell(r.measured_sc) << "  " << std::left
     << std::setw(kStatusWidth) << to_string(r.status);
  if (include_timing) os << std::right << std::setw(10) << r.wall_time_ms;
  if (r.note) os << "  " << *r.note;
  return os.str();
}

std::optional<OutputFormat> parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  return std::nullopt;
}

void ReportWriter::write(const CountReport& report) {
  switch (format_) {
    case OutputFormat::json:
      out_ << to_json(report, timing_) << '\n';
      break;
    case OutputFormat::csv:
      if (!header_written_) out_ << csv_header(timing_) << '\n';
      out_ << to_csv(report, timing_) << '\n';
      break;
    case OutputFormat::table:
      if (!header_written_) out_ << table_header(timing_) << '\n';
      out_ << to_table_row(report, timing_) << '\n';
      break;
  }
  header_written_ = true;
}

}  // namespace catchain
