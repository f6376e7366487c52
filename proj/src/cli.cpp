#include "catchain/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "catchain/bounds.hpp"
#include "catchain/harness.hpp"
#include "catchain/report.hpp"
#include "catchain/text_format.hpp"
#include "catchain/witnesses.hpp"

namespace catchain {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kLetterNote =
    "Letters are numbered 0..k-1; letter i is sigma_{i+1}. For two_letter the\n"
    "named letters are b=0, a=1; for three_letter c=0, b=1, a=2.";

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text, const char* what) {
  auto to_uint = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw UsageError(std::string("invalid ") + what + " range '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned v = to_uint(text);
    return {v, v};
  }
  const unsigned lo = to_uint(text.substr(0, dots));
  const unsigned hi = to_uint(text.substr(dots + 2));
  if (lo > hi) throw UsageError(std::string("empty ") + what + " range '" + text + "'");
  return {lo, hi};
}

SizeProfile parse_profile(const std::string& text) {
  try {
    return SizeProfile::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

FamilyKind require_family(const std::string& name) {
  auto kind = parse_family(name);
  if (!kind) throw UsageError("unknown family '" + name + "' (table1, table2, two_letter, three_letter)");
  return *kind;
}

OutputFormat require_format(const std::string& name) {
  auto f = parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "' (table, json, csv)");
  return *f;
}

unsigned checked_budget(unsigned budget, bool accept_cost) {
  if (budget > kDefaultBudget && !accept_cost) {
    throw UsageError("budget above " + std::to_string(kDefaultBudget) +
                     " needs --accept-memory-cost (the subset space grows as 2^budget)");
  }
  return budget;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  std::string sizes;
  std::string methods = "recurrence,formula";
  std::string format = "table";
  bool timing = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const SizeProfile profile = parse_profile(a.sizes);
  BoundMethods methods{false, false, false};
  for (const auto& m : split(a.methods, ',')) {
    if (m == "all") {
      methods = {true, true, true};
    } else if (m == "brute") {
      methods.brute = true;
    } else if (m == "recurrence") {
      methods.recurrence = true;
    } else if (m == "formula") {
      methods.formula = true;
    } else {
      throw UsageError("unknown method '" + m + "' (brute, recurrence, formula, all)");
    }
  }
  if (!methods.brute && !methods.recurrence && !methods.formula) throw UsageError("no bound method selected");
  CountReport report;
  try {
    report = bound_report(profile, methods);
  } catch (const BudgetExceeded& e) {
    throw UsageError(e.what());
  }
  ReportWriter writer(out, require_format(a.format), a.timing);
  writer.write(report);
  return report.status == ReportStatus::inconsistent ? kExitInconsistent : kExitOk;
}

// ---------------------------------------------------------------- witness

struct WitnessArgs {
  std::string family;
  std::string sizes;
  std::string out_dir;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const FamilyKind kind = require_family(a.family);
  const SizeProfile profile = parse_profile(a.sizes);
  WitnessFamily family = [&] {
    try {
      return build_family(kind, profile);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  std::ostringstream manifest;
  manifest << "# family=" << to_string(kind) << " alpha=" << profile.alpha() << " sizes=" << profile.to_string()
           << '\n';
  manifest << "# alphabet=" << family.alphabet_size << '\n';

  if (a.out_dir.empty()) {
    out << manifest.str();
    for (std::size_t k = 0; k < family.automata.size(); ++k) {
      out << "# component " << k + 1 << '\n' << to_text(family.automata[k]);
    }
    return kExitOk;
  }

  namespace fs = std::filesystem;
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  for (std::size_t k = 0; k < family.automata.size(); ++k) {
    const std::string name = "A" + std::to_string(k + 1) + ".dfa";
    manifest << name << '\n';
    std::ofstream file(dir / name, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + (dir / name).string());
    file << to_text(family.automata[k]);
  }
  std::ofstream file(dir / "manifest.txt", std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + (dir / "manifest.txt").string());
  file << manifest.str();
  out << "wrote " << family.automata.size() << " automata to " << dir.string() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string family;
  std::string sizes;
  unsigned budget = kDefaultBudget;
  bool accept_cost = false;
  bool strict = false;
  std::string format = "table";
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const FamilyKind kind = require_family(a.family);
  const SizeProfile profile = parse_profile(a.sizes);
  VerifyOptions options;
  options.budget = checked_budget(a.budget, a.accept_cost);
  CountReport report;
  try {
    report = verify_family(kind, profile, options);
  } catch (const BudgetExceeded& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ReportWriter writer(out, require_format(a.format), a.timing);
  writer.write(report);
  if (report.status == ReportStatus::inconsistent) return kExitInconsistent;
  if (report.status == ReportStatus::missed && a.strict) return kExitConjectureMiss;
  return kExitOk;
}

// ---------------------------------------------------------------- grid

struct GridArgs {
  std::string family;
  std::string alpha;
  std::string sizes;
  unsigned budget = kDefaultBudget;
  bool accept_cost = false;
  bool strict = false;
  unsigned jobs = 1;
  std::string format = "table";
  bool timing = false;
};

int cmd_grid(const GridArgs& a, std::ostream& out, std::ostream& err) {
  GridSpec spec;
  spec.family = require_family(a.family);
  std::tie(spec.alpha_min, spec.alpha_max) = parse_range(a.alpha, "alpha");
  std::tie(spec.size_min, spec.size_max) = parse_range(a.sizes, "size");
  if (spec.alpha_min < 1) throw UsageError("alpha must be at least 1");
  if (spec.size_min < 2) throw UsageError("component sizes must be at least 2");
  spec.budget = checked_budget(a.budget, a.accept_cost);
  spec.jobs = std::max(1u, a.jobs);

  const OutputFormat format = require_format(a.format);
  ReportWriter writer(out, format, a.timing);
  const GridSummary summary = run_grid(spec, [&](const CountReport& r) { writer.write(r); });

  std::ostringstream line;
  line << "summary: attained=" << summary.attained << " missed=" << summary.missed
       << " skipped=" << summary.skipped << " inconsistent=" << summary.inconsistent;
  if (summary.missed > 0) line << " (conjecture counterexamples found)";
  if (format == OutputFormat::table) {
    out << line.str() << '\n';
  } else {
    out.flush();
    err << line.str() << '\n';
  }

  if (summary.inconsistent > 0) return kExitInconsistent;
  if (summary.missed > 0 && a.strict) return kExitConjectureMiss;
  return kExitOk;
}

// ---------------------------------------------------------------- poly

struct PolyArgs {
  unsigned alpha = 0;
  std::string which = "r";
};

int cmd_poly(const PolyArgs& a, std::ostream& out) {
  if (a.alpha < 1) throw UsageError("alpha must be at least 1");
  std::vector<std::pair<std::string, MPoly>> lines;
  const SPolynomials s = s_polynomials(a.alpha);
  const std::string top = std::to_string(a.alpha - 1);
  for (const auto& w : split(a.which, ',')) {
    if (w == "s_minus") {
      for (unsigned j = 0; j < a.alpha; ++j) lines.emplace_back("s_minus[" + std::to_string(j) + "]", s.minus[j]);
    } else if (w == "s_plus") {
      for (unsigned j = 0; j < a.alpha; ++j) lines.emplace_back("s_plus[" + std::to_string(j) + "]", s.plus[j]);
    } else if (w == "s") {
      lines.emplace_back("s[" + top + "]", s.s);
    } else if (w == "r") {
      lines.emplace_back("r[" + top + "]", s.r);
    } else if (w == "r_expanded") {
      if (a.alpha < 2) throw UsageError("r_expanded needs --alpha 2 or more");
      lines.emplace_back("r_expanded[" + top + "]", r_expanded(a.alpha));
    } else if (w == "m") {
      const auto m = m_by_recurrence(a.alpha - 1);
      for (unsigned i = 0; i < a.alpha; ++i) lines.emplace_back("m[" + std::to_string(i) + "]", m[i]);
    } else {
      throw UsageError("unknown polynomial '" + w + "' (s_minus, s_plus, s, r, r_expanded, m)");
    }
  }
  if (lines.empty()) throw UsageError("no polynomial selected");
  if (lines.size() == 1) {
    out << lines.front().second.to_string() << '\n';
  } else {
    for (const auto& [label, poly] : lines) out << label << " = " << poly.to_string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple catenation of DFAs: state complexity bounds and Brzozowski witnesses", "catchain"};
  app.require_subcommand(1);
  app.footer(kLetterNote);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Compute the valid-state bound for a size profile");
  bound_cmd->add_option("--sizes", bound.sizes, "Component sizes, e.g. 3,4,5")->required();
  bound_cmd->add_option("--methods", bound.methods, "Comma list of brute, recurrence, formula, or all");
  bound_cmd->add_option("--format", bound.format, "table, json or csv");
  bound_cmd->add_flag("--timing", bound.timing, "Include wall time");

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Write the automata of a witness family");
  witness_cmd->add_option("--family", witness.family, "table1, table2, two_letter, three_letter")->required();
  witness_cmd->add_option("--sizes", witness.sizes, "Component sizes")->required();
  witness_cmd->add_option("--out", witness.out_dir, "Output directory (stdout when omitted)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Measure the minimal DFA of a witness chain against the bound");
  verify_cmd->add_option("--family", verify.family, "table1, table2, two_letter, three_letter")->required();
  verify_cmd->add_option("--sizes", verify.sizes, "Component sizes")->required();
  verify_cmd->add_option("--budget", verify.budget, "Largest total size allowed");
  verify_cmd->add_flag("--accept-memory-cost", verify.accept_cost, "Allow a budget above the default");
  verify_cmd->add_flag("--strict", verify.strict, "Exit 3 when the bound is missed");
  verify_cmd->add_option("--format", verify.format, "table, json or csv");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall time");

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "Verify every profile of a grid");
  grid_cmd->add_option("--family", grid.family, "table1, table2, two_letter, three_letter")->required();
  grid_cmd->add_option("--alpha", grid.alpha, "Chain lengths, e.g. 2..4")->required();
  grid_cmd->add_option("--sizes", grid.sizes, "Size range applied to every component, e.g. 2..4")->required();
  grid_cmd->add_option("--budget", grid.budget, "Largest total size verified; larger profiles are skipped");
  grid_cmd->add_flag("--accept-memory-cost", grid.accept_cost, "Allow a budget above the default");
  grid_cmd->add_flag("--strict", grid.strict, "Exit 3 when any profile misses the bound");
  grid_cmd->add_option("--jobs", grid.jobs, "Worker threads");
  grid_cmd->add_option("--format", grid.format, "table, json or csv");
  grid_cmd->add_flag("--timing", grid.timing, "Include wall time");

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Print bound polynomials");
  poly_cmd->add_option("--alpha", poly.alpha, "Chain length")->required();
  poly_cmd->add_option("--which", poly.which, "Comma list of s_minus, s_plus, s, r, r_expanded, m");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (bound_cmd->parsed()) return cmd_bound(bound, out);
    if (witness_cmd->parsed()) return cmd_witness(witness, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (grid_cmd->parsed()) return cmd_grid(grid, out, err);
    if (poly_cmd->parsed()) return cmd_poly(poly, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace catchain
