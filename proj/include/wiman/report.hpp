#pragma once

// Verification suites grouped by section, and the run report with its JSON form.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wiman {

enum class Status { Pass, Fail, Exploratory };
std::string to_string(Status s);
/// Throws std::invalid_argument.
Status parse_status(const std::string& text);

struct CheckResult {
  std::string id;
  std::string anchor;
  Status status = Status::Fail;
  std::string detail;
  double elapsed_ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct RunConfig {
  std::vector<std::string> sections;
  std::vector<std::int64_t> moduli;  // extra O0/nO0 images, exploratory
  std::size_t orbit_budget = 1'000'000;
  int scan_bound = 5;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int exploratory = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct RunReport {
  std::string version;
  RunConfig config;
  std::vector<CheckResult> checks;
  Summary summary;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline constexpr const char* kVersion = "1.0.0";

/// algebra, group, lattice, graphs, monodromy, congruence, character (the order of execution).
const std::vector<std::string>& section_names();
bool is_section(const std::string& name);
/// "all" expands to every section; duplicates collapse; order follows section_names().
/// Throws std::invalid_argument for unknown names or an empty list.
std::vector<std::string> resolve_sections(const std::vector<std::string>& requested);

std::vector<CheckResult> run_section(const std::string& section, const RunConfig& config);
RunReport run(const RunConfig& config);
Summary tally(const std::vector<CheckResult>& checks);
/// 0 unless some non-exploratory check failed.
int exit_code(const RunReport& report);

std::string to_json(const RunReport& report, int indent = 2);
/// Throws std::invalid_argument on malformed input.
RunReport parse_report(const std::string& json);
std::string to_text(const RunReport& report);

}  // namespace wiman
