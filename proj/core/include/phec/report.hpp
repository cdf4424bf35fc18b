// Verification reports: deterministic JSON (fixed key order, no timestamps)
// and an optional Markdown rendering.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phec {

inline constexpr const char* kToolName = "phec-verify";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "phec-report/1";

enum class Status { Proved, AtBudget, Refuted, Inconclusive };

const char* status_str(Status s);

struct Check {
  std::string id;
  Status status = Status::Inconclusive;
  std::string detail;   // what was checked, at which range
  std::string witness;  // reproducible counterexample for Refuted, else empty
};

struct Report {
  std::string suite;
  std::string instance_name;
  std::string instance_hash;
  std::vector<std::pair<std::string, std::string>> params;  // render-ready
  std::vector<std::string> statements;  // statement ids the suite covers
  std::vector<Check> checks;

  int count(Status s) const;
  bool refuted() const { return count(Status::Refuted) > 0; }
  // exit code contract: 0 iff no refutations
  int exit_code() const { return refuted() ? 1 : 0; }

  std::string to_json() const;
  std::string to_markdown() const;
};

std::string json_escape(const std::string& s);

}  // namespace phec
