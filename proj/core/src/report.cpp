#include "phec/report.hpp"

#include <sstream>

namespace phec {

const char* status_str(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::AtBudget: return "verified-at-budget";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

int Report::count(Status s) const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

namespace {

void put_str(std::ostringstream& o, const std::string& s) {
  o << '"' << json_escape(s) << '"';
}

}  // namespace

std::string Report::to_json() const {
  std::ostringstream o;
  o << "{\n";
  o << "  \"schema\": \"" << kReportSchema << "\",\n";
  o << "  \"tool\": {\"name\": \"" << kToolName << "\", \"version\": \""
    << kToolVersion << "\"},\n";
  o << "  \"suite\": ";
  put_str(o, suite);
  o << ",\n";
  o << "  \"instance\": {\"name\": ";
  put_str(o, instance_name);
  o << ", \"hash\": ";
  put_str(o, instance_hash);
  o << "},\n";
  o << "  \"params\": {";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) o << ", ";
    put_str(o, params[i].first);
    o << ": ";
    put_str(o, params[i].second);
  }
  o << "},\n";
  o << "  \"statements\": [";
  for (std::size_t i = 0; i < statements.size(); ++i) {
    if (i) o << ", ";
    put_str(o, statements[i]);
  }
  o << "],\n";
  o << "  \"checks\": [\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    o << "    {\"id\": ";
    put_str(o, c.id);
    o << ", \"status\": \"" << status_str(c.status) << "\", \"detail\": ";
    put_str(o, c.detail);
    if (!c.witness.empty()) {
      o << ", \"witness\": ";
      put_str(o, c.witness);
    }
    o << "}";
    if (i + 1 < checks.size()) o << ",";
    o << "\n";
  }
  o << "  ],\n";
  o << "  \"summary\": {\"proved\": " << count(Status::Proved)
    << ", \"verified_at_budget\": " << count(Status::AtBudget)
    << ", \"refuted\": " << count(Status::Refuted)
    << ", \"inconclusive\": " << count(Status::Inconclusive) << "},\n";
  o << "  \"exit_code\": " << exit_code() << "\n";
  o << "}\n";
  return o.str();
}

std::string Report::to_markdown() const {
  std::ostringstream o;
  o << "# " << kToolName << " report: `" << suite << "`\n\n";
  o << "Instance: `" << instance_name << "` (hash `" << instance_hash
    << "`)\n\n";
  if (!params.empty()) {
    o << "Parameters: ";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) o << ", ";
      o << params[i].first << "=" << params[i].second;
    }
    o << "\n\n";
  }
  if (!statements.empty()) {
    o << "Statements covered:\n\n";
    for (const auto& s : statements) o << "- " << s << "\n";
    o << "\n";
  }
  o << "| check | status | detail |\n|---|---|---|\n";
  for (const auto& c : checks) {
    std::string d = c.detail;
    for (auto& ch : d)
      if (ch == '|') ch = '/';
    o << "| `" << c.id << "` | " << status_str(c.status) << " | " << d;
    if (!c.witness.empty()) o << " (witness: `" << c.witness << "`)";
    o << " |\n";
  }
  o << "\nSummary: " << count(Status::Proved) << " proved, "
    << count(Status::AtBudget) << " verified at budget, "
    << count(Status::Refuted) << " refuted, " << count(Status::Inconclusive)
    << " inconclusive.\n";
  return o.str();
}

}  // namespace phec
