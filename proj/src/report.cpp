#include "sedalg/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace sedalg {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int Report::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  wall_seconds += other.wall_seconds;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["report_version"] = 1;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["summary"] = {{"checks", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
  j["wall_time_s"] = std::round(r.wall_seconds * 1000) / 1000;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : r.checks)
    j["checks"].push_back({{"id", c.id},
                           {"paper_anchor", c.anchor},
                           {"criterion", c.criterion},
                           {"pass", c.pass},
                           {"expected", c.expected},
                           {"actual", c.actual}});
  j["notes"] = nlohmann::ordered_json::array();
  for (auto& n : r.notes) j["notes"].push_back({{"id", n.id}, {"text", n.text}});
  return j.dump(2) + "\n";
}

namespace {

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

std::string to_csv(const Report& r) {
  std::string s = "id,paper_anchor,criterion,pass,expected,actual\n";
  for (auto& c : r.checks)
    s += csv_field(c.id) + "," + csv_field(c.anchor) + "," + std::to_string(c.criterion) + "," +
         (c.pass ? "true" : "false") + "," + csv_field(c.expected) + "," + csv_field(c.actual) + "\n";
  return s;
}

}  // namespace sedalg
