#pragma once
// Verification reports: ordered checks with expected and actual values,
// rendered as versioned JSON or as CSV.

#include <string>
#include <vector>

namespace sedalg {

struct Check {
  int criterion = 0;  // acceptance criterion 1..14, 0 for supporting checks
  std::string id;
  std::string anchor;  // what the check reproduces, in words
  bool pass = false;
  std::string expected;
  std::string actual;
};

// Reported observations that are not pass/fail (flagged discrepancies, counts).
struct Note {
  std::string id;
  std::string text;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<Note> notes;
  double wall_seconds = 0;

  bool pass() const;
  int passed() const;
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  void append(const Report& other);
};

std::string to_json(const Report& r);
std::string to_csv(const Report& r);

}  // namespace sedalg
