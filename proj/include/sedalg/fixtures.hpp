#pragma once
// Reference tables shipped inside the library as plain text.
//
// Each fixture is a list of records, one per line; '#' starts a comment and
// fields are separated by '|'. A directory given to set_override_dir()
// replaces any fixture whose <name>.txt exists there.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sedalg::fixtures {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> names();
std::string text(std::string_view name);

// Throws std::filesystem::filesystem_error when dir is not a directory.
void set_override_dir(const std::filesystem::path& dir);
void clear_override_dir();

std::vector<std::vector<std::string>> records(std::string_view name);

// A known typo in a table, with the replacement entry.
struct Erratum {
  std::string table;
  std::string entry;  // 1-based index or row label
  std::string corrected;
};
std::vector<Erratum> errata();

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded();
}

}  // namespace sedalg::fixtures
