#include "sedalg/fixtures.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace sedalg::fixtures {

namespace {

std::mutex g_mu;
std::filesystem::path g_dir;

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (auto& [k, v] : detail::embedded()) out.emplace_back(k);
  return out;
}

void set_override_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw std::filesystem::filesystem_error("fixture override is not a directory", dir,
                                            std::make_error_code(std::errc::not_a_directory));
  std::lock_guard lk(g_mu);
  g_dir = dir;
}

void clear_override_dir() {
  std::lock_guard lk(g_mu);
  g_dir.clear();
}

std::string text(std::string_view name) {
  std::filesystem::path dir;
  {
    std::lock_guard lk(g_mu);
    dir = g_dir;
  }
  if (!dir.empty()) {
    auto p = dir / (std::string(name) + ".txt");
    if (std::filesystem::exists(p)) {
      std::ifstream in(p, std::ios::binary);
      if (!in) throw std::filesystem::filesystem_error("cannot read fixture", p,
                                                       std::make_error_code(std::errc::io_error));
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
  }
  for (auto& [k, v] : detail::embedded())
    if (k == name) return std::string(v);
  throw FixtureError("unknown fixture: " + std::string(name));
}

std::vector<std::vector<std::string>> records(std::string_view name) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text(name));
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::size_t b = 0;
    while (true) {
      auto bar = line.find('|', b);
      fields.push_back(trim(std::string_view(line).substr(b, bar == std::string::npos ? std::string::npos : bar - b)));
      if (bar == std::string::npos) break;
      b = bar + 1;
    }
    out.push_back(std::move(fields));
  }
  return out;
}

std::vector<Erratum> errata() {
  std::vector<Erratum> out;
  for (auto& r : records("errata")) {
    if (r.size() != 3) throw FixtureError("errata: expected 3 fields per record");
    out.push_back({r[0], r[1], r[2]});
  }
  return out;
}

}  // namespace sedalg::fixtures
