// sedalg: verification suites, form classification and Fano rendering.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error (including an
// empty input), 3 malformed form or incidence, 4 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sedalg/calibrations.hpp"
#include "sedalg/cayley_dickson.hpp"
#include "sedalg/clifford.hpp"
#include "sedalg/fano.hpp"
#include "sedalg/fixtures.hpp"
#include "sedalg/suites.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kMalformed = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw IoError("cannot write " + out);
}

// Cl7 when every index fits, otherwise Cl15.
sedalg::Multivector read_form(const std::string& path) {
  std::string text = read_file(path);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw sedalg::ParseError("empty form file: " + path);
  sedalg::Multivector x = sedalg::parse_form(text, 15);
  for (auto& [m, c] : x.terms())
    if (m > sedalg::full_mask(7)) return x;
  return sedalg::parse_form(text, 7);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sedenion calibration and automorphism toolkit"};
  app.require_subcommand(1);
  // global flags may follow the subcommand
  app.fallthrough();

  std::string out, format = "json", fixtures_dir;
  int jobs = 1;
  bool relaxed = false;
  std::uint64_t seed = 1;
  app.add_option("--out", out, "Write output to this path instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--parity-relaxed", relaxed, "Accept invariants whose conjugate of Phi only flips term signs");
  app.add_option("--seed", seed, "Seed for randomized property sampling");
  app.add_option("--fixtures", fixtures_dir, "Directory overriding the embedded fixtures");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite;
  std::vector<std::string> choices = sedalg::suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto* classify = app.add_subcommand("classify", "Classify a Fano 3-form");
  std::string form_file;
  classify->add_option("form-file", form_file, "Plain-text form")->required();
  classify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* render = app.add_subcommand("render", "Render the Fano plane of a form or the Fano volume");
  std::string what, render_fmt = "svg", render_form;
  render->add_option("what", what, "plane or volume")->required()->check(CLI::IsMember({"plane", "volume"}));
  render->add_option("--format", render_fmt, "svg, dot or json")->check(CLI::IsMember({"svg", "dot", "json"}));
  render->add_option("input", render_form, "Form file for the plane (default theta64)");
  auto* fsvg = render->add_flag("--svg", "SVG output (default)");
  auto* fdot = render->add_flag("--dot", "DOT output");
  auto* fjson = render->add_flag("--json", "JSON output");
  fsvg->excludes(fdot)->excludes(fjson);
  fdot->excludes(fjson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (!fixtures_dir.empty()) sedalg::fixtures::set_override_dir(fixtures_dir);

    if (*verify) {
      sedalg::SuiteOptions opt{jobs, relaxed, seed};
      sedalg::Report r = sedalg::run_suite(suite, opt);
      emit(format == "csv" ? sedalg::to_csv(r) : sedalg::to_json(r), out);
      std::cerr << r.suite << ": " << r.passed() << "/" << r.checks.size() << " checks passed\n";
      return r.pass() ? kPass : kFail;
    }

    if (*classify) {
      sedalg::AlgebraClass c = sedalg::octonion_like_classify(read_form(form_file));
      const auto& k = c.counts;
      if (format == "csv") {
        emit("class,A,B,C,X\n" + c.tag + "," + std::to_string(k.a) + "," + std::to_string(k.b) + "," +
                 std::to_string(k.c) + "," + std::to_string(k.x) + "\n",
             out);
      } else {
        nlohmann::ordered_json j;
        j["class"] = c.tag;
        j["counts"] = {{"A", k.a}, {"B", k.b}, {"C", k.c}, {"X", k.x}};
        emit(j.dump(2) + "\n", out);
      }
      return kPass;
    }

    if (*fdot) render_fmt = "dot";
    if (*fjson) render_fmt = "json";
    if (*fsvg) render_fmt = "svg";
    if (what == "volume") {
      sedalg::FanoVolume v = sedalg::fano_volume();
      emit(render_fmt == "svg"   ? sedalg::fano_volume_svg(v)
           : render_fmt == "dot" ? sedalg::fano_volume_dot(v)
                                 : sedalg::fano_volume_json(v),
           out);
      return kPass;
    }
    sedalg::FanoPlane p =
        sedalg::fano_plane(render_form.empty() ? sedalg::build("theta64") : read_form(render_form));
    emit(render_fmt == "svg"   ? sedalg::fano_plane_svg(p)
         : render_fmt == "dot" ? sedalg::fano_plane_dot(p)
                               : sedalg::fano_plane_json(p),
         out);
    return kPass;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const sedalg::fixtures::FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const sedalg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const sedalg::IncidenceError& e) {
    std::cerr << "malformed form: " << e.what() << "\n";
    return kMalformed;
  } catch (const sedalg::DimensionError& e) {
    std::cerr << "malformed form: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
}
