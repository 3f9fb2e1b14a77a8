#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "sedalg/report.hpp"
#include "sedalg/suites.hpp"

using namespace sedalg;

TEST_CASE("json layout") {
  Report r;
  r.suite = "demo";
  r.checks.push_back({1, "a", "first thing", true, "1", "1"});
  r.checks.push_back({0, "b", "second thing", false, "x", "y"});
  r.notes.push_back({"n", "note"});
  r.wall_seconds = 0.12345;
  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["report_version"] == 1);
  CHECK(j["summary"]["checks"] == 2);
  CHECK(j["summary"]["passed"] == 1);
  CHECK(j["summary"]["failed"] == 1);
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["paper_anchor"] == "first thing");
  CHECK(j["wall_time_s"] == doctest::Approx(0.123));
}

TEST_CASE("csv quoting") {
  Report r;
  r.checks.push_back({2, "id", "a, b", true, "say \"hi\"", "ok"});
  CHECK(to_csv(r) == "id,paper_anchor,criterion,pass,expected,actual\nid,\"a, b\",2,true,\"say \"\"hi\"\"\",ok\n");
}

TEST_CASE("table suite") {
  Report r = run_suite("table2", {});
  CHECK(r.pass());
  CHECK(r.suite == "table2");
  CHECK_THROWS_AS(run_suite("bogus", {}), std::invalid_argument);
  CHECK(criterion_titles().size() == 15);
}
