#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "sedalg/calibrations.hpp"
#include "sedalg/cayley_dickson.hpp"
#include "sedalg/fano.hpp"

using namespace sedalg;

TEST_CASE("plane of theta64") {
  FanoPlane p = fano_plane(build("theta64"));
  REQUIRE(p.lines.size() == 7);
  CHECK(p.cls == "O");
  int neg = 0;
  for (auto& l : p.lines) {
    neg += l.orientation < 0;
    // negative lines run against ascending order
    if (l.orientation > 0) CHECK(l.cycle == l.members);
    else CHECK(l.cycle == std::array<int, 3>{l.members[2], l.members[1], l.members[0]});
  }
  CHECK(neg == 3);
  auto j = nlohmann::json::parse(fano_plane_json(p));
  CHECK(j["vertices"].size() == 7);
  CHECK(j["planes"].size() == 7);
}

TEST_CASE("theta1 shares incidence but not arrows") {
  FanoPlane a = fano_plane(build("theta64")), b = fano_plane(build("theta1"));
  CHECK(b.cls == "P14");
  CHECK(fano_plane_svg(a) != fano_plane_svg(b));
  for (std::size_t i = 0; i < 7; ++i) CHECK(a.lines[i].members == b.lines[i].members);
}

TEST_CASE("degenerate planes are rejected") {
  CHECK_THROWS_AS(fano_plane(parse_form("+123 +124 +167 +246 +257 +347 +356", 7)), IncidenceError);
  CHECK_THROWS_AS(fano_plane(parse_form("+123 +145 +167 +246 +257 +347", 7)), IncidenceError);
}

TEST_CASE("volume") {
  FanoVolume v = fano_volume();
  CHECK(v.vertices.size() == 15);
  CHECK(v.planes.size() == 15);
  CHECK(v.quaternions.size() == 35);
  for (int k : v.planes_per_quaternion) CHECK(k == 3);
  auto j = nlohmann::json::parse(fano_volume_json(v));
  CHECK(j["planes"].size() == 15);
  CHECK(j["planes"][0].contains("members"));
  CHECK(j["planes"][0].contains("class"));
  CHECK(j["planes"][0].contains("orientation"));
}

TEST_CASE("byte-stable output") {
  CHECK(fano_volume_svg(fano_volume()) == fano_volume_svg(fano_volume()));
  CHECK(fano_volume_dot(fano_volume()) == fano_volume_dot(fano_volume()));
  FanoPlane p = fano_plane(build("theta64"));
  CHECK(fano_plane_dot(p) == fano_plane_dot(fano_plane(build("theta64"))));
  CHECK(fano_plane_svg(p).find("<svg") != std::string::npos);
  CHECK(fano_plane_dot(p).find("digraph") != std::string::npos);
}
