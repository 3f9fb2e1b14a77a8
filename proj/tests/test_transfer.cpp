#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sedalg/calibrations.hpp"
#include "sedalg/invariants.hpp"
#include "sedalg/transfer.hpp"

using namespace sedalg;

namespace {
Mask m(const char* d) { return parse_mask(d); }
}  // namespace

TEST_CASE("map15 on blades") {
  GenMap g = map15();
  CHECK(map_blade(m("167"), g) == SignedBlade{1, 0});
  CHECK(map_blade(m("123"), g) == SignedBlade{-1, 0});
  CHECK(map_blade(m("1"), g) == SignedBlade{1, m("1")});
  CHECK(map_multivector(Multivector(15), g).is_zero());
}

TEST_CASE("map3 and map7") {
  CHECK(map_blade(m("3"), map3()) == SignedBlade{1, m("12")});
  CHECK(map_blade(m("7"), map7()) == SignedBlade{-1, m("123")});
}

TEST_CASE("Theta consistency: every 3Theta term maps to -sign") {
  // a quaternion triad multiplies to -1, so the signed term maps to -1 times its sign
  Multivector theta3 = build("Theta") * Rational(3);
  for (auto& [mask, c] : theta3.terms()) {
    SignedBlade s = map_blade(mask, map15());
    CHECK(s.mask == 0);
    CHECK(s.sign * sgn(c) == -1);
  }
}

TEST_CASE("automorphism filter") {
  // literal map7: e7 -> -o123, so the plus sign is the admissible one
  CHECK(automorphism_filter({{1, m("12")}, {1, m("47")}}, map7()));
  CHECK_FALSE(automorphism_filter({{1, m("12")}, {-1, m("47")}}, map7()));
  for (auto& e : fixture_family("OC")) CHECK(automorphism_filter(e.used.terms, map15()));
  // an all-positive primary whose mapped product is -1
  CHECK_FALSE(automorphism_filter({{1, m("46")}, {1, m("57")}, {1, m("8A")}, {1, m("9B")}}, map15()));
}

TEST_CASE("loop to form") {
  CHECK(loop_to_form(generate_loop(m("1"), m("2"), m("3"), 4)) == m("1234567"));
  CHECK(loop_to_form(generate_loop(m("1"), m("2"), m("4"), 4)) == m("12389AB"));
  CHECK(loop_to_form(generate_loop(m("1"), m("2"), m("34"), 4)) == m("123CDEF"));
}
