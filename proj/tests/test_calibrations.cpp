#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sedalg/calibrations.hpp"

using namespace sedalg;

TEST_CASE("named forms") {
  Multivector t = build("theta64");
  REQUIRE(t.size() == 7);
  int neg = 0;
  for (auto& [mask, c] : t.terms()) neg += c < 0;
  CHECK(neg == 3);
  CHECK(t.coeff(parse_mask("257")) == -1);
  CHECK(t.coeff(parse_mask("347")) == -1);
  CHECK(t.coeff(parse_mask("356")) == -1);
  CHECK(build("psi") == (7 * Multivector::pseudoscalar(15) - build("Phi")) * Rational(1, 8));
  CHECK(build("Phi").size() == 15);
  CHECK(build("Phi_dual").size() == 15);
  CHECK_THROWS_AS(build("nonsense"), UnknownName);
  CHECK_THROWS_AS(build("Theta_16"), UnknownName);
}

TEST_CASE("restricted 3-forms") {
  CHECK(theta_i(1).size() == 7);
  Multivector sum(15);
  for (int i = 1; i <= 15; ++i) sum += theta_i(i);
  CHECK(sum == 9 * build("Theta"));
  CHECK(phi_family(1) == 'A');
  CHECK(phi_family(8) == 'O');
  CHECK(phi_family(9) == 'P');
  CHECK(phi_index(parse_mask("1234567")) == 1);
  CHECK(phi_index(parse_mask("12")) == 0);
}

TEST_CASE("identities") {
  for (auto& id : identity_ids()) {
    CAPTURE(id);
    IdentityReport r = verify_identity(id);
    CHECK(r.pass);
  }
  CHECK(verify_identity("pseudo_theta64_sq").lhs == Multivector::scalar(7, -16));
  CHECK(verify_identity("psi_sq").lhs == Multivector::scalar(15, -1));
  CHECK_THROWS_AS(verify_identity("no_such_identity"), UnknownName);
}

TEST_CASE("cube law") {
  const char* discovered[] = {"+123", "+145", "-167", "+246", "+257", "+347", "-356"};
  for (int i = 1; i <= 15; ++i) {
    CAPTURE(i);
    CubeLaw c = cube_law(i);
    CHECK(c.pass);
    if (i >= 9) {
      CHECK(c.admissible == 1);
      REQUIRE(c.theta);
      CHECK(*c.theta == parse_form(discovered[i - 9], 15));
    }
  }
}

TEST_CASE("idempotent quintets") {
  QuintetCounts q = idempotent_quintets(2);
  CHECK(q.total == 3003);
  CHECK(q.failing == 315);
  CHECK(q.passing == 2688);
  CHECK(verify_identity("quintet_display").pass);
}

TEST_CASE("sharp algebras") {
  SharpReport s7 = sharp_algebra(7), s15 = sharp_algebra(15);
  CHECK(s7.basis_size == 8);
  CHECK(s15.basis_size == 16);
  for (auto* s : {&s7, &s15}) {
    CHECK(s->closed);
    CHECK(s->commutative);
    CHECK(s->squares_plus_one);
    CHECK(s->third_term);
  }
}

TEST_CASE("pair swap profiles of the dual terms") {
  SwapProfile a = pair_swap_profile(1);
  CHECK(a.a_swaps == 0);
  CHECK(a.within_o == 0);
  CHECK(a.within_p == 0);
  CHECK(a.cross == 7);
  for (int i = 2; i <= 8; ++i) {
    SwapProfile p = pair_swap_profile(i);
    CHECK(p.a_partner == "P");
    CHECK(p.within_o == 3);
    CHECK(p.within_p == 3);
    CHECK(p.cross == 0);
  }
  for (int i = 9; i <= 15; ++i) {
    SwapProfile p = pair_swap_profile(i);
    CHECK(p.a_partner == "O");
    CHECK(p.cross == 6);
  }
}

TEST_CASE("loop table rows") {
  auto rows = loop_form_rows();
  REQUIRE(rows.size() == 15);
  int o = 0;
  for (auto& r : rows) o += r.cls == "O";
  CHECK(o == 8);
}
