#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sedalg/calibrations.hpp"
#include "sedalg/clifford.hpp"

using namespace sedalg;

namespace {
Mask m(const char* d) { return parse_mask(d); }
Multivector f(const char* text, int dim) { return parse_form(text, dim); }
}  // namespace

TEST_CASE("blade product signs") {
  CHECK(blade_mul(m("1"), m("2")) == SignedBlade{+1, m("12")});
  CHECK(blade_mul(m("2"), m("1")) == SignedBlade{-1, m("12")});
  CHECK(blade_mul(m("12"), m("13")) == SignedBlade{-1, m("23")});
  CHECK(blade_mul(m("1"), m("1")) == SignedBlade{+1, 0});
}

TEST_CASE("mask digits round trip and reject junk") {
  CHECK(mask_digits(m("9ABCDEF")) == "9ABCDEF");
  CHECK(mask_digits(m("G")) == "G");
  CHECK_THROWS_AS(parse_mask("11"), ParseError);
  CHECK_THROWS_AS(parse_mask("1x"), ParseError);
}

TEST_CASE("form parsing and formatting") {
  Multivector x = f("(1/2)[ +23 -45 +AB -CD ]", 15);
  CHECK(x.size() == 4);
  CHECK(x.coeff(m("45")) == Rational(-1, 2));
  CHECK(parse_form(format_form(x), 15) == x);
  CHECK_THROWS_AS(parse_form("+12 +zz", 7), ParseError);
  CHECK_THROWS_AS(parse_form("+19", 7), ParseError);
}

TEST_CASE("geometric product examples") {
  Multivector t = build("theta64");
  Multivector lhs = 3 * Multivector::pseudoscalar(7) + t;
  CHECK(lhs * lhs == Multivector::scalar(7, -16));
  Multivector psi = build("psi");
  CHECK(psi * psi == Multivector::scalar(15, -1));
  CHECK(t * Multivector::scalar(7, 1) == t);
}

TEST_CASE("commutator") {
  Multivector x = f("+12 +34", 7);
  CHECK(mv_commutator(x, x).is_zero());
  CHECK(mv_commutator(f("+12", 3), f("+13", 3)) == f("-23", 3));
}

TEST_CASE("duals") {
  CHECK(dual(f("+1 +2 +3", 3)) == f("-12 +13 -23", 3));
  CHECK(dual(build("theta64")) == f("-1247 -1256 -1346 +1357 +2345 +2367 +4567", 7));
  CHECK(dual(Multivector::scalar(7, 1)) == -Multivector::pseudoscalar(7));
}

TEST_CASE("grade projection") {
  Multivector psi = build("psi");
  CHECK(grade_part(psi, 15) == Multivector::blade(15, full_mask(15), Rational(7, 8)));
  CHECK(grade_part(build("theta64"), 2).is_zero());
}

TEST_CASE("rotors") {
  Rotor r = rotor_from_bivectors(15, {{1, m("89")}, {1, m("AB")}, {1, m("CD")}, {1, m("EF")}});
  CHECK(r.product.size() == 16);
  CHECK(r.element() * reverse(r.element()) == Multivector::scalar(15, 1));
  Rotor one = rotor_from_bivectors(15, {{1, m("89")}});
  CHECK(conjugate(one, f("+89", 15)) == f("+89", 15));
  Rotor id = rotor_from_bivectors(15, {});
  Multivector phi = build("Phi");
  CHECK(conjugate(id, phi) == phi);
  CHECK(conjugate(r, phi) == phi);
  CHECK_THROWS(rotor_from_bivectors(15, {{1, m("123")}}));
}

TEST_CASE("power and reverse") {
  Multivector b = f("+12", 3);
  CHECK(power(b, 2) == Multivector::scalar(3, -1));
  CHECK(reverse(b) == -b);
}
