#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sedalg/calibrations.hpp"
#include "sedalg/cayley_dickson.hpp"

using namespace sedalg;

namespace {
Mask o(const char* d) { return parse_mask(d); }
CDElement b(const char* d, int level = 4) { return CDElement::basis(level, o(d)); }
}  // namespace

TEST_CASE("basis products from the sedenion table") {
  CHECK(cd_mul(o("1"), o("2"), 4) == SignedBlade{1, o("12")});
  CHECK(cd_mul(o("1"), o("12"), 4) == SignedBlade{-1, o("2")});
  CHECK(cd_mul(o("4"), o("14"), 4) == SignedBlade{1, o("1")});
  CHECK(parse_cd_signed("-o3") == SignedBlade{-1, o("3")});
  CHECK(cd_signed_name({-1, 0}) == "-1");
}

TEST_CASE("small tables") {
  MulTable t1 = cd_table(1);
  REQUIRE(t1.entries.size() == 1);
  CHECK(t1.entries[0][0] == SignedBlade{-1, 0});
  MulTable t2 = cd_table(2);
  CHECK(cd_mul(o("1"), o("2"), 2) == SignedBlade{1, o("12")});
  CHECK(cd_mul(o("2"), o("1"), 2) == SignedBlade{-1, o("12")});
  CHECK(t2.entries.size() == 3);
  CHECK(cd_table(4).entries.size() == 15);
}

TEST_CASE("associators and triad types") {
  CHECK(associator(b("1"), b("2"), b("12")).is_zero());
  CHECK_FALSE(associator(b("1"), b("2"), b("3")).is_zero());
  CHECK(triad_class(o("1"), o("2"), o("12"), 4).type == TriadType::Quaternion);
  CHECK(triad_class(o("1"), o("2"), o("3"), 4).type == TriadType::X);
  // with this doubling convention the nonzero associator is [a,c,b], so type C
  TriadClass p = triad_class(o("1"), o("2"), o("34"), 4);
  CHECK(p.type == TriadType::C);
  CHECK(p.nonzero == std::array<bool, 3>{false, false, true});
  CHECK(associator(b("2"), b("1"), b("34")).is_zero());
  CHECK(associator(b("1"), b("2"), b("34")).is_zero());
  CHECK_FALSE(associator(b("1"), b("34"), b("2")).is_zero());
  // type X: all three nonzero
  CHECK(triad_class(o("1"), o("2"), o("3"), 4).nonzero == std::array<bool, 3>{true, true, true});
}

TEST_CASE("census") {
  auto c2 = census(2);
  CHECK(c2[TriadType::Quaternion] + c2[TriadType::AntiQuaternion] == 1);
  auto c3 = census(3);
  CHECK(c3[TriadType::Quaternion] + c3[TriadType::AntiQuaternion] == 7);
  CHECK(c3[TriadType::X] == 28);
  CHECK(c3[TriadType::A] + c3[TriadType::B] + c3[TriadType::C] == 0);
  auto c4 = census(4, 2);
  CHECK(c4[TriadType::Quaternion] + c4[TriadType::AntiQuaternion] == 35);
  CHECK(c4[TriadType::X] == 252);
  CHECK(c4[TriadType::A] == 84);
  CHECK(c4[TriadType::C] == 84);
  CHECK(c4[TriadType::B] == 0);
}

TEST_CASE("loops") {
  auto l = generate_loop(o("1"), o("2"), o("3"), 4);
  CHECK(l == std::array<Mask, 7>{o("1"), o("2"), o("12"), o("3"), o("13"), o("23"), o("123")});
  auto p = generate_loop(o("1"), o("2"), o("34"), 4);
  for (const char* x : {"34", "134", "234", "1234"}) CHECK(std::find(p.begin(), p.end(), o(x)) != p.end());
  CHECK(classify_loop(p, 4).tag == "P4");
  CHECK(classify_loop(l, 4).tag == "O");
  CHECK_THROWS_AS(generate_loop(o("1"), o("2"), o("12"), 4), QuaternionicTriad);
  CHECK(enumerate_loops(4).size() == 15);
}

TEST_CASE("algebra identification rows") {
  auto rows = algebra_identification_rows();
  REQUIRE(rows.size() == 7);
  for (auto& r : rows) {
    CAPTURE(r.tag);
    AlgebraClass c = octonion_like_classify(r.form);
    CHECK(c.tag == r.tag);
    CHECK(c.counts.a == r.counts.a);
    CHECK(c.counts.b == r.counts.b);
    CHECK(c.counts.c == r.counts.c);
    CHECK(c.counts.x == r.counts.x);
  }
  CHECK(octonion_like_classify(build("theta64")).tag == "O");
  CHECK(octonion_like_classify(build("theta1")).tag == "P14");
}

TEST_CASE("incidence errors") {
  CHECK_THROWS_AS(check_fano_incidence(parse_form("+123 +145 +167 +246 +257 +347", 7)), IncidenceError);
  CHECK_THROWS_AS(check_fano_incidence(parse_form("+123 +124 +167 +246 +257 +347 +356", 7)), IncidenceError);
}

TEST_CASE("zero divisors") {
  auto p = generate_loop(o("1"), o("2"), o("34"), 4);
  ZeroDivisorReport z = zero_divisor_pairs(p, 4);
  CHECK(z.support_pairs == 12);
  REQUIRE_FALSE(z.pairs.empty());
  auto& w = z.pairs.front();
  CDElement x = b(mask_digits(w.a1).c_str()) + Rational(w.sx) * b(mask_digits(w.a2).c_str());
  CDElement y = b(mask_digits(w.b1).c_str()) + Rational(w.sy) * b(mask_digits(w.b2).c_str());
  CHECK((x * y).is_zero());
  CHECK(zero_divisor_pairs(generate_loop(o("1"), o("2"), o("3"), 4), 4).pairs.empty());
}

TEST_CASE("stacking") {
  StackingCounts s2 = stacking_counts(2), s3 = stacking_counts(3), s4 = stacking_counts(4);
  CHECK(s2.h == 1);
  CHECK(s2.embeddings == 3);
  CHECK(s3.h == 7);
  CHECK(s3.t == 1);
  CHECK(s4.h == 35);
  CHECK(s4.t == 15);
  CHECK(s4.embeddings == 15);
  CHECK(s4.h_found == 35);
  CHECK(s4.t_found == 15);
  CHECK(s4.embeddings_found == 15);
  SharingReport sh = loop_sharing(4);
  CHECK(sh.loops_per_triad_min == 3);
  CHECK(sh.loops_per_triad_max == 3);
  CHECK(sh.shared_per_loop_pair_min == 1);
  CHECK(sh.shared_per_loop_pair_max == 1);
}
