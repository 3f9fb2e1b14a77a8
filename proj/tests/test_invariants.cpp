#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sedalg/invariants.hpp"

using namespace sedalg;

namespace {
Mask m(const char* d) { return parse_mask(d); }
std::set<Mask> support(const InvariantCandidate& c) {
  std::set<Mask> s;
  for (auto& t : c.terms) s.insert(t.mask);
  return s;
}
}  // namespace

TEST_CASE("generation counts") {
  CHECK(primary_invariants().size() == 105);
  CHECK(signed_candidates().size() == 420);
  int cyc = 0;
  for (auto& p : primary_invariants()) cyc += p.kind == 'C' || p.family == 'A';
  CHECK(cyc >= 45);
}

TEST_CASE("cyclic and mixed pairings") {
  auto has = [](const std::vector<InvariantCandidate>& v, std::set<Mask> want) {
    for (auto& c : v)
      if (support(c) == want) return true;
    return false;
  };
  CHECK(has(cyclic_invariants(m("89ABCDEF")), {m("89"), m("AB"), m("CD"), m("EF")}));
  CHECK(has(cyclic_invariants(m("234589EF")), {m("23"), m("45"), m("89"), m("EF")}));
  CHECK(has(mixed_invariants(m("89ABCDEF")), {m("8C"), m("9D"), m("AE"), m("BF")}));
  CHECK(cyclic_invariants(m("89ABCDEF")).size() == 3);
  CHECK(mixed_invariants(m("89ABCDEF")).size() == 4);
  CHECK_THROWS_AS(cyclic_invariants(m("12345678")), NotDualTerm);
}

TEST_CASE("invariance") {
  auto a1 = fixture_family("A").front();
  CHECK(is_invariant(a1.printed).strict);
  InvariantCandidate oc = parse_candidate("(1/2)[ +23 -45 +AB -CD ]");
  REQUIRE(identify(oc));
  CHECK(oc.family_key() == "OC");
  CHECK(is_invariant(oc).strict);
  InvariantCandidate bad = parse_candidate("+12 +34 +56 +78");
  CHECK_FALSE(identify(bad));
  CHECK_FALSE(is_invariant(bad).strict);
}

TEST_CASE("printed OC entry 6 only passes with the listed correction") {
  auto oc = fixture_family("OC");
  REQUIRE(oc.size() == 21);
  CHECK(oc[5].corrected);
  InvarianceResult printed = is_invariant(oc[5].printed);
  CHECK_FALSE(printed.strict);
  CHECK(printed.relaxed);
  CHECK(printed.negated.size() == 8);
  CHECK(is_invariant(oc[5].used).strict);
}

TEST_CASE("alpha beta delta") {
  for (auto& e : fixture_family("OC")) {
    QuadDecomposition d = alpha_beta_delta(e.used);
    CHECK(d.all());
    CHECK(grade_part(d.delta, 4).size() == 6);
  }
}

TEST_CASE("stabiliser") {
  for (auto& e : fixture_family("OC")) CHECK(stabilizer_check(e.used).holds);
  for (auto fam : {"A", "PC", "OM", "PM"}) {
    CAPTURE(fam);
    auto rep = fixture_family(fam).front().used;
    CHECK_FALSE((map_filter(rep) && stabilizer_check(rep).holds));
  }
  InvariantCandidate none;
  StabilizerResult id = stabilizer_check(none);
  CHECK(id.holds);
  CHECK(id.degenerate);
}

TEST_CASE("commutator tables") {
  CHECK(commutator_cell("A1", "A1").text() == "A1+A2");
  CHECK(commutator_cell("OC1", "OC1").text() == "OC1");
  auto mixed = family_commutator_table("OM", "OM");
  for (auto& row : mixed)
    for (auto& c : row) CHECK(c.nz);
}

TEST_CASE("subalgebra checks") {
  G2Report g = g2_checks();
  CHECK(g.oc_rank == 14);
  CHECK(g.oc_closed);
  CHECK(g.cl15_rank == 14);
  CHECK(g.cl7_support_match);
  CHECK(g.cl15_corrected_self_closed);
  auto cl15 = g2_table("g2_cl15", false);
  REQUIRE(cl15.size() == 14);
  CHECK(cl15[0].second == parse_form("(1/2)[ +23 -45 +AB -CD ]", 15));
}
