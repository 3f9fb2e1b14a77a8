#pragma once
// Quad-rotor invariants of Phi: generation from the 8-blades of Phi_dual,
// invariance and stabiliser tests, the alpha/beta/delta split, Lie closure
// of the signed families and the rank checks on the 14-element subalgebra.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sedalg/calibrations.hpp"
#include "sedalg/clifford.hpp"
#include "sedalg/span.hpp"

namespace sedalg {

class NotDualTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InvariantCandidate {
  std::vector<SignedBlade> terms;  // in generation or printed order
  Rational coeff{1, 2};
  char family = '?';  // A, O, P: class of the Phi term complementary to the source
  char kind = '?';    // C cyclic pairing, M mixed pairing
  int pairing = -1;   // index into the cyclic (0..2) or mixed (0..3) pairings
  int variant = 1;    // 1..4
  Mask source = 0;    // 8-blade of Phi_dual

  // "A", "OC", "PC", "OM", "PM" (the A family is not split by pairing kind)
  std::string family_key() const;
  Multivector element() const;
  std::string to_string() const;
  Mask support() const;
};

// Sign patterns applied termwise for variants 1..4.
const std::array<std::array<int, 4>, 4>& variant_patterns();
InvariantCandidate with_variant(const InvariantCandidate& base, int variant);

char source_family(Mask eight);
std::vector<InvariantCandidate> cyclic_invariants(Mask term);
std::vector<InvariantCandidate> mixed_invariants(Mask term);
// 105 all-positive primaries: Phi_dual terms in mask order, cyclic then mixed.
std::vector<InvariantCandidate> primary_invariants();
// 420: every primary under every variant pattern.
std::vector<InvariantCandidate> signed_candidates();

// "(1/2)[ +23 -45 +AB -CD ]" or "+89 +AB +CD +EF", term order kept.
InvariantCandidate parse_candidate(std::string_view text);
// Fill family, kind, pairing and source by matching against the primaries.
// Returns false when the support is not a primary's.
bool identify(InvariantCandidate& c);

Rotor quad_rotor(const InvariantCandidate& c);

struct InvarianceResult {
  bool strict = false;
  // same support as Phi with every coefficient +-1
  bool relaxed = false;
  std::vector<Mask> negated;  // Phi terms whose sign flips
};
InvarianceResult is_invariant(const InvariantCandidate& c);

// automorphism_filter under map15
bool map_filter(const InvariantCandidate& c);

struct QuadDecomposition {
  Multivector r2;  // prod (1 + s b) / 2
  Multivector alpha, beta, delta;
  Multivector q;   // (sum s b) / 2
  bool alpha_idempotent = false, beta_square = false, alpha_beta = false, beta_alpha = false;
  bool alpha_delta = false, delta_alpha = false, beta_delta = false, delta_beta = false;
  bool delta_square = false, alpha_form = false;
  // (q^4 + 2q^3 + 7q^2 + 8q + 6)/6 equals the unit rotor prod (1 + s b)/4
  bool polynomial = false;
  bool all() const;
};
QuadDecomposition alpha_beta_delta(const InvariantCandidate& c);

struct StabilizerResult {
  bool holds = false;
  bool degenerate = false;  // no rotation: delta vanishes and the test is vacuous
};
// delta Theta + Theta delta + delta Theta delta == 3 alpha Theta
StabilizerResult stabilizer_check(const InvariantCandidate& c);

// ---- printed families ----

struct FixtureEntry {
  int index = 0;  // 1-based
  InvariantCandidate printed;
  InvariantCandidate used;  // printed, or the listed correction
  bool corrected = false;
  bool identified = false;
};

// keys: "A", "OC", "PC", "OM", "PM"
const std::vector<std::string>& family_keys();
std::string family_fixture(const std::string& key);
std::vector<FixtureEntry> fixture_family(const std::string& key);
// Elements of a family under one variant (printed-order sign pattern).
std::vector<Multivector> family_variant(const std::string& key, int variant);

// ---- sign search over all primaries ----

struct SignSearchRow {
  InvariantCandidate candidate;
  bool invariant = false, filter = false, stabilizer = false;
};
// Each primary under the 8 sign classes with the first sign fixed to +.
std::vector<SignSearchRow> sign_search(int jobs = 1);

// ---- Lie closure tables ----

struct CellResult {
  std::set<std::string> labels;  // family-variant spans the products fall in
  bool nz = false;               // some product is two terms outside every span
  int products = 0, zero = 0, unattributed = 0;
  std::string text() const;      // "OC1+OC3", "nz", "0"
  bool matches(const std::string& expected) const;
};

// "OC3" and the like; attribution follows family_variant_keys() order.
const std::vector<std::string>& family_variant_keys();
CellResult commutator_cell(const std::string& left, const std::string& right);
std::array<std::array<CellResult, 4>, 4> family_commutator_table(const std::string& left, const std::string& right,
                                                                int jobs = 1);
// Every commutator of a left-family element with a right-family element lies
// in the joint span of the target families (all variants) or vanishes.
bool family_products_in(const std::string& left, const std::string& right, const std::vector<std::string>& targets);

struct CrossCase {
  std::string left, right, expected;
  CellResult computed;
  bool pass = false;
  std::optional<std::string> swapped_match;  // the variant-swapped cell, if it matches instead
};
std::vector<CrossCase> cross_product_cases();

struct FlaggedCell {
  std::string left, right;
  CellResult cell;
};
// Non-nz products between different families that are not listed cases.
std::vector<FlaggedCell> extra_cross_products(int jobs = 1);

// ---- 14-element subalgebra ----

struct G2Report {
  int oc_rank_printed = 0, oc_rank = 0;
  bool oc_closed = false;
  int cl15_rank = 0;
  int cl15_outside_oc = 0;  // cl15 elements not in span(OC)
  int combined_rank = 0;    // rank of span(OC + cl15)
  int combined_rank_corrected = 0;  // same with the listed sign corrections
  bool cl15_commutators_in_oc = false;
  bool cl15_self_closed = false;            // as printed
  bool cl15_corrected_self_closed = false;  // with the listed sign corrections
  bool cl7_support_match = false;
  std::vector<std::string> cl7_mismatches;
};
G2Report g2_checks();

// Table rows "letter (1/2)[ ... ]" with errata applied when corrected is set.
std::vector<std::pair<std::string, Multivector>> g2_table(const std::string& name, bool corrected);

// ---- action of the all-positive primaries on Phi ----

struct AutProfileRow {
  char family = '?';
  std::string kind;  // cyclic, mixed, mixed-o4, mixed-other
  int members = 0;
  std::vector<SwapProfile> profiles;  // distinct profiles seen
};
std::vector<AutProfileRow> aut_swap_profiles();

// ---- seven-dimensional pair system ----

struct PairInvariant {
  SignedBlade a, b;
  bool invariant = false;
  bool filter = false;
};
// For each theta64_dual term and each of its three pairings, the second-blade
// signs that keep theta64 invariant (one row per sign found).
std::vector<PairInvariant> theta64_pair_invariants();

// ---- variant scheme ----

struct VariantRow {
  std::string family;
  int variant = 0;
  int total = 0, invariant = 0, filter = 0;
};
std::vector<VariantRow> variant_scheme();

}  // namespace sedalg
