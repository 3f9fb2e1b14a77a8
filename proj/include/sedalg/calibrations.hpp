#pragma once
// Named calibration forms and the identities they satisfy.
//
// Cl7 forms (theta1, theta64, rho) live in dimension 7; everything built on
// the fifteen sedenion generators lives in dimension 15.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sedalg/cayley_dickson.hpp"
#include "sedalg/clifford.hpp"

namespace sedalg {

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// theta1, theta64, theta64_prime, theta64_dual, Theta, Theta_<i>, Phi_A,
// Phi_O, Phi_P, Phi, Phi_<i>, Phi_dual, psi, rho  (i = 1..15)
Multivector build(std::string_view name);
std::vector<std::string> form_names();

// Row i of the loop table: the 7-blade, its class and geometry label, and
// the 3-form printed beside it.
struct LoopFormRow {
  int i = 0;
  Mask phi = 0;
  std::string cls;       // "O" or "P4"
  std::string geometry;  // Face, Plane, Cone, Folly
  Multivector printed;   // displayed 3-form (support only is used)
};
std::vector<LoopFormRow> loop_form_rows();

// Terms of 3Theta whose support lies inside Phi_i, with Theta's signs.
Multivector theta_i(int i);
Multivector phi_i(int i);
// 'A' for i=1, 'O' for 2..8, 'P' for 9..15
char phi_family(int i);
// Index 1..15 of the Phi term with this 7-blade, 0 if none.
int phi_index(Mask seven);

struct AlgebraRow {
  std::string tag;
  AlgebraCounts counts;
  Multivector form;
};
std::vector<AlgebraRow> algebra_identification_rows();

struct IdentityReport {
  std::string id;
  bool pass = false;
  Multivector lhs, rhs;
  std::string note;
};

std::vector<std::string> identity_ids();
IdentityReport verify_identity(std::string_view id);

struct CubeLaw {
  int i = 0;
  bool pass = false;
  // for i >= 9: the single signed Theta_i term that makes the law hold
  std::optional<Multivector> theta;
  int admissible = 0;
};
// Theta_i^3 = -43 Theta_i - 42 Phi_i (i <= 8), -19 Theta_i + 6 Phi_i + 24 theta (i >= 9)
CubeLaw cube_law(int i);

struct QuintetCounts {
  long total = 0, passing = 0, failing = 0;
};
// Five-term products prod (1+t)/2 over Phi_dual terms compared with (1+Phi_dual)/16.
QuintetCounts idempotent_quintets(int jobs = 1);
bool quintet_passes(const std::vector<Mask>& five);

struct SharpReport {
  int n = 0;
  int basis_size = 0;
  bool closed = false;
  bool commutative = false;
  bool squares_plus_one = false;
  // product of two distinct non-unit terms is a third term
  bool third_term = false;
  int extended_size = 0;
  bool extended_closed = false;
};
SharpReport sharp_algebra(int n);

struct SwapProfile {
  std::string a_partner = "-";  // family swapped with Phi_A, or "-"
  int a_swaps = 0, within_o = 0, within_p = 0, cross = 0;
  int moved_terms = 0;
  bool operator==(const SwapProfile&) const = default;
};
std::string to_string(const SwapProfile& p);

// Pair swaps among Phi's terms given each term's image (from, to).
SwapProfile count_swaps(const std::vector<std::pair<Mask, Mask>>& images);

// Left multiply Phi's terms by the dual of Phi_i and count pair swaps.
SwapProfile pair_swap_profile(int i);

}  // namespace sedalg
