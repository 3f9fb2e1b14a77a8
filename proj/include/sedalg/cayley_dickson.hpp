#pragma once
// Cayley-Dickson basis products by doubling, associators, triad types,
// loops (7-element subalgebras) and zero divisors.
//
// Basis element o_S of A(n) is a mask over generators 1..n, bit k-1 for o_k.
// The doubling convention is (a,b)(c,d) = (ac - d*b, da + bc*).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sedalg/clifford.hpp"

namespace sedalg {

constexpr int kMaxLevel = 6;

// o_a · o_b = sign · o_{a XOR b}
SignedBlade cd_mul(Mask a, Mask b, int level);

// "o124", or "1" for the unit
std::string cd_name(Mask m);
std::string cd_signed_name(SignedBlade b);
// Accepts "o124", "-o3", "+1", "-1".
SignedBlade parse_cd_signed(std::string_view s);

class CDElement {
 public:
  using Term = std::pair<Mask, Rational>;
  CDElement() = default;
  explicit CDElement(int level);
  static CDElement basis(int level, Mask m, const Rational& c = 1);
  static CDElement from_terms(int level, std::vector<Term> terms);

  int level() const { return level_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Mask m) const;

  CDElement operator-() const;
  CDElement& operator+=(const CDElement& o);
  bool operator==(const CDElement& o) const = default;

 private:
  int level_ = 0;
  std::vector<Term> terms_;
};

CDElement operator+(CDElement a, const CDElement& b);
CDElement operator-(const CDElement& a, const CDElement& b);
CDElement operator*(const CDElement& a, const CDElement& b);
CDElement operator*(const Rational& c, const CDElement& a);
std::string format_cd(const CDElement& x);

// (ab)c - a(bc)
CDElement associator(const CDElement& a, const CDElement& b, const CDElement& c);

struct MulTable {
  int level = 0;
  std::vector<Mask> order;  // pure elements in graded order
  std::vector<std::vector<SignedBlade>> entries;

  std::string to_csv() const;
  std::string to_json() const;
};

MulTable cd_table(int level);

// Other covers associator patterns outside the table (never seen for A(n), n<=6).
enum class TriadType { Quaternion, AntiQuaternion, A, B, C, X, Other };
std::string triad_type_name(TriadType t);

struct TriadClass {
  TriadType type;
  // nonzero pattern of [b,a,c], [a,b,c], [a,c,b]
  std::array<bool, 3> nonzero;
};

// Product on a finite signed basis where every product of basis elements is
// a signed basis element; id 0 is the unit. Used for both A(n) and the
// 7-dimensional algebras read off a 3-form.
struct BasisAlgebra {
  int size = 0;  // number of basis ids including the unit
  std::vector<SignedBlade> table;  // size*size, entry.mask holds the result id
  SignedBlade mul(Mask a, Mask b) const { return table[a * size + b]; }
};

BasisAlgebra cd_algebra(int level);

// a, b, c distinct non-unit ids, taken in the given order as (a,b,c).
TriadClass classify_triad(const BasisAlgebra& alg, Mask a, Mask b, Mask c);
// Triad of pure CD elements; sorted into bitmask order first.
TriadClass triad_class(Mask a, Mask b, Mask c, int level);

std::map<TriadType, long> census(int level, int jobs = 1);

class QuaternionicTriad : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {a, b, ab, c, ac, bc, (ab)c} as masks in graded order.
std::array<Mask, 7> generate_loop(Mask a, Mask b, Mask c, int level);

// All 7-element XOR-closed subsets of A(level), in order of their sorted members.
std::vector<std::array<Mask, 7>> enumerate_loops(int level);

struct AlgebraCounts {
  int a = 0, b = 0, c = 0, x = 0, quaternion = 0, anti_quaternion = 0;
  bool operator==(const AlgebraCounts&) const = default;
};

struct AlgebraClass {
  std::string tag;  // O, P4 ... P16, or "?" for an unlisted pattern
  AlgebraCounts counts;
};

// Classify a 7-element loop of A(level) under the doubling product.
AlgebraClass classify_loop(const std::array<Mask, 7>& loop, int level);

class IncidenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 7 grade-3 terms over generators 1..7, every pair of generators on exactly
// one term; throws IncidenceError otherwise.
void check_fano_incidence(const Multivector& form);

// s·e_ijk (i<j<k) read as g_i g_j = s g_k, cyclic in (i,j,k).
BasisAlgebra algebra_from_form(const Multivector& form);
AlgebraClass octonion_like_classify(const Multivector& form);

struct ZeroDivisorPair {
  // x = o_a1 + sx o_a2, y = o_b1 + sy o_b2 (a1<a2, b1<b2)
  Mask a1, a2, b1, b2;
  int sx, sy;
  bool operator==(const ZeroDivisorPair&) const = default;
};

struct ZeroDivisorReport {
  // unordered pairs {x, y} with xy = 0, each x and y fixed up to overall sign
  std::vector<ZeroDivisorPair> pairs;
  // distinct {{a1,a2},{b1,b2}} supports among them
  int support_pairs = 0;
};

ZeroDivisorReport zero_divisor_pairs(const std::array<Mask, 7>& loop, int level);

struct StackingCounts {
  long h = 0, t = 0, embeddings = 0;
  // exhaustive counts (filled for level <= 4, otherwise -1)
  long h_found = -1, t_found = -1, embeddings_found = -1;
};

StackingCounts stacking_counts(int level);

// How quaternion triads (closed associative triads) sit inside the loops.
struct SharingReport {
  int triads = 0, loops = 0;
  int loops_per_triad_min = 0, loops_per_triad_max = 0;
  int shared_per_loop_pair_min = 0, shared_per_loop_pair_max = 0;
};

SharingReport loop_sharing(int level);

}  // namespace sedalg
