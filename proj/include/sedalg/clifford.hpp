#pragma once
// Exact sparse multivectors over Cl(n), n <= 16, with e_k^2 = +1.
//
// Generator k (1..16) is bit k-1 of a blade mask; indices print as hex 1..F
// (G for 16). Terms are kept sorted by mask with no zero coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sedalg {

using Rational = mpq_class;
using Mask = std::uint32_t;

constexpr int kMaxDim = 16;

inline int grade(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

struct SignedBlade {
  int sign;
  Mask mask;
  bool operator==(const SignedBlade&) const = default;
};

// e_a · e_b = sign · e_{a XOR b}
SignedBlade blade_mul(Mask a, Mask b);

// +1 or -1 for reverse(e_m)
inline int reverse_sign(Mask m) {
  int k = grade(m);
  return ((k * (k - 1) / 2) & 1) ? -1 : 1;
}

// "1", "23", "9ABCDEF"; the empty mask prints as ""
std::string mask_digits(Mask m);
// Inverse of mask_digits; throws ParseError on bad digits or repeats.
Mask parse_mask(std::string_view digits);

std::string rational_string(const Rational& q);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Multivector {
 public:
  using Term = std::pair<Mask, Rational>;

  Multivector() = default;
  explicit Multivector(int dim);
  Multivector(int dim, std::initializer_list<std::pair<Mask, Rational>> terms);

  static Multivector scalar(int dim, const Rational& c);
  static Multivector blade(int dim, Mask m, const Rational& c = 1);
  static Multivector pseudoscalar(int dim);
  // Any order, repeats merged, zeros dropped.
  static Multivector from_terms(int dim, std::vector<Term> terms);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Mask m) const;
  Rational scalar_part() const { return coeff(0); }
  std::vector<Mask> masks() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Rational& c);

  bool operator==(const Multivector& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  // Same terms regardless of declared dimension.
  bool same_terms(const Multivector& o) const { return terms_ == o.terms_; }

  // Re-declared in a larger (or equal) dimension.
  Multivector in_dim(int dim) const;

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(const Multivector& a, const Multivector& b);
Multivector operator*(Multivector a, const Rational& c);
Multivector operator*(const Rational& c, Multivector a);

Multivector mv_mul(const Multivector& a, const Multivector& b);
Multivector mv_add(const Multivector& a, const Multivector& b);
Multivector mv_scale(const Multivector& a, const Rational& c);
// (xy - yx)/2
Multivector mv_commutator(const Multivector& x, const Multivector& y);
// -e_{1..n} x
Multivector dual(const Multivector& x);
Multivector grade_part(const Multivector& x, int k);
Multivector reverse(const Multivector& x);
Multivector power(const Multivector& x, int k);

// Form notation: "+123 -45 +(1/2)e23 -(16)", groups "(1/2)[ +23 -45 ]".
Multivector parse_form(std::string_view text, int dim);
std::string format_form(const Multivector& x);

struct Rotor {
  // unnormalised product of (1 + s_i b_i)
  Multivector product;
  std::vector<SignedBlade> factors;
  // product * reverse(product) * inv_norm_sq == 1
  Rational inv_norm_sq;

  // product / 2^(k/2); only exact for an even factor count
  Multivector element() const;
};

// Each factor must be a grade-2 blade; supports pairwise disjoint.
Rotor rotor_from_bivectors(int dim, const std::vector<SignedBlade>& factors);
// R x reverse(R)
Multivector conjugate(const Rotor& r, const Multivector& x);

}  // namespace sedalg
