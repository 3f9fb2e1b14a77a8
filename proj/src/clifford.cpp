#include "sedalg/clifford.hpp"

#include <algorithm>
#include <cctype>

#include "sedalg/kernel.hpp"

namespace sedalg {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) throw DimensionError("dimension out of range: " + std::to_string(dim));
}

void same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim())
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

// Sort by mask and merge equal masks; drop zeros.
void normalise(std::vector<Multivector::Term>& t) {
  std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < t.size();) {
    Mask m = t[r].first;
    Rational c = t[r].second;
    std::size_t s = r + 1;
    for (; s < t.size() && t[s].first == m; ++s) c += t[s].second;
    if (c != 0) t[w++] = {m, std::move(c)};
    r = s;
  }
  t.resize(w);
}

constexpr char kDigits[] = "0123456789ABCDEFG";

}  // namespace

SignedBlade blade_mul(Mask a, Mask b) {
  return {kernel::reorder_parity(a, b) ? -1 : 1, a ^ b};
}

std::string mask_digits(Mask m) {
  std::string s;
  for (int k = 1; k <= kMaxDim; ++k)
    if (m & (Mask{1} << (k - 1))) s.push_back(kDigits[k]);
  return s;
}

Mask parse_mask(std::string_view digits) {
  Mask m = 0;
  for (char ch : digits) {
    int c = std::toupper(static_cast<unsigned char>(ch));
    int k = -1;
    if (c >= '1' && c <= '9') k = c - '0';
    else if (c >= 'A' && c <= 'G') k = c - 'A' + 10;
    if (k < 1) throw ParseError(std::string("bad generator index '") + ch + "'");
    Mask bit = Mask{1} << (k - 1);
    if (m & bit) throw ParseError(std::string("repeated generator index '") + ch + "'");
    m |= bit;
  }
  return m;
}

std::string rational_string(const Rational& q) {
  return q.get_str();
}

Multivector::Multivector(int dim) : dim_(dim) { check_dim(dim); }

Multivector::Multivector(int dim, std::initializer_list<std::pair<Mask, Rational>> terms)
    : dim_(dim), terms_(terms) {
  check_dim(dim);
  for (auto& t : terms_)
    if (t.first & ~full_mask(dim)) throw DimensionError("blade outside dimension");
  normalise(terms_);
}

Multivector Multivector::scalar(int dim, const Rational& c) { return blade(dim, 0, c); }

Multivector Multivector::blade(int dim, Mask m, const Rational& c) {
  Multivector x(dim);
  if (m & ~full_mask(dim)) throw DimensionError("blade outside dimension");
  if (c != 0) x.terms_.emplace_back(m, c);
  return x;
}

Multivector Multivector::pseudoscalar(int dim) { return blade(dim, full_mask(dim)); }

Multivector Multivector::from_terms(int dim, std::vector<Term> terms) {
  Multivector x(dim);
  for (auto& t : terms)
    if (t.first & ~full_mask(dim)) throw DimensionError("blade outside dimension");
  x.terms_ = std::move(terms);
  normalise(x.terms_);
  return x;
}

Rational Multivector::coeff(Mask m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Mask v) { return t.first < v; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::vector<Mask> Multivector::masks() const {
  std::vector<Mask> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) out.push_back(t.first);
  return out;
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  same_dim(*this, o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) merged.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector& Multivector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Multivector Multivector::in_dim(int dim) const {
  check_dim(dim);
  for (auto& t : terms_)
    if (t.first & ~full_mask(dim)) throw DimensionError("blade outside dimension");
  Multivector r = *this;
  r.dim_ = dim;
  return r;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(Multivector a, const Rational& c) { return a *= c; }
Multivector operator*(const Rational& c, Multivector a) { return a *= c; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  same_dim(a, b);
  const auto& bt = b.terms();
  std::vector<Mask> bm = b.masks();
  std::vector<std::uint8_t> par(bm.size());
  std::vector<Multivector::Term> out;
  out.reserve(a.size() * b.size());
  for (auto& [ma, ca] : a.terms()) {
    kernel::parity_batch(ma, bm.data(), par.data(), bm.size());
    for (std::size_t j = 0; j < bt.size(); ++j) {
      Rational c = ca * bt[j].second;
      if (par[j]) c = -c;
      out.emplace_back(ma ^ bm[j], std::move(c));
    }
  }
  return Multivector::from_terms(a.dim(), std::move(out));
}

Multivector mv_mul(const Multivector& a, const Multivector& b) { return a * b; }
Multivector mv_add(const Multivector& a, const Multivector& b) { return a + b; }
Multivector mv_scale(const Multivector& a, const Rational& c) { return a * c; }

Multivector mv_commutator(const Multivector& x, const Multivector& y) {
  return (x * y - y * x) * Rational(1, 2);
}

Multivector dual(const Multivector& x) {
  return -(Multivector::pseudoscalar(x.dim()) * x);
}

Multivector grade_part(const Multivector& x, int k) {
  std::vector<Multivector::Term> t;
  for (auto& term : x.terms())
    if (grade(term.first) == k) t.push_back(term);
  return Multivector::from_terms(x.dim(), std::move(t));
}

Multivector reverse(const Multivector& x) {
  std::vector<Multivector::Term> t = x.terms();
  for (auto& term : t)
    if (reverse_sign(term.first) < 0) term.second = -term.second;
  return Multivector::from_terms(x.dim(), std::move(t));
}

Multivector power(const Multivector& x, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  Multivector r = Multivector::scalar(x.dim(), 1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

// ---- form notation ----

namespace {

struct FormParser {
  std::string_view s;
  std::size_t pos = 0;
  int dim;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos));
  }

  std::string read_int() {
    std::size_t b = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t d = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d) fail("expected integer");
    return std::string(s.substr(b, pos - b));
  }

  Rational read_coeff() {
    ++pos;  // '('
    std::string num = read_int();
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = read_int();
    }
    if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
    ++pos;
    auto to_z = [](std::string t) {
      if (!t.empty() && t[0] == '+') t.erase(0, 1);
      return mpz_class(t, 10);
    };
    mpz_class n = to_z(num), d = to_z(den);
    if (d == 0) fail("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  Mask read_digits() {
    std::size_t b = pos;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == b) fail("expected generator indices");
    Mask m = parse_mask(s.substr(b, pos - b));
    if (m & ~full_mask(dim)) fail("generator index exceeds dimension " + std::to_string(dim));
    return m;
  }

  void terms(std::vector<Multivector::Term>& out, const Rational& scale, bool grouped) {
    while (true) {
      skip();
      if (pos >= s.size()) {
        if (grouped) fail("unterminated group");
        return;
      }
      if (s[pos] == ']') {
        if (!grouped) fail("unexpected ']'");
        ++pos;
        return;
      }
      Rational sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1;
        ++pos;
      }
      if (pos >= s.size()) fail("dangling sign");
      if (s[pos] == '(') {
        Rational c = read_coeff() * sign * scale;
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
          ++pos;
          out.emplace_back(read_digits(), c);
        } else if (pos < s.size() && s[pos] == '[') {
          ++pos;
          terms(out, c, true);
        } else if (pos >= s.size() || std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ']') {
          out.emplace_back(0, c);
        } else {
          fail("unexpected character after coefficient");
        }
      } else {
        out.emplace_back(read_digits(), sign * scale);
      }
    }
  }
};

}  // namespace

Multivector parse_form(std::string_view text, int dim) {
  check_dim(dim);
  FormParser p{text, 0, dim};
  std::vector<Multivector::Term> out;
  p.terms(out, 1, false);
  return Multivector::from_terms(dim, std::move(out));
}

std::string format_form(const Multivector& x) {
  std::string out;
  for (auto& [m, c] : x.terms()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(c < 0 ? '-' : '+');
    Rational a = abs(c);
    if (m == 0) {
      out += "(" + rational_string(a) + ")";
    } else if (a == 1) {
      out += mask_digits(m);
    } else {
      out += "(" + rational_string(a) + ")e" + mask_digits(m);
    }
  }
  return out;
}

// ---- rotors ----

Multivector Rotor::element() const {
  if (factors.size() % 2) throw std::logic_error("odd factor count has an irrational normaliser");
  Rational scale = 1;
  for (std::size_t i = 0; i < factors.size(); i += 2) scale /= 2;
  return product * scale;
}

Rotor rotor_from_bivectors(int dim, const std::vector<SignedBlade>& factors) {
  Rotor r;
  r.product = Multivector::scalar(dim, 1);
  r.inv_norm_sq = 1;
  Mask used = 0;
  for (auto& f : factors) {
    if (grade(f.mask) != 2) throw std::invalid_argument("rotor factor is not a 2-blade");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("rotor factor sign must be +1 or -1");
    if (used & f.mask) throw std::invalid_argument("rotor factors overlap");
    used |= f.mask;
    r.product = r.product * Multivector(dim, {{0, 1}, {f.mask, f.sign}});
    // (1+b)(1-b) = 1 - b^2 = 2 for a Euclidean 2-blade
    r.inv_norm_sq /= 2;
  }
  r.factors = factors;
  return r;
}

Multivector conjugate(const Rotor& r, const Multivector& x) {
  return r.product * x * reverse(r.product) * r.inv_norm_sq;
}

}  // namespace sedalg
