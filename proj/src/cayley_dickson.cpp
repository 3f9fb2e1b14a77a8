#include "sedalg/cayley_dickson.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace sedalg {

namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxLevel) throw DimensionError("Cayley-Dickson level out of range: " + std::to_string(level));
}

// Recursive doubling on the top generator h = o_level.
SignedBlade cd_mul_rec(Mask a, Mask b, int level) {
  if (level == 0) return {1, 0};
  const Mask h = Mask{1} << (level - 1);
  const bool au = a & h, bu = b & h;
  const Mask a0 = a & ~h, b0 = b & ~h;
  if (!au && !bu) return cd_mul_rec(a0, b0, level - 1);
  if (au && bu) {
    // (0,p)(0,q) = (-q* p, 0)
    SignedBlade r = cd_mul_rec(b0, a0, level - 1);
    return {b0 ? r.sign : -r.sign, r.mask};
  }
  if (!au) {
    // (p,0)(0,q) = (0, q p)
    SignedBlade r = cd_mul_rec(b0, a0, level - 1);
    return {r.sign, r.mask | h};
  }
  // (0,p)(q,0) = (0, p q*)
  SignedBlade r = cd_mul_rec(a0, b0, level - 1);
  return {b0 ? -r.sign : r.sign, r.mask | h};
}

struct CdTables {
  std::array<std::vector<SignedBlade>, kMaxLevel + 1> t;
  CdTables() {
    for (int n = 0; n <= kMaxLevel; ++n) {
      Mask sz = Mask{1} << n;
      t[n].resize(sz * sz);
      for (Mask a = 0; a < sz; ++a)
        for (Mask b = 0; b < sz; ++b) t[n][a * sz + b] = cd_mul_rec(a, b, n);
    }
  }
};

const CdTables& tables() {
  static const CdTables tb;
  return tb;
}

void cd_normalise(std::vector<CDElement::Term>& t) {
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

SignedBlade smul(const BasisAlgebra& alg, SignedBlade x, SignedBlade y) {
  SignedBlade r = alg.mul(x.mask, y.mask);
  return {x.sign * y.sign * r.sign, r.mask};
}

bool assoc_nonzero(const BasisAlgebra& alg, Mask a, Mask b, Mask c) {
  SignedBlade A{1, a}, B{1, b}, C{1, c};
  return !(smul(alg, smul(alg, A, B), C) == smul(alg, A, smul(alg, B, C)));
}

}  // namespace

SignedBlade cd_mul(Mask a, Mask b, int level) {
  check_level(level);
  Mask sz = Mask{1} << level;
  if (a >= sz || b >= sz) throw DimensionError("basis element outside level");
  return tables().t[level][a * sz + b];
}

std::string cd_name(Mask m) {
  if (m == 0) return "1";
  return "o" + mask_digits(m);
}

std::string cd_signed_name(SignedBlade b) {
  return (b.sign < 0 ? "-" : "+") + cd_name(b.mask);
}

SignedBlade parse_cd_signed(std::string_view s) {
  int sign = 1;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    sign = s[0] == '-' ? -1 : 1;
    s.remove_prefix(1);
  }
  if (s == "1") return {sign, 0};
  if (s.size() < 2 || (s[0] != 'o' && s[0] != 'O')) throw ParseError("bad Cayley-Dickson element: " + std::string(s));
  return {sign, parse_mask(s.substr(1))};
}

// ---- CDElement ----

CDElement::CDElement(int level) : level_(level) { check_level(level); }

CDElement CDElement::basis(int level, Mask m, const Rational& c) {
  return from_terms(level, {{m, c}});
}

CDElement CDElement::from_terms(int level, std::vector<Term> terms) {
  CDElement x(level);
  for (auto& t : terms)
    if (t.first >= (Mask{1} << level)) throw DimensionError("basis element outside level");
  x.terms_ = std::move(terms);
  cd_normalise(x.terms_);
  return x;
}

Rational CDElement::coeff(Mask m) const {
  for (auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

CDElement CDElement::operator-() const {
  CDElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CDElement& CDElement::operator+=(const CDElement& o) {
  if (level_ != o.level_) throw DimensionError("level mismatch");
  auto t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  cd_normalise(t);
  terms_ = std::move(t);
  return *this;
}

CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
CDElement operator-(const CDElement& a, const CDElement& b) { return a + (-b); }

CDElement operator*(const CDElement& a, const CDElement& b) {
  if (a.level() != b.level()) throw DimensionError("level mismatch");
  std::vector<CDElement::Term> out;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      SignedBlade r = cd_mul(ma, mb, a.level());
      out.emplace_back(r.mask, r.sign * ca * cb);
    }
  return CDElement::from_terms(a.level(), std::move(out));
}

CDElement operator*(const Rational& c, const CDElement& a) {
  auto t = a.terms();
  for (auto& x : t) x.second *= c;
  return CDElement::from_terms(a.level(), std::move(t));
}

std::string format_cd(const CDElement& x) {
  std::string out;
  for (auto& [m, c] : x.terms()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(c < 0 ? '-' : '+');
    Rational a = abs(c);
    if (a != 1) out += "(" + rational_string(a) + ")";
    out += cd_name(m);
  }
  return out;
}

CDElement associator(const CDElement& a, const CDElement& b, const CDElement& c) {
  return (a * b) * c - a * (b * c);
}

// ---- tables ----

MulTable cd_table(int level) {
  check_level(level);
  MulTable t;
  t.level = level;
  for (Mask m = 1; m < (Mask{1} << level); ++m) t.order.push_back(m);
  for (Mask a : t.order) {
    std::vector<SignedBlade> row;
    for (Mask b : t.order) row.push_back(cd_mul(a, b, level));
    t.entries.push_back(std::move(row));
  }
  return t;
}

std::string MulTable::to_csv() const {
  std::ostringstream os;
  os << "x";
  for (Mask m : order) os << ',' << cd_name(m);
  os << '\n';
  for (std::size_t i = 0; i < order.size(); ++i) {
    os << cd_name(order[i]);
    for (auto& e : entries[i]) os << ',' << cd_signed_name(e);
    os << '\n';
  }
  return os.str();
}

std::string MulTable::to_json() const {
  std::ostringstream os;
  os << "{\"level\":" << level << ",\"order\":[";
  for (std::size_t i = 0; i < order.size(); ++i) os << (i ? "," : "") << '"' << cd_name(order[i]) << '"';
  os << "],\"entries\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      os << (j ? "," : "") << '"' << cd_signed_name(entries[i][j]) << '"';
    os << ']';
  }
  os << "]}";
  return os.str();
}

// ---- triads ----

std::string triad_type_name(TriadType t) {
  switch (t) {
    case TriadType::Quaternion: return "Quaternion";
    case TriadType::AntiQuaternion: return "AntiQuaternion";
    case TriadType::A: return "A";
    case TriadType::B: return "B";
    case TriadType::C: return "C";
    case TriadType::X: return "X";
    case TriadType::Other: return "Other";
  }
  return "?";
}

BasisAlgebra cd_algebra(int level) {
  check_level(level);
  BasisAlgebra alg;
  alg.size = 1 << level;
  alg.table = tables().t[level];
  return alg;
}

TriadClass classify_triad(const BasisAlgebra& alg, Mask a, Mask b, Mask c) {
  TriadClass tc;
  tc.nonzero = {assoc_nonzero(alg, b, a, c), assoc_nonzero(alg, a, b, c), assoc_nonzero(alg, a, c, b)};
  const auto& z = tc.nonzero;
  if (z[0] && !z[1] && !z[2]) tc.type = TriadType::A;
  else if (!z[0] && z[1] && !z[2]) tc.type = TriadType::B;
  else if (!z[0] && !z[1] && z[2]) tc.type = TriadType::C;
  else if (z[0] && z[1] && z[2]) tc.type = TriadType::X;
  else if (!z[0] && !z[1] && !z[2]) {
    SignedBlade abc = smul(alg, smul(alg, {1, a}, {1, b}), {1, c});
    if (abc.mask != 0) tc.type = TriadType::Other;
    else tc.type = abc.sign < 0 ? TriadType::Quaternion : TriadType::AntiQuaternion;
  } else {
    tc.type = TriadType::Other;
  }
  return tc;
}

TriadClass triad_class(Mask a, Mask b, Mask c, int level) {
  check_level(level);
  const Mask top = Mask{1} << level;
  if (!a || !b || !c || a >= top || b >= top || c >= top) throw std::invalid_argument("triad needs pure basis elements");
  if (a == b || b == c || a == c) throw std::invalid_argument("triad elements must be distinct");
  std::array<Mask, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return classify_triad(cd_algebra(level), s[0], s[1], s[2]);
}

std::map<TriadType, long> census(int level, int jobs) {
  BasisAlgebra alg = cd_algebra(level);
  const Mask top = Mask{1} << level;
  jobs = std::max(1, jobs);
  std::vector<std::map<TriadType, long>> part(jobs);
  auto work = [&](int w) {
    for (Mask a = 1 + w; a < top; a += jobs)
      for (Mask b = a + 1; b < top; ++b)
        for (Mask c = b + 1; c < top; ++c) ++part[w][classify_triad(alg, a, b, c).type];
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> th;
    for (int w = 0; w < jobs; ++w) th.emplace_back(work, w);
    for (auto& t : th) t.join();
  }
  std::map<TriadType, long> out;
  for (auto& p : part)
    for (auto& [k, v] : p) out[k] += v;
  return out;
}

// ---- loops ----

std::array<Mask, 7> generate_loop(Mask a, Mask b, Mask c, int level) {
  check_level(level);
  const Mask top = Mask{1} << level;
  if (!a || !b || !c || a >= top || b >= top || c >= top || a == b || b == c || a == c)
    throw std::invalid_argument("loop generators must be distinct pure basis elements");
  if ((a ^ b) == c) throw QuaternionicTriad("triad closes in a quaternion subalgebra");
  std::array<Mask, 7> loop{a, b, a ^ b, c, a ^ c, b ^ c, a ^ b ^ c};
  std::sort(loop.begin(), loop.end());
  return loop;
}

std::vector<std::array<Mask, 7>> enumerate_loops(int level) {
  check_level(level);
  const Mask top = Mask{1} << level;
  std::set<std::array<Mask, 7>> seen;
  for (Mask a = 1; a < top; ++a)
    for (Mask b = a + 1; b < top; ++b)
      for (Mask c = b + 1; c < top; ++c) {
        if ((a ^ b) == c) continue;
        seen.insert(generate_loop(a, b, c, level));
      }
  return {seen.begin(), seen.end()};
}

namespace {

AlgebraClass classify_algebra(const BasisAlgebra& alg) {
  AlgebraClass out;
  auto& k = out.counts;
  for (Mask a = 1; a < static_cast<Mask>(alg.size); ++a)
    for (Mask b = a + 1; b < static_cast<Mask>(alg.size); ++b)
      for (Mask c = b + 1; c < static_cast<Mask>(alg.size); ++c) {
        switch (classify_triad(alg, a, b, c).type) {
          case TriadType::A: ++k.a; break;
          case TriadType::B: ++k.b; break;
          case TriadType::C: ++k.c; break;
          case TriadType::X: ++k.x; break;
          case TriadType::Quaternion: ++k.quaternion; break;
          case TriadType::AntiQuaternion: ++k.anti_quaternion; break;
          case TriadType::Other: break;
        }
      }
  out.tag = "?";
  if (k.x == 28 && k.a == 0 && k.b == 0 && k.c == 0) out.tag = "O";
  else if (k.x == 4 && k.a + k.b + k.c == 24 && k.a == k.c) out.tag = "P" + std::to_string(k.b + 4);
  return out;
}

}  // namespace

AlgebraClass classify_loop(const std::array<Mask, 7>& loop, int level) {
  BasisAlgebra alg;
  alg.size = 8;
  alg.table.resize(64);
  auto id_of = [&](Mask m) -> Mask {
    if (m == 0) return 0;
    for (int i = 0; i < 7; ++i)
      if (loop[i] == m) return i + 1;
    throw std::invalid_argument("loop is not closed");
  };
  auto mask_of = [&](Mask id) { return id == 0 ? Mask{0} : loop[id - 1]; };
  for (Mask i = 0; i < 8; ++i)
    for (Mask j = 0; j < 8; ++j) {
      SignedBlade r = cd_mul(mask_of(i), mask_of(j), level);
      alg.table[i * 8 + j] = {r.sign, id_of(r.mask)};
    }
  return classify_algebra(alg);
}

void check_fano_incidence(const Multivector& form) {
  if (form.size() != 7) throw IncidenceError("expected 7 terms, found " + std::to_string(form.size()));
  int seen[8][8] = {};
  for (auto& [m, c] : form.terms()) {
    if (grade(m) != 3) throw IncidenceError("term " + mask_digits(m) + " is not grade 3");
    if (m & ~full_mask(7)) throw IncidenceError("term " + mask_digits(m) + " uses an index above 7");
    if (c != 1 && c != -1) throw IncidenceError("coefficients must be +1 or -1");
    int idx[3], n = 0;
    for (int k = 0; k < 7; ++k)
      if (m >> k & 1) idx[n++] = k + 1;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) ++seen[idx[p]][idx[q]];
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (seen[i][j] != 1)
        throw IncidenceError("generators " + std::to_string(i) + "," + std::to_string(j) + " share " +
                             std::to_string(seen[i][j]) + " terms");
}

BasisAlgebra algebra_from_form(const Multivector& form) {
  check_fano_incidence(form);
  BasisAlgebra alg;
  alg.size = 8;
  alg.table.assign(64, {0, 0});
  for (Mask i = 0; i < 8; ++i) {
    alg.table[0 * 8 + i] = {1, i};
    alg.table[i * 8 + 0] = {1, i};
  }
  for (Mask i = 1; i < 8; ++i) alg.table[i * 8 + i] = {-1, 0};
  for (auto& [m, c] : form.terms()) {
    Mask idx[3];
    int n = 0;
    for (int k = 0; k < 7; ++k)
      if (m >> k & 1) idx[n++] = k + 1;
    int s = c > 0 ? 1 : -1;
    const Mask cyc[3][3] = {{idx[0], idx[1], idx[2]}, {idx[1], idx[2], idx[0]}, {idx[2], idx[0], idx[1]}};
    for (auto& t : cyc) {
      alg.table[t[0] * 8 + t[1]] = {s, t[2]};
      alg.table[t[1] * 8 + t[0]] = {-s, t[2]};
    }
  }
  return alg;
}

AlgebraClass octonion_like_classify(const Multivector& form) {
  return classify_algebra(algebra_from_form(form));
}

// ---- zero divisors ----

ZeroDivisorReport zero_divisor_pairs(const std::array<Mask, 7>& loop, int level) {
  check_level(level);
  ZeroDivisorReport rep;
  std::set<std::array<Mask, 4>> supports;
  auto is_zero = [&](Mask a1, Mask a2, int sx, Mask b1, Mask b2, int sy) {
    CDElement x = CDElement::from_terms(level, {{a1, 1}, {a2, sx}});
    CDElement y = CDElement::from_terms(level, {{b1, 1}, {b2, sy}});
    return (x * y).is_zero();
  };
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = k + 1; l < 7; ++l) {
          Mask a1 = loop[i], a2 = loop[j], b1 = loop[k], b2 = loop[l];
          if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
          // keep each unordered pair once: x's support sorts first
          if (std::make_pair(a1, a2) > std::make_pair(b1, b2)) continue;
          for (int sx : {1, -1})
            for (int sy : {1, -1}) {
              if (!is_zero(a1, a2, sx, b1, b2, sy) && !is_zero(b1, b2, sy, a1, a2, sx)) continue;
              rep.pairs.push_back({a1, a2, b1, b2, sx, sy});
              supports.insert({a1, a2, b1, b2});
            }
        }
  rep.support_pairs = static_cast<int>(supports.size());
  return rep;
}

// ---- counting ----

StackingCounts stacking_counts(int level) {
  if (level < 2) throw std::invalid_argument("stacking counts need level >= 2");
  check_level(level);
  StackingCounts s;
  long N = (1L << level);
  s.h = (N - 1) * (N - 2) / 6;
  s.t = (N - 1) * (N - 2) * (N - 4) / 168;
  s.embeddings = N - 1;
  if (level <= 4) {
    auto c = census(level);
    s.h_found = c[TriadType::Quaternion] + c[TriadType::AntiQuaternion];
    s.t_found = static_cast<long>(enumerate_loops(level).size());
    // subalgebras on n-1 generators: XOR-closed sets of 2^(n-1)-1 pure elements
    const int want = (1 << (level - 1)) - 1;
    const Mask pure = static_cast<Mask>(N - 1);
    long found = 0;
    for (Mask sub = 1; sub < (Mask{1} << pure); ++sub) {
      if (__builtin_popcount(sub) != want) continue;
      bool closed = true;
      for (Mask a = 1; a <= pure && closed; ++a) {
        if (!(sub >> (a - 1) & 1)) continue;
        for (Mask b = a + 1; b <= pure; ++b) {
          if (!(sub >> (b - 1) & 1)) continue;
          if (!(sub >> ((a ^ b) - 1) & 1)) {
            closed = false;
            break;
          }
        }
      }
      if (closed) ++found;
    }
    s.embeddings_found = found;
  }
  return s;
}

SharingReport loop_sharing(int level) {
  auto loops = enumerate_loops(level);
  BasisAlgebra alg = cd_algebra(level);
  const Mask top = Mask{1} << level;
  std::vector<std::array<Mask, 3>> triads;
  for (Mask a = 1; a < top; ++a)
    for (Mask b = a + 1; b < top; ++b)
      for (Mask c = b + 1; c < top; ++c) {
        auto t = classify_triad(alg, a, b, c).type;
        if (t == TriadType::Quaternion || t == TriadType::AntiQuaternion) triads.push_back({a, b, c});
      }
  auto contains = [](const std::array<Mask, 7>& l, const std::array<Mask, 3>& t) {
    for (Mask m : t)
      if (std::find(l.begin(), l.end(), m) == l.end()) return false;
    return true;
  };
  SharingReport r;
  r.triads = static_cast<int>(triads.size());
  r.loops = static_cast<int>(loops.size());
  r.loops_per_triad_min = 1 << 30;
  r.shared_per_loop_pair_min = 1 << 30;
  for (auto& t : triads) {
    int n = 0;
    for (auto& l : loops) n += contains(l, t);
    r.loops_per_triad_min = std::min(r.loops_per_triad_min, n);
    r.loops_per_triad_max = std::max(r.loops_per_triad_max, n);
  }
  for (std::size_t i = 0; i < loops.size(); ++i)
    for (std::size_t j = i + 1; j < loops.size(); ++j) {
      int n = 0;
      for (auto& t : triads) n += contains(loops[i], t) && contains(loops[j], t);
      r.shared_per_loop_pair_min = std::min(r.shared_per_loop_pair_min, n);
      r.shared_per_loop_pair_max = std::max(r.shared_per_loop_pair_max, n);
    }
  if (triads.empty()) r.loops_per_triad_min = 0;
  if (loops.size() < 2) r.shared_per_loop_pair_min = 0;
  return r;
}

}  // namespace sedalg
