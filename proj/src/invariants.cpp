#include "sedalg/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "sedalg/fixtures.hpp"
#include "sedalg/transfer.hpp"

namespace sedalg {

namespace {

constexpr int kDim = 15;

using Pairing = std::array<std::array<int, 2>, 4>;

const std::array<Pairing, 3> kCyclic = {{
    {{{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
    {{{0, 2}, {1, 3}, {4, 6}, {5, 7}}},
    {{{0, 3}, {1, 2}, {4, 7}, {5, 6}}},
}};

const std::array<Pairing, 4> kMixed = {{
    {{{0, 4}, {1, 5}, {2, 6}, {3, 7}}},
    {{{0, 5}, {1, 4}, {2, 7}, {3, 6}}},
    {{{0, 6}, {1, 7}, {2, 4}, {3, 5}}},
    {{{0, 7}, {1, 6}, {2, 5}, {3, 4}}},
}};

std::vector<int> indices(Mask m) {
  std::vector<int> out;
  for (int k = 0; k < kMaxDim; ++k)
    if (m >> k & 1) out.push_back(k);
  return out;
}

const std::vector<Mask>& dual_terms() {
  static const std::vector<Mask> terms = build("Phi_dual").masks();
  return terms;
}

void require_dual_term(Mask term) {
  auto& d = dual_terms();
  if (std::find(d.begin(), d.end(), term) == d.end())
    throw NotDualTerm("not a term of Phi_dual: " + mask_digits(term));
}

InvariantCandidate from_pairing(Mask term, const Pairing& p, char kind, int idx) {
  auto mu = indices(term);
  InvariantCandidate c;
  for (auto& pr : p) c.terms.push_back({1, (Mask{1} << mu[pr[0]]) | (Mask{1} << mu[pr[1]])});
  c.kind = kind;
  c.pairing = idx;
  c.source = term;
  c.family = source_family(term);
  c.coeff = c.family == 'A' ? Rational(1) : Rational(1, 2);
  return c;
}

std::set<Mask> support_set(const InvariantCandidate& c) {
  std::set<Mask> s;
  for (auto& t : c.terms) s.insert(t.mask);
  return s;
}

const Multivector& phi() {
  static const Multivector p = build("Phi");
  return p;
}

const Multivector& theta() {
  static const Multivector t = build("Theta");
  return t;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::string> erratum(const std::string& table, const std::string& entry) {
  for (auto& e : fixtures::errata())
    if (e.table == table && e.entry == entry) return e.corrected;
  return std::nullopt;
}

template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) f(k);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(std::max(1, jobs), static_cast<int>(n)); ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

// ---- closure context: elements and spans for every family-variant ----

struct Closure {
  std::vector<std::string> keys;
  std::map<std::string, std::vector<Multivector>> elems;
  std::map<std::string, RationalSpan> spans;
};

const Closure& closure() {
  static const Closure c = [] {
    Closure out;
    for (auto& fam : family_keys())
      for (int v = 1; v <= 4; ++v) {
        std::string key = fam + std::to_string(v);
        out.keys.push_back(key);
        out.elems[key] = family_variant(fam, v);
        out.spans.emplace(key, RationalSpan(out.elems[key]));
      }
    return out;
  }();
  return c;
}

std::pair<std::string, int> split_key(const std::string& key) {
  if (key.size() < 2 || !isdigit(static_cast<unsigned char>(key.back())))
    throw std::invalid_argument("bad family-variant key: " + key);
  return {key.substr(0, key.size() - 1), key.back() - '0'};
}

int key_rank(const std::string& label) {
  auto& k = family_variant_keys();
  auto it = std::find(k.begin(), k.end(), label);
  return it == k.end() ? static_cast<int>(k.size()) : static_cast<int>(it - k.begin());
}

}  // namespace

// ---- candidates ----

std::string InvariantCandidate::family_key() const {
  if (family == 'A') return "A";
  return std::string(1, family) + kind;
}

Multivector InvariantCandidate::element() const {
  std::vector<Multivector::Term> t;
  for (auto& b : terms) t.emplace_back(b.mask, coeff * b.sign);
  return Multivector::from_terms(kDim, std::move(t));
}

std::string InvariantCandidate::to_string() const {
  std::ostringstream os;
  bool group = coeff != 1;
  if (group) os << "(" << rational_string(coeff) << ")[ ";
  for (std::size_t k = 0; k < terms.size(); ++k)
    os << (k ? " " : "") << (terms[k].sign > 0 ? '+' : '-') << mask_digits(terms[k].mask);
  if (group) os << " ]";
  return os.str();
}

Mask InvariantCandidate::support() const {
  Mask m = 0;
  for (auto& t : terms) m |= t.mask;
  return m;
}

const std::array<std::array<int, 4>, 4>& variant_patterns() {
  static const std::array<std::array<int, 4>, 4> v = {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  return v;
}

InvariantCandidate with_variant(const InvariantCandidate& base, int variant) {
  if (variant < 1 || variant > 4) throw std::invalid_argument("variant must be 1..4");
  if (base.terms.size() != 4) throw std::invalid_argument("variant patterns need four terms");
  InvariantCandidate c = base;
  for (int k = 0; k < 4; ++k) c.terms[k].sign *= variant_patterns()[variant - 1][k];
  c.variant = variant;
  return c;
}

char source_family(Mask eight) {
  int i = phi_index(full_mask(kDim) ^ eight);
  if (!i) throw NotDualTerm("complement of " + mask_digits(eight) + " is not a Phi term");
  return phi_family(i);
}

std::vector<InvariantCandidate> cyclic_invariants(Mask term) {
  require_dual_term(term);
  std::vector<InvariantCandidate> out;
  for (int j = 0; j < 3; ++j) out.push_back(from_pairing(term, kCyclic[j], 'C', j));
  return out;
}

std::vector<InvariantCandidate> mixed_invariants(Mask term) {
  require_dual_term(term);
  std::vector<InvariantCandidate> out;
  for (int j = 0; j < 4; ++j) out.push_back(from_pairing(term, kMixed[j], 'M', j));
  return out;
}

std::vector<InvariantCandidate> primary_invariants() {
  std::vector<InvariantCandidate> out;
  for (Mask t : dual_terms()) {
    for (auto& c : cyclic_invariants(t)) out.push_back(c);
    for (auto& c : mixed_invariants(t)) out.push_back(c);
  }
  return out;
}

std::vector<InvariantCandidate> signed_candidates() {
  std::vector<InvariantCandidate> out;
  for (auto& p : primary_invariants())
    for (int v = 1; v <= 4; ++v) out.push_back(with_variant(p, v));
  return out;
}

InvariantCandidate parse_candidate(std::string_view text) {
  std::string s = trim(text);
  InvariantCandidate c;
  c.coeff = 1;
  if (!s.empty() && s.front() == '(') {
    auto close = s.find(')');
    if (close == std::string::npos) throw ParseError("unclosed coefficient in " + s);
    std::string q = s.substr(1, close - 1);
    try {
      c.coeff = Rational(q);
      c.coeff.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient " + q);
    }
    std::string rest = trim(std::string_view(s).substr(close + 1));
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') throw ParseError("expected [ ... ] group");
    s = rest.substr(1, rest.size() - 2);
  }
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok[0] == '+' || tok[0] == '-') {
      sign = tok[0] == '-' ? -1 : 1;
      tok.erase(0, 1);
    }
    Mask m = parse_mask(tok);
    if (grade(m) != 2) throw ParseError("candidate term " + tok + " is not a 2-blade");
    c.terms.push_back({sign, m});
  }
  if (c.terms.empty()) throw ParseError("empty candidate");
  return c;
}

bool identify(InvariantCandidate& c) {
  static const std::vector<InvariantCandidate> prims = primary_invariants();
  auto s = support_set(c);
  for (auto& p : prims)
    if (support_set(p) == s) {
      c.family = p.family;
      c.kind = p.kind;
      c.pairing = p.pairing;
      c.source = p.source;
      return true;
    }
  return false;
}

Rotor quad_rotor(const InvariantCandidate& c) { return rotor_from_bivectors(kDim, c.terms); }

InvarianceResult is_invariant(const InvariantCandidate& c) {
  InvarianceResult r;
  Multivector y = conjugate(quad_rotor(c), phi());
  r.strict = y == phi();
  r.relaxed = y.size() == phi().size();
  for (auto& [m, coeff] : y.terms()) {
    Rational p = phi().coeff(m);
    if (p == 0 || (coeff != p && coeff != -p)) {
      r.relaxed = false;
      continue;
    }
    if (coeff == -p) r.negated.push_back(m);
  }
  return r;
}

bool map_filter(const InvariantCandidate& c) { return automorphism_filter(c.terms, map15()); }

bool QuadDecomposition::all() const {
  return alpha_idempotent && beta_square && alpha_beta && beta_alpha && alpha_delta && delta_alpha && beta_delta &&
         delta_beta && delta_square && alpha_form && polynomial;
}

QuadDecomposition alpha_beta_delta(const InvariantCandidate& c) {
  QuadDecomposition d;
  Rotor r = quad_rotor(c);
  const Multivector one = Multivector::scalar(kDim, 1), zero(kDim);
  d.r2 = r.product * Rational(1, 2);
  d.alpha = grade_part(d.r2, 0) + grade_part(d.r2, 8);
  d.beta = grade_part(d.r2, 2) + grade_part(d.r2, 6);
  d.delta = grade_part(d.r2, 4);
  Multivector e = one, sum(kDim);
  for (auto& t : c.terms) {
    Multivector b = Multivector::blade(kDim, t.mask, t.sign);
    e = e * b;
    sum += b;
  }
  d.q = sum * Rational(1, 2);
  const auto &a = d.alpha, &b = d.beta, &de = d.delta;
  d.alpha_form = a == (one + e) * Rational(1, 2);
  d.alpha_idempotent = a * a == a;
  d.beta_square = b * b == (a - one) * Rational(4);
  d.alpha_beta = (a * b) == zero;
  d.beta_alpha = (b * a) == zero;
  d.alpha_delta = a * de == de;
  d.delta_alpha = de * a == de;
  d.beta_delta = (b * de) == zero;
  d.delta_beta = (de * b) == zero;
  d.delta_square = de * de == a * Rational(3) - de * Rational(2);
  Multivector q2 = d.q * d.q, q3 = q2 * d.q, q4 = q3 * d.q;
  Multivector poly = (q4 + q3 * Rational(2) + q2 * Rational(7) + d.q * Rational(8) + one * Rational(6)) * Rational(1, 6);
  d.polynomial = poly == r.product * Rational(1, 4);
  return d;
}

StabilizerResult stabilizer_check(const InvariantCandidate& c) {
  if (c.terms.empty()) return {true, true};
  QuadDecomposition d = alpha_beta_delta(c);
  if (d.delta.is_zero()) return {true, true};
  const Multivector& t = theta();
  Multivector lhs = d.delta * t + t * d.delta + d.delta * t * d.delta;
  return {lhs == d.alpha * t * Rational(3), false};
}

// ---- printed families ----

const std::vector<std::string>& family_keys() {
  static const std::vector<std::string> k = {"A", "OC", "PC", "OM", "PM"};
  return k;
}

std::string family_fixture(const std::string& key) {
  if (key == "A") return "inv_a";
  if (key == "OC") return "inv_oc";
  if (key == "PC") return "inv_pc";
  if (key == "OM") return "inv_om";
  if (key == "PM") return "inv_pm";
  throw std::invalid_argument("unknown family key: " + key);
}

std::vector<FixtureEntry> fixture_family(const std::string& key) {
  std::string name = family_fixture(key);
  std::vector<FixtureEntry> out;
  int idx = 0;
  for (auto& r : fixtures::records(name)) {
    if (r.size() != 1) throw fixtures::FixtureError(name + ": expected one field per record");
    FixtureEntry e;
    e.index = ++idx;
    e.printed = parse_candidate(r[0]);
    e.identified = identify(e.printed);
    e.used = e.printed;
    if (auto fix = erratum(name, std::to_string(idx))) {
      e.used = parse_candidate(*fix);
      identify(e.used);
      e.corrected = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Multivector> family_variant(const std::string& key, int variant) {
  std::vector<Multivector> out;
  for (auto& e : fixture_family(key)) out.push_back(with_variant(e.used, variant).element());
  return out;
}

// ---- sign search ----

std::vector<SignSearchRow> sign_search(int jobs) {
  auto prims = primary_invariants();
  std::vector<SignSearchRow> rows(prims.size() * 8);
  parallel_for(rows.size(), jobs, [&](std::size_t k) {
    InvariantCandidate c = prims[k / 8];
    int s = static_cast<int>(k % 8);
    for (int t = 1; t < 4; ++t)
      if (s >> (t - 1) & 1) c.terms[t].sign = -1;
    c.variant = 0;
    SignSearchRow& row = rows[k];
    row.invariant = is_invariant(c).strict;
    row.filter = map_filter(c);
    row.stabilizer = stabilizer_check(c).holds;
    row.candidate = std::move(c);
  });
  return rows;
}

// ---- closure tables ----

std::string CellResult::text() const {
  if (nz) return "nz";
  if (labels.empty()) return "0";
  std::vector<std::string> v(labels.begin(), labels.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return key_rank(a) < key_rank(b); });
  std::string s;
  for (auto& l : v) s += (s.empty() ? "" : "+") + l;
  return s;
}

bool CellResult::matches(const std::string& expected) const {
  if (expected == "nz") return nz;
  if (nz) return false;
  std::set<std::string> want;
  std::string cur;
  for (char ch : expected + "+") {
    if (ch == '+') {
      if (!cur.empty()) want.insert(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  return want == labels;
}

const std::vector<std::string>& family_variant_keys() {
  static const std::vector<std::string> k = [] {
    std::vector<std::string> v;
    for (auto& f : family_keys())
      for (int i = 1; i <= 4; ++i) v.push_back(f + std::to_string(i));
    return v;
  }();
  return k;
}

CellResult commutator_cell(const std::string& left, const std::string& right) {
  const Closure& cl = closure();
  auto li = cl.elems.find(left), ri = cl.elems.find(right);
  if (li == cl.elems.end() || ri == cl.elems.end())
    throw std::invalid_argument("unknown family-variant " + (li == cl.elems.end() ? left : right));
  CellResult cell;
  for (auto& x : li->second)
    for (auto& y : ri->second) {
      ++cell.products;
      Multivector c = mv_commutator(x, y);
      if (c.is_zero()) {
        ++cell.zero;
        continue;
      }
      bool placed = false;
      for (auto& k : cl.keys)
        if (cl.spans.at(k).contains(c)) {
          cell.labels.insert(k);
          placed = true;
          break;
        }
      if (placed) continue;
      if (c.size() == 2) {
        cell.nz = true;
      } else {
        ++cell.unattributed;
        cell.labels.insert("?");
      }
    }
  return cell;
}

std::array<std::array<CellResult, 4>, 4> family_commutator_table(const std::string& left, const std::string& right,
                                                                int jobs) {
  std::array<std::array<CellResult, 4>, 4> t;
  parallel_for(16, jobs, [&](std::size_t k) {
    int a = static_cast<int>(k / 4), b = static_cast<int>(k % 4);
    t[a][b] = commutator_cell(left + std::to_string(a + 1), right + std::to_string(b + 1));
  });
  return t;
}

bool family_products_in(const std::string& left, const std::string& right, const std::vector<std::string>& targets) {
  const Closure& cl = closure();
  RationalSpan span;
  for (auto& f : targets)
    for (int v = 1; v <= 4; ++v)
      for (auto& x : cl.elems.at(f + std::to_string(v))) span.add(x);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (auto& x : cl.elems.at(left + std::to_string(a)))
        for (auto& y : cl.elems.at(right + std::to_string(b))) {
          Multivector c = mv_commutator(x, y);
          if (!c.is_zero() && !span.contains(c)) return false;
        }
  return true;
}

std::vector<CrossCase> cross_product_cases() {
  std::vector<CrossCase> out;
  for (auto& r : fixtures::records("cross_products")) {
    if (r.size() != 3) throw fixtures::FixtureError("cross_products: expected 3 fields");
    CrossCase cc{r[0], r[1], r[2], {}, false, std::nullopt};
    if (cc.left.back() == '*') {
      std::vector<std::string> targets;
      std::string cur;
      for (char ch : cc.expected + "+") {
        if (ch == '+') {
          if (!cur.empty() && cur.back() == '*') cur.pop_back();
          if (!cur.empty()) targets.push_back(cur);
          cur.clear();
        } else if (ch != ' ') {
          cur += ch;
        }
      }
      std::string l = cc.left.substr(0, cc.left.size() - 1), rr = cc.right;
      if (!rr.empty() && rr.back() == '*') rr.pop_back();
      cc.pass = family_products_in(l, rr, targets);
    } else {
      cc.computed = commutator_cell(cc.left, cc.right);
      cc.pass = cc.computed.matches(cc.expected);
      if (!cc.pass) {
        auto [lf, lv] = split_key(cc.left);
        auto [rf, rv] = split_key(cc.right);
        std::string l2 = lf + std::to_string(rv), r2 = rf + std::to_string(lv);
        if (commutator_cell(l2, r2).matches(cc.expected)) cc.swapped_match = l2 + " x " + r2;
      }
    }
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<FlaggedCell> extra_cross_products(int jobs) {
  std::set<std::pair<std::string, std::string>> listed;
  for (auto& r : fixtures::records("cross_products"))
    if (r.size() == 3) listed.insert({r[0], r[1]});
  // A with the mixed families is checked at family level; OM x PM is a printed table
  const std::vector<std::pair<std::string, std::string>> pairs = {{"A", "OC"},  {"A", "PC"},  {"OC", "PC"}, {"OC", "OM"},
                                                                  {"OC", "PM"}, {"PC", "OM"}, {"PC", "PM"}};
  std::vector<std::pair<std::string, std::string>> cells;
  for (auto& [l, r] : pairs)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        std::string lk = l + std::to_string(a), rk = r + std::to_string(b);
        if (!listed.count({lk, rk})) cells.emplace_back(lk, rk);
      }
  std::vector<CellResult> res(cells.size());
  parallel_for(cells.size(), jobs, [&](std::size_t k) { res[k] = commutator_cell(cells[k].first, cells[k].second); });
  std::vector<FlaggedCell> out;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (!res[k].nz && !res[k].labels.empty()) out.push_back({cells[k].first, cells[k].second, res[k]});
  return out;
}

// ---- 14-element subalgebra ----

std::vector<std::pair<std::string, Multivector>> g2_table(const std::string& name, bool corrected) {
  std::vector<std::pair<std::string, Multivector>> out;
  for (auto& r : fixtures::records(name)) {
    if (r.size() != 1) throw fixtures::FixtureError(name + ": expected one field per record");
    std::istringstream in(r[0]);
    std::string letter;
    in >> letter;
    std::string body;
    std::getline(in, body);
    if (corrected)
      if (auto fix = erratum(name, letter)) body = *fix;
    out.emplace_back(letter, parse_form(body, kDim));
  }
  return out;
}

G2Report g2_checks() {
  G2Report rep;
  std::vector<Multivector> printed, used;
  for (auto& e : fixture_family("OC")) {
    printed.push_back(e.printed.element());
    used.push_back(e.used.element());
  }
  rep.oc_rank_printed = RationalSpan(printed).rank();
  RationalSpan oc(used);
  rep.oc_rank = oc.rank();
  rep.oc_closed = true;
  for (auto& x : used)
    for (auto& y : used)
      if (!oc.contains(mv_commutator(x, y))) rep.oc_closed = false;

  auto closed_under = [](const std::vector<Multivector>& xs, const RationalSpan& s) {
    for (auto& x : xs)
      for (auto& y : xs)
        if (!s.contains(mv_commutator(x, y))) return false;
    return true;
  };
  std::vector<Multivector> gt, gtc;
  for (auto& [l, x] : g2_table("g2_cl15", false)) gt.push_back(x);
  for (auto& [l, x] : g2_table("g2_cl15", true)) gtc.push_back(x);
  RationalSpan gspan(gt);
  rep.cl15_rank = gspan.rank();
  for (auto& x : gt)
    if (!oc.contains(x)) ++rep.cl15_outside_oc;
  RationalSpan both(used);
  for (auto& x : gt) both.add(x);
  rep.combined_rank = both.rank();
  RationalSpan both_c(used);
  for (auto& x : gtc) both_c.add(x);
  rep.combined_rank_corrected = both_c.rank();
  rep.cl15_commutators_in_oc = closed_under(gt, oc);
  rep.cl15_self_closed = closed_under(gt, gspan);
  rep.cl15_corrected_self_closed = closed_under(gtc, RationalSpan(gtc));

  // indices 1..7 of cl15 renumbered onto the generators cl7 uses
  const std::array<int, 7> relabel = {3, 5, 6, 8, 11, 13, 14};
  auto cl7 = g2_table("g2_cl7", true);
  auto cl15 = g2_table("g2_cl15", true);
  rep.cl7_support_match = cl7.size() == cl15.size();
  for (auto& [letter, x] : cl15) {
    std::set<Mask> restricted;
    for (Mask m : x.masks()) {
      if (m & ~full_mask(7)) continue;
      Mask r = 0;
      for (int k = 0; k < 7; ++k)
        if (m >> k & 1) r |= Mask{1} << (relabel[k] - 1);
      restricted.insert(r);
    }
    auto it = std::find_if(cl7.begin(), cl7.end(), [&](auto& p) { return p.first == letter; });
    std::set<Mask> want;
    if (it != cl7.end())
      for (Mask m : it->second.masks()) want.insert(m);
    if (it == cl7.end() || want != restricted) {
      rep.cl7_support_match = false;
      rep.cl7_mismatches.push_back(letter);
    }
  }
  return rep;
}

// ---- action on Phi ----

std::vector<AutProfileRow> aut_swap_profiles() {
  std::vector<AutProfileRow> rows;
  for (auto [fam, kind] : std::vector<std::pair<char, const char*>>{{'A', "cyclic"},
                                                                     {'A', "mixed"},
                                                                     {'O', "cyclic"},
                                                                     {'O', "mixed-o4"},
                                                                     {'O', "mixed-other"},
                                                                     {'P', "cyclic"},
                                                                     {'P', "mixed"}}) {
    AutProfileRow row;
    row.family = fam;
    row.kind = kind;
    rows.push_back(row);
  }
  auto loops = loop_form_rows();
  for (auto& p : primary_invariants()) {
    std::string kind = p.kind == 'C' ? "cyclic" : "mixed";
    if (p.family == 'O' && p.kind == 'M') {
      bool o4 = std::all_of(p.terms.begin(), p.terms.end(), [](const SignedBlade& b) {
        auto ix = indices(b.mask);
        return ((ix[0] + 1) ^ (ix[1] + 1)) == 8;
      });
      kind = o4 ? "mixed-o4" : "mixed-other";
    }
    Rotor r = quad_rotor(p);
    std::vector<std::pair<Mask, Mask>> images;
    for (auto& l : loops) {
      Multivector y = conjugate(r, Multivector::blade(kDim, l.phi));
      images.emplace_back(l.phi, y.size() == 1 ? y.terms().front().first : Mask{0});
    }
    SwapProfile prof = count_swaps(images);
    for (auto& row : rows)
      if (row.family == p.family && row.kind == kind) {
        ++row.members;
        if (std::find(row.profiles.begin(), row.profiles.end(), prof) == row.profiles.end())
          row.profiles.push_back(prof);
      }
  }
  return rows;
}

// ---- seven-dimensional pairs ----

std::vector<PairInvariant> theta64_pair_invariants() {
  Multivector th = build("theta64");
  GenMap m7 = map7();
  std::vector<PairInvariant> out;
  for (Mask t : dual(th).masks()) {
    auto mu = indices(t);
    for (int j = 0; j < 3; ++j) {
      auto& p = kCyclic[j];
      Mask a = (Mask{1} << mu[p[0][0]]) | (Mask{1} << mu[p[0][1]]);
      Mask b = (Mask{1} << mu[p[1][0]]) | (Mask{1} << mu[p[1][1]]);
      for (int s : {1, -1}) {
        std::vector<SignedBlade> f = {{1, a}, {s, b}};
        if (conjugate(rotor_from_bivectors(7, f), th) != th) continue;
        out.push_back({f[0], f[1], true, automorphism_filter(f, m7)});
      }
    }
  }
  return out;
}

std::vector<VariantRow> variant_scheme() {
  std::vector<VariantRow> out;
  for (auto& fam : family_keys()) {
    auto entries = fixture_family(fam);
    for (int v = 1; v <= 4; ++v) {
      VariantRow row{fam, v};
      for (auto& e : entries) {
        InvariantCandidate c = with_variant(e.used, v);
        ++row.total;
        row.invariant += is_invariant(c).strict;
        row.filter += map_filter(c);
      }
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace sedalg
