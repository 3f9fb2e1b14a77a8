#include "sedalg/calibrations.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "sedalg/fixtures.hpp"
#include "sedalg/transfer.hpp"

namespace sedalg {

namespace {

constexpr int kDim = 15;

Multivector fixture_form(std::string_view name, int dim) {
  for (auto& r : fixtures::records("forms"))
    if (r.size() == 2 && r[0] == name) return parse_form(r[1], dim);
  throw fixtures::FixtureError("forms: no entry " + std::string(name));
}

int parse_index(std::string_view s) {
  if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw UnknownName("bad index");
  int i = std::stoi(std::string(s));
  if (i < 1 || i > 15) throw UnknownName("index out of range 1..15");
  return i;
}

Multivector theta3() { return fixture_form("Theta3", kDim); }

Multivector phi_all() {
  return fixture_form("Phi_A", kDim) + fixture_form("Phi_O", kDim) + fixture_form("Phi_P", kDim);
}

Mask phi_term(int i) {
  auto rows = loop_form_rows();
  return rows.at(i - 1).phi;
}

// Renumber the generators of x so that the seven in `support` become 1..7.
Multivector compress(const Multivector& x, Mask support) {
  std::vector<Multivector::Term> out;
  for (auto& [m, c] : x.terms()) {
    Mask r = 0;
    int pos = 0;
    for (int k = 0; k < kMaxDim; ++k) {
      if (!(support >> k & 1)) continue;
      if (m >> k & 1) r |= Mask{1} << pos;
      ++pos;
    }
    out.emplace_back(r, c);
  }
  return Multivector::from_terms(7, std::move(out));
}

IdentityReport report(std::string id, const Multivector& lhs, const Multivector& rhs, std::string note = {}) {
  return {std::move(id), lhs == rhs, lhs, rhs, std::move(note)};
}

IdentityReport cube_report(int i) {
  CubeLaw c = cube_law(i);
  Multivector t = theta_i(i);
  Multivector lhs = power(t, 3);
  Multivector rhs;
  std::string note;
  if (i <= 8) {
    rhs = t * Rational(-43) + phi_i(i) * Rational(-42);
  } else {
    Multivector th = c.theta ? *c.theta : Multivector(kDim);
    rhs = t * Rational(-19) + phi_i(i) * Rational(6) + th * Rational(24);
    note = "admissible terms: " + std::to_string(c.admissible);
    if (c.theta) note += ", theta = " + format_form(*c.theta);
  }
  IdentityReport r{"theta_cube_" + std::to_string(i), c.pass, lhs, rhs, note};
  return r;
}

Multivector quintet_rhs(const Multivector& dual_phi) {
  return (Multivector::scalar(kDim, 1) + dual_phi) * Rational(1, 16);
}

}  // namespace

std::vector<std::string> form_names() {
  std::vector<std::string> out = {"theta1", "theta64", "theta64_prime", "theta64_dual", "Theta"};
  for (int i = 1; i <= 15; ++i) out.push_back("Theta_" + std::to_string(i));
  for (auto s : {"Phi_A", "Phi_O", "Phi_P", "Phi"}) out.emplace_back(s);
  for (int i = 1; i <= 15; ++i) out.push_back("Phi_" + std::to_string(i));
  for (auto s : {"Phi_dual", "psi", "rho"}) out.emplace_back(s);
  return out;
}

Multivector build(std::string_view name) {
  if (name == "theta1" || name == "theta64" || name == "theta64_dual") return fixture_form(name, 7);
  if (name == "theta64_prime") return fixture_form(name, kDim);
  if (name == "Theta") return theta3() * Rational(1, 3);
  if (name == "Phi_A" || name == "Phi_O" || name == "Phi_P") return fixture_form(name, kDim);
  if (name == "Phi") return phi_all();
  if (name == "Phi_dual") return dual(phi_all());
  if (name == "psi")
    return (Multivector::pseudoscalar(kDim) * Rational(7) - phi_all()) * Rational(1, 8);
  if (name == "rho")
    return (Multivector::pseudoscalar(7) * Rational(3) + fixture_form("theta64", 7)) * Rational(1, 4);
  if (name.starts_with("Theta_")) return theta_i(parse_index(name.substr(6)));
  if (name.starts_with("Phi_")) return phi_i(parse_index(name.substr(4)));
  throw UnknownName("unknown form name: " + std::string(name));
}

std::vector<LoopFormRow> loop_form_rows() {
  std::vector<LoopFormRow> out;
  for (auto& r : fixtures::records("loop_forms")) {
    if (r.size() != 3) throw fixtures::FixtureError("loop_forms: expected 3 fields");
    std::istringstream head(r[0]);
    LoopFormRow row;
    std::string digits;
    if (!(head >> row.i >> digits >> row.cls)) throw fixtures::FixtureError("loop_forms: bad row head");
    row.phi = parse_mask(digits);
    row.geometry = r[1];
    row.printed = parse_form(r[2], kDim);
    out.push_back(std::move(row));
  }
  if (out.size() != 15) throw fixtures::FixtureError("loop_forms: expected 15 rows");
  return out;
}

Multivector theta_i(int i) {
  if (i < 1 || i > 15) throw UnknownName("Theta index out of range");
  Mask support = phi_term(i);
  std::vector<Multivector::Term> out;
  const Multivector t3 = theta3();
  for (auto& [m, c] : t3.terms())
    if ((m & ~support) == 0) out.emplace_back(m, c);
  return Multivector::from_terms(kDim, std::move(out));
}

Multivector phi_i(int i) {
  if (i < 1 || i > 15) throw UnknownName("Phi index out of range");
  return Multivector::blade(kDim, phi_term(i));
}

char phi_family(int i) { return i == 1 ? 'A' : (i <= 8 ? 'O' : 'P'); }

int phi_index(Mask seven) {
  auto rows = loop_form_rows();
  for (auto& r : rows)
    if (r.phi == seven) return r.i;
  return 0;
}

std::vector<AlgebraRow> algebra_identification_rows() {
  std::vector<AlgebraRow> out;
  for (auto& r : fixtures::records("algebra_identification")) {
    if (r.size() != 2) throw fixtures::FixtureError("algebra_identification: expected 2 fields");
    std::istringstream head(r[0]);
    AlgebraRow row;
    if (!(head >> row.tag >> row.counts.a >> row.counts.b >> row.counts.c >> row.counts.x))
      throw fixtures::FixtureError("algebra_identification: bad row head");
    row.form = parse_form(r[1], 7);
    out.push_back(std::move(row));
  }
  return out;
}

CubeLaw cube_law(int i) {
  CubeLaw out;
  out.i = i;
  Multivector t = theta_i(i);
  Multivector cube = power(t, 3);
  if (i <= 8) {
    out.pass = cube == t * Rational(-43) + phi_i(i) * Rational(-42);
    return out;
  }
  Multivector base = t * Rational(-19) + phi_i(i) * Rational(6);
  for (auto& [m, c] : t.terms()) {
    Multivector th = Multivector::blade(kDim, m, c);
    if (cube == base + th * Rational(24)) {
      ++out.admissible;
      if (!out.theta) out.theta = th;
    }
  }
  out.pass = out.admissible == 1;
  return out;
}

bool quintet_passes(const std::vector<Mask>& five) {
  static const Multivector rhs = quintet_rhs(build("Phi_dual"));
  Multivector p = Multivector::scalar(kDim, 1);
  for (Mask t : five) p = p * Multivector(kDim, {{0, Rational(1, 2)}, {t, rhs.coeff(t) * 8}});
  return p == rhs;
}

QuintetCounts idempotent_quintets(int jobs) {
  std::vector<Mask> terms = build("Phi_dual").masks();
  std::vector<std::vector<Mask>> subsets;
  const int n = static_cast<int>(terms.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) subsets.push_back({terms[a], terms[b], terms[c], terms[d], terms[e]});
  quintet_passes(subsets.front());  // build the shared right-hand side before fanning out
  std::atomic<long> pass{0};
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < subsets.size();)
      if (quintet_passes(subsets[k])) ++pass;
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  QuintetCounts out;
  out.total = static_cast<long>(subsets.size());
  out.passing = pass;
  out.failing = out.total - out.passing;
  return out;
}

SharpReport sharp_algebra(int n) {
  if (n != 7 && n != 15) throw std::invalid_argument("sharp algebra needs N = 7 or 15");
  Multivector form = n == 7 ? build("theta64") : phi_all();
  Multivector duals = dual(form);
  std::vector<Mask> basis = {0};
  for (Mask m : duals.masks()) basis.push_back(m);
  SharpReport rep;
  rep.n = n;
  rep.basis_size = static_cast<int>(basis.size());
  auto in = [](const std::vector<Mask>& v, Mask m) { return std::find(v.begin(), v.end(), m) != v.end(); };
  rep.closed = rep.commutative = rep.squares_plus_one = rep.third_term = true;
  for (Mask a : basis)
    for (Mask b : basis) {
      SignedBlade ab = blade_mul(a, b), ba = blade_mul(b, a);
      if (!in(basis, ab.mask)) rep.closed = false;
      if (ab != ba) rep.commutative = false;
      if (a == b && a != 0 && ab.sign != 1) rep.squares_plus_one = false;
      if (a != b && a != 0 && b != 0 && (ab.mask == 0 || ab.mask == a || ab.mask == b || !in(basis, ab.mask)))
        rep.third_term = false;
    }
  std::vector<Mask> ext = basis;
  for (Mask m : form.masks()) ext.push_back(m);
  ext.push_back(full_mask(n));
  rep.extended_size = static_cast<int>(ext.size());
  rep.extended_closed = true;
  for (Mask a : ext)
    for (Mask b : ext)
      if (!in(ext, blade_mul(a, b).mask)) rep.extended_closed = false;
  return rep;
}

std::string to_string(const SwapProfile& p) {
  std::ostringstream os;
  os << "(" << p.a_partner << "; " << p.a_swaps << ", " << p.within_o << ", " << p.within_p << ", " << p.cross << ")";
  return os.str();
}

SwapProfile count_swaps(const std::vector<std::pair<Mask, Mask>>& images) {
  auto rows = loop_form_rows();
  auto fam = [&](Mask m) -> char {
    for (auto& r : rows)
      if (r.phi == m) return phi_family(r.i);
    return 0;
  };
  SwapProfile p;
  std::vector<std::pair<Mask, Mask>> seen;
  for (auto [from, to] : images) {
    if (from == to) continue;
    char ff = fam(from), ft = fam(to);
    if (!ff || !ft) continue;  // lands outside Phi
    ++p.moved_terms;
    auto key = std::minmax(from, to);
    if (std::find(seen.begin(), seen.end(), std::pair<Mask, Mask>(key)) != seen.end()) continue;
    seen.emplace_back(key);
    if (ff == 'A' || ft == 'A') {
      ++p.a_swaps;
      p.a_partner = std::string(1, ff == 'A' ? ft : ff);
    } else if (ff == 'O' && ft == 'O') {
      ++p.within_o;
    } else if (ff == 'P' && ft == 'P') {
      ++p.within_p;
    } else {
      ++p.cross;
    }
  }
  return p;
}

SwapProfile pair_swap_profile(int i) {
  Multivector star = dual(phi_i(i));
  Mask mult = star.terms().front().first;
  std::vector<std::pair<Mask, Mask>> images;
  for (auto& r : loop_form_rows()) images.emplace_back(r.phi, blade_mul(mult, r.phi).mask);
  return count_swaps(images);
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> out = {"pseudo_theta64_sq", "rho_sq", "psi_sq", "pseudo_phi_o_sq", "phi_o_to_phi_p",
                                  "phi_dual_terms", "theta64_dual_terms", "sum_theta"};
  for (int i = 1; i <= 15; ++i) out.push_back("theta_cube_" + std::to_string(i));
  for (auto s : {"phi_dual_idempotent", "quintet_display", "theta_quaternion_signs", "phi_from_loops",
                 "theta_i_support", "theta_i_classes", "theta_i_pseudo_sq", "phi_o_index_8"})
    out.emplace_back(s);
  return out;
}

IdentityReport verify_identity(std::string_view id) {
  const Multivector I7 = Multivector::pseudoscalar(7), I15 = Multivector::pseudoscalar(kDim);
  if (id == "pseudo_theta64_sq") {
    Multivector x = I7 * Rational(3) + build("theta64");
    return report(std::string(id), x * x, Multivector::scalar(7, -16));
  }
  if (id == "rho_sq") {
    Multivector r = build("rho");
    return report(std::string(id), r * r, Multivector::scalar(7, -1));
  }
  if (id == "psi_sq") {
    Multivector p = build("psi");
    return report(std::string(id), p * p, Multivector::scalar(kDim, -1));
  }
  if (id == "pseudo_phi_o_sq") {
    Multivector x = I15 * Rational(3) - build("Phi_O");
    return report(std::string(id), x * x, Multivector::scalar(kDim, -16));
  }
  if (id == "phi_o_to_phi_p") {
    Multivector e = Multivector::blade(kDim, parse_mask("89ABCDEF"));
    return report(std::string(id), e * build("Phi_O"), build("Phi_P"));
  }
  if (id == "phi_dual_terms") return report(std::string(id), build("Phi_dual"), fixture_form("Phi_dual", kDim));
  if (id == "theta64_dual_terms")
    return report(std::string(id), dual(build("theta64")), fixture_form("theta64_dual", 7));
  if (id == "sum_theta") {
    Multivector s(kDim);
    for (int i = 1; i <= 15; ++i) s += theta_i(i);
    return report(std::string(id), s, build("Theta") * Rational(9));
  }
  if (id.starts_with("theta_cube_")) return cube_report(parse_index(id.substr(11)));
  if (id == "phi_dual_idempotent") {
    Multivector x = quintet_rhs(build("Phi_dual"));
    return report(std::string(id), x * x, x);
  }
  if (id == "quintet_display") {
    Multivector p = Multivector::scalar(kDim, 1);
    const Multivector five = fixture_form("quintet", kDim);
    for (auto& [m, c] : five.terms())
      p = p * Multivector(kDim, {{0, Rational(1, 2)}, {m, c / 2}});
    return report(std::string(id), p, quintet_rhs(build("Phi_dual")));
  }
  if (id == "theta_quaternion_signs") {
    // every term of 3Theta maps to minus its own sign under map15
    GenMap m = map15();
    std::vector<Multivector::Term> lhs;
    const Multivector t3 = theta3();
    for (auto& [mask, c] : t3.terms()) {
      SignedBlade b = map_blade(mask, m);
      lhs.emplace_back(mask, b.mask == 0 ? Rational(-b.sign) : Rational(0));
    }
    return report(std::string(id), Multivector::from_terms(kDim, std::move(lhs)), theta3(),
                  "lhs holds -map15(term) for each term");
  }
  if (id == "phi_from_loops") {
    std::vector<Multivector::Term> terms;
    for (auto& loop : enumerate_loops(4)) terms.emplace_back(loop_to_form(loop), 1);
    Multivector from_loops = Multivector::from_terms(kDim, std::move(terms));
    Multivector phi = build("Phi");
    Multivector support(kDim);
    for (Mask m : phi.masks()) support += Multivector::blade(kDim, m);
    return report(std::string(id), from_loops, support, "support of Phi against the 15 loops of A(4)");
  }
  if (id == "theta_i_support") {
    Multivector lhs(kDim), rhs(kDim);
    for (auto& r : loop_form_rows()) {
      for (Mask m : theta_i(r.i).masks()) lhs += Multivector::blade(kDim, m);
      for (Mask m : r.printed.masks()) rhs += Multivector::blade(kDim, m);
    }
    return report(std::string(id), lhs, rhs, "supports only, summed over i");
  }
  if (id == "theta_i_classes") {
    std::vector<Multivector::Term> lhs, rhs;
    bool pass = true;
    std::string note;
    for (auto& r : loop_form_rows()) {
      AlgebraClass c = octonion_like_classify(compress(theta_i(r.i), r.phi));
      if (c.tag != r.cls) pass = false;
      note += (note.empty() ? "" : " ") + std::to_string(r.i) + ":" + c.tag;
    }
    return {std::string(id), pass, Multivector(kDim), Multivector(kDim), note};
  }
  if (id == "theta_i_pseudo_sq") {
    bool pass = true;
    Multivector lhs(kDim);
    for (int i = 1; i <= 8; ++i) {
      Multivector x = theta_i(i) - phi_i(i) * Rational(3);
      Multivector sq = x * x;
      if (sq != Multivector::scalar(kDim, -16)) pass = false;
      lhs = sq;
    }
    return {std::string(id), pass, lhs, Multivector::scalar(kDim, -16), "(Theta_i - 3 Phi_i)^2 for i = 1..8"};
  }
  if (id == "phi_o_index_8") {
    bool pass = true;
    Mask e8 = Mask{1} << 7;
    for (Mask m : build("Phi_O").masks()) pass = pass && (m & e8);
    for (Mask m : build("Phi_A").masks()) pass = pass && !(m & e8);
    for (Mask m : build("Phi_P").masks()) pass = pass && !(m & e8);
    return {std::string(id), pass, Multivector(kDim), Multivector(kDim), "Phi_O terms contain e8, others do not"};
  }
  throw UnknownName("unknown identity: " + std::string(id));
}

}  // namespace sedalg
