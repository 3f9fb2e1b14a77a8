#include "sedalg/fano.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include <json.hpp>

#include "sedalg/calibrations.hpp"
#include "sedalg/cayley_dickson.hpp"

namespace sedalg {

namespace {

using Json = nlohmann::ordered_json;

struct Pt {
  double x, y;
};

// Equilateral triangle with side 320, its edge midpoints and its centroid.
const std::array<Pt, 7> kSlot = {{{200, 40},
                                  {40, 317.128},
                                  {360, 317.128},
                                  {120, 178.564},
                                  {200, 317.128},
                                  {280, 178.564},
                                  {200, 224.752}}};
const Pt kCentre = kSlot[6];
const double kInradius = 92.376;

struct Geo {
  std::array<int, 3> order;  // slots along the line, middle one in the middle
  const char* role;
};
const std::array<Geo, 7> kLines = {{{{0, 3, 1}, "side"},
                                    {{1, 4, 2}, "side"},
                                    {{2, 5, 0}, "side"},
                                    {{0, 6, 4}, "median"},
                                    {{1, 6, 5}, "median"},
                                    {{2, 6, 3}, "median"},
                                    {{4, 3, 5}, "circle"}}};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", std::abs(v) < 0.05 ? 0.0 : v);
  return buf;
}

std::string gen(int k) { return "e" + mask_digits(Mask{1} << (k - 1)); }

std::array<int, 3> members_of(Mask m) {
  std::array<int, 3> out{};
  int n = 0;
  for (int k = 0; k < kMaxDim && n < 3; ++k)
    if (m >> k & 1) out[n++] = k + 1;
  return out;
}

const Geo& geo_for(const FanoPlane& p, const FanoLine& l) {
  std::set<int> s;
  for (int g : l.members) s.insert(p.slot_of[g]);
  for (auto& g : kLines)
    if (std::set<int>(g.order.begin(), g.order.end()) == s) return g;
  throw IncidenceError("line not in layout");
}

bool is_rotation(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  for (int r = 0; r < 3; ++r)
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return true;
  return false;
}

std::string arrow(Pt at, double dx, double dy, const char* colour) {
  double n = std::hypot(dx, dy);
  dx /= n;
  dy /= n;
  Pt tip{at.x + 7 * dx, at.y + 7 * dy};
  Pt b1{at.x - 5 * dx - 5 * dy, at.y - 5 * dy + 5 * dx};
  Pt b2{at.x - 5 * dx + 5 * dy, at.y - 5 * dy - 5 * dx};
  return "  <polygon points=\"" + num(tip.x) + "," + num(tip.y) + " " + num(b1.x) + "," + num(b1.y) + " " +
         num(b2.x) + "," + num(b2.y) + "\" fill=\"" + colour + "\"/>\n";
}

double angle_of(Pt p) { return std::atan2(p.y - kCentre.y, p.x - kCentre.x); }

}  // namespace

FanoPlane fano_plane(const Multivector& form) {
  check_fano_incidence(form);
  FanoPlane p;
  for (auto& [m, c] : form.terms()) {
    FanoLine l;
    l.members = members_of(m);
    l.orientation = c > 0 ? 1 : -1;
    l.cycle = l.orientation > 0 ? l.members : std::array<int, 3>{l.members[2], l.members[1], l.members[0]};
    p.lines.push_back(l);
  }
  std::array<int, 7> perm;
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (auto& l : p.lines) {
      std::set<int> s = {perm[l.members[0] - 1], perm[l.members[1] - 1], perm[l.members[2] - 1]};
      ok = std::any_of(kLines.begin(), kLines.end(),
                       [&](const Geo& g) { return std::set<int>(g.order.begin(), g.order.end()) == s; });
      if (!ok) break;
    }
    if (ok) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) throw IncidenceError("no layout for this incidence");
  for (int g = 1; g <= 7; ++g) p.slot_of[g] = perm[g - 1];
  p.cls = octonion_like_classify(form).tag;
  return p;
}

std::string fano_plane_svg(const FanoPlane& p) {
  std::string s =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"380\" viewBox=\"0 0 400 "
      "380\">\n"
      "  <title>Fano plane, class " +
      p.cls + "</title>\n  <rect width=\"400\" height=\"380\" fill=\"white\"/>\n";
  std::string arrows;
  for (auto& l : p.lines) {
    const Geo& g = geo_for(p, l);
    const char* colour = l.orientation > 0 ? "#1f3a5f" : "#b03a2e";
    std::array<int, 3> cyc_slots = {p.slot_of[l.cycle[0]], p.slot_of[l.cycle[1]], p.slot_of[l.cycle[2]]};
    // arrows run along the drawn order or against it
    bool forward = is_rotation(cyc_slots, g.order);
    std::array<int, 3> o = g.order;
    if (std::string(g.role) == "circle") {
      s += "  <circle cx=\"" + num(kCentre.x) + "\" cy=\"" + num(kCentre.y) + "\" r=\"" + num(kInradius) +
           "\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
      for (int k = 0; k < 3; ++k) {
        int a = forward ? o[k] : o[(k + 1) % 3], b = forward ? o[(k + 1) % 3] : o[k];
        double ta = angle_of(kSlot[a]), tb = angle_of(kSlot[b]);
        double d = std::remainder(tb - ta, 2 * std::numbers::pi);
        double tm = ta + d / 2;
        Pt at{kCentre.x + kInradius * std::cos(tm), kCentre.y + kInradius * std::sin(tm)};
        double sgn = d > 0 ? 1 : -1;
        arrows += arrow(at, -std::sin(tm) * sgn, std::cos(tm) * sgn, colour);
      }
    } else {
      s += "  <line x1=\"" + num(kSlot[o[0]].x) + "\" y1=\"" + num(kSlot[o[0]].y) + "\" x2=\"" + num(kSlot[o[2]].x) +
           "\" y2=\"" + num(kSlot[o[2]].y) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
      if (!forward) std::swap(o[0], o[2]);
      for (int k = 0; k < 2; ++k) {
        Pt a = kSlot[o[k]], b = kSlot[o[k + 1]];
        arrows += arrow({(a.x + b.x) / 2, (a.y + b.y) / 2}, b.x - a.x, b.y - a.y, colour);
      }
    }
  }
  s += arrows;
  for (int g = 1; g <= 7; ++g) {
    Pt at = kSlot[p.slot_of[g]];
    s += "  <circle cx=\"" + num(at.x) + "\" cy=\"" + num(at.y) +
         "\" r=\"14\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    s += "  <text x=\"" + num(at.x) + "\" y=\"" + num(at.y + 5) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" + gen(g) + "</text>\n";
  }
  s += "  <text x=\"10\" y=\"370\" font-family=\"sans-serif\" font-size=\"11\">arrows i&#8594;j&#8594;k for "
       "+e_ijk (i&lt;j&lt;k), reversed for -e_ijk</text>\n";
  s += "</svg>\n";
  return s;
}

std::string fano_plane_dot(const FanoPlane& p) {
  std::string s = "digraph fano {\n  label=\"class " + p.cls + "\";\n";
  for (int g = 1; g <= 7; ++g) s += "  " + gen(g) + ";\n";
  for (auto& l : p.lines) {
    std::string lab = std::string(l.orientation > 0 ? "+" : "-") + mask_digits((Mask{1} << (l.members[0] - 1)) |
                                                                               (Mask{1} << (l.members[1] - 1)) |
                                                                               (Mask{1} << (l.members[2] - 1)));
    for (int k = 0; k < 3; ++k)
      s += "  " + gen(l.cycle[k]) + " -> " + gen(l.cycle[(k + 1) % 3]) + " [label=\"" + lab + "\"];\n";
  }
  s += "}\n";
  return s;
}

std::string fano_plane_json(const FanoPlane& p) {
  Json j;
  j["class"] = p.cls;
  j["vertices"] = Json::array();
  for (int g = 1; g <= 7; ++g) j["vertices"].push_back(gen(g));
  j["planes"] = Json::array();
  for (auto& l : p.lines) {
    Json e;
    e["members"] = Json::array();
    for (int g : l.members) e["members"].push_back(gen(g));
    e["class"] = geo_for(p, l).role;
    e["orientation"] = l.orientation;
    e["cycle"] = Json::array();
    for (int g : l.cycle) e["cycle"].push_back(gen(g));
    j["planes"].push_back(e);
  }
  return j.dump(2) + "\n";
}

// ---- volume ----

FanoVolume fano_volume() {
  FanoVolume v;
  for (int k = 1; k <= 15; ++k) v.vertices.push_back(k);
  for (auto& r : loop_form_rows()) {
    VolumePlane pl;
    pl.index = r.i;
    int n = 0;
    for (int k = 0; k < 15; ++k)
      if (r.phi >> k & 1) {
        if (n == 7) throw IncidenceError("plane with more than seven members");
        pl.members[n++] = k + 1;
      }
    if (n != 7) throw IncidenceError("plane with fewer than seven members");
    pl.cls = r.cls;
    pl.geometry = r.geometry;
    pl.orientation = build("Phi").coeff(r.phi) > 0 ? 1 : -1;
    v.planes.push_back(pl);
  }
  Multivector theta3 = build("Theta") * Rational(3);
  for (int i = 1; i <= 15; ++i)
    for (int j = i + 1; j <= 15; ++j) {
      int k = i ^ j;
      if (k <= j) continue;
      v.quaternions.push_back({i, j, k});
      Mask m = (Mask{1} << (i - 1)) | (Mask{1} << (j - 1)) | (Mask{1} << (k - 1));
      Rational c = theta3.coeff(m);
      v.quaternion_sign.push_back(c > 0 ? 1 : (c < 0 ? -1 : 0));
      int count = 0;
      for (auto& pl : v.planes) {
        auto has = [&](int g) { return std::find(pl.members.begin(), pl.members.end(), g) != pl.members.end(); };
        if (has(i) && has(j) && has(k)) ++count;
      }
      v.planes_per_quaternion.push_back(count);
    }
  return v;
}

namespace {

// Oblique view of the tetrahedron on e1, e2, e4, e8; generator k sits at the
// mean of the corners named by its bits.
Pt volume_pos(int k) {
  const std::array<Pt, 4> corner = {{{70, 450}, {450, 450}, {300, 340}, {230, 70}}};
  Pt p{0, 0};
  int n = 0;
  for (int b = 0; b < 4; ++b)
    if (k >> b & 1) {
      p.x += corner[b].x;
      p.y += corner[b].y;
      ++n;
    }
  return {p.x / n, p.y / n};
}

}  // namespace

std::string fano_volume_svg(const FanoVolume& v) {
  std::string s =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"520\" viewBox=\"0 0 640 "
      "520\">\n"
      "  <title>Fano volume: 15 points, 15 planes, 35 quaternion triples</title>\n"
      "  <rect width=\"640\" height=\"520\" fill=\"white\"/>\n";
  Pt a = volume_pos(1), b = volume_pos(2), c = volume_pos(4);
  s += "  <polygon points=\"" + num(a.x) + "," + num(a.y) + " " + num(b.x) + "," + num(b.y) + " " + num(c.x) + "," +
       num(c.y) + "\" fill=\"#e8f0fa\" stroke=\"none\"/>\n";
  s += "  <text x=\"" + num((a.x + b.x) / 2) + "\" y=\"" + num(a.y + 30) +
       "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">&#934;_A (bottom face)</text>\n";
  for (std::size_t q = 0; q < v.quaternions.size(); ++q) {
    auto& t = v.quaternions[q];
    Pt p0 = volume_pos(t[0]), p1 = volume_pos(t[1]), p2 = volume_pos(t[2]);
    s += "  <polygon points=\"" + num(p0.x) + "," + num(p0.y) + " " + num(p1.x) + "," + num(p1.y) + " " + num(p2.x) +
         "," + num(p2.y) + "\" fill=\"none\" stroke=\"" + (v.quaternion_sign[q] < 0 ? "#d9a0a0" : "#a0b4d0") +
         "\" stroke-width=\"0.8\"/>\n";
  }
  int row = 0;
  for (auto& pl : v.planes) {
    Pt m{0, 0};
    for (int g : pl.members) {
      m.x += volume_pos(g).x / 7;
      m.y += volume_pos(g).y / 7;
    }
    const char* fill = pl.cls == "O" ? "#1f3a5f" : "#b03a2e";
    s += "  <rect x=\"" + num(m.x - 4) + "\" y=\"" + num(m.y - 4) + "\" width=\"8\" height=\"8\" fill=\"" + fill +
         "\"/>\n";
    s += "  <text x=\"" + num(m.x + 6) + "\" y=\"" + num(m.y - 5) +
         "\" font-family=\"sans-serif\" font-size=\"9\">" + std::to_string(pl.index) + "</text>\n";
    std::string members;
    for (int g : pl.members) members += mask_digits(Mask{1} << (g - 1));
    s += "  <text x=\"480\" y=\"" + num(40 + 16 * row++) + "\" font-family=\"monospace\" font-size=\"11\" fill=\"" +
         fill + "\">" + std::to_string(pl.index) + " " + members + " " + pl.cls + " " + pl.geometry + "</text>\n";
  }
  for (int k : v.vertices) {
    Pt p = volume_pos(k);
    s += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
         "\" r=\"11\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    s += "  <text x=\"" + num(p.x) + "\" y=\"" + num(p.y + 4) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" + gen(k) + "</text>\n";
  }
  s += "  <text x=\"10\" y=\"510\" font-family=\"sans-serif\" font-size=\"10\">Schematic projection. Planes are "
       "marked at the mean of their seven points; most are not flat in this drawing.</text>\n";
  s += "</svg>\n";
  return s;
}

std::string fano_volume_dot(const FanoVolume& v) {
  std::string s = "graph fano_volume {\n";
  for (int k : v.vertices) s += "  " + gen(k) + ";\n";
  for (std::size_t q = 0; q < v.quaternions.size(); ++q) {
    auto& t = v.quaternions[q];
    std::string lab = "q" + std::to_string(q + 1);
    s += "  " + gen(t[0]) + " -- " + gen(t[1]) + " [label=\"" + lab + "\"];\n";
    s += "  " + gen(t[1]) + " -- " + gen(t[2]) + " [label=\"" + lab + "\"];\n";
    s += "  " + gen(t[2]) + " -- " + gen(t[0]) + " [label=\"" + lab + "\"];\n";
  }
  s += "}\n";
  return s;
}

std::string fano_volume_json(const FanoVolume& v) {
  Json j;
  j["vertices"] = Json::array();
  for (int k : v.vertices) j["vertices"].push_back(gen(k));
  j["planes"] = Json::array();
  for (auto& pl : v.planes) {
    Json e;
    e["index"] = pl.index;
    e["members"] = Json::array();
    for (int g : pl.members) e["members"].push_back(gen(g));
    e["class"] = pl.cls;
    e["geometry"] = pl.geometry;
    e["orientation"] = pl.orientation;
    j["planes"].push_back(e);
  }
  j["quaternions"] = Json::array();
  for (std::size_t q = 0; q < v.quaternions.size(); ++q) {
    Json e;
    e["members"] = Json::array();
    for (int g : v.quaternions[q]) e["members"].push_back(gen(g));
    e["sign"] = v.quaternion_sign[q];
    e["planes"] = v.planes_per_quaternion[q];
    j["quaternions"].push_back(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace sedalg
