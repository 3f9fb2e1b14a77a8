#include "sedalg/transfer.hpp"

#include <algorithm>
#include <sstream>

namespace sedalg {

namespace {

GenMap graded_map(std::string name, int dim, int level) {
  GenMap m;
  m.name = std::move(name);
  m.dim = dim;
  m.level = level;
  for (int k = 1; k <= dim; ++k) m.images.push_back({1, static_cast<Mask>(k)});
  return m;
}

}  // namespace

GenMap map3() { return graded_map("map3", 3, 2); }

GenMap map7() {
  GenMap m = graded_map("map7", 7, 3);
  m.images[6].sign = -1;
  return m;
}

GenMap map15() { return graded_map("map15", 15, 4); }

std::string GenMap::to_json() const {
  std::ostringstream os;
  os << "{\"name\":\"" << name << "\",\"dim\":" << dim << ",\"level\":" << level << ",\"images\":{";
  for (std::size_t k = 0; k < images.size(); ++k)
    os << (k ? "," : "") << "\"e" << mask_digits(Mask{1} << k) << "\":\"" << cd_signed_name(images[k]) << '"';
  os << "}}";
  return os.str();
}

SignedBlade map_blade(Mask blade, const GenMap& m) {
  if (blade & ~full_mask(m.dim)) throw DimensionError("blade outside map dimension");
  SignedBlade acc{1, 0};
  for (int k = 0; k < m.dim; ++k) {
    if (!(blade >> k & 1)) continue;
    const SignedBlade& g = m.images[k];
    SignedBlade r = cd_mul(acc.mask, g.mask, m.level);
    acc = {acc.sign * g.sign * r.sign, r.mask};
  }
  return acc;
}

CDElement map_multivector(const Multivector& x, const GenMap& m) {
  std::vector<CDElement::Term> out;
  for (auto& [mask, c] : x.terms()) {
    SignedBlade b = map_blade(mask, m);
    out.emplace_back(b.mask, b.sign * c);
  }
  return CDElement::from_terms(m.level, std::move(out));
}

bool automorphism_filter(const std::vector<SignedBlade>& candidate, const GenMap& m) {
  std::vector<CDElement::Term> sum;
  SignedBlade prod{1, 0};
  for (auto& b : candidate) {
    SignedBlade img = map_blade(b.mask, m);
    sum.emplace_back(img.mask, Rational(b.sign * img.sign));
    SignedBlade p = blade_mul(prod.mask, b.mask);
    prod = {prod.sign * b.sign * p.sign, p.mask};
  }
  if (!CDElement::from_terms(m.level, std::move(sum)).is_zero()) return false;
  SignedBlade img = map_blade(prod.mask, m);
  return img.mask == 0 && prod.sign * img.sign == 1;
}

Mask loop_to_form(const std::array<Mask, 7>& loop) {
  Mask out = 0;
  for (Mask a : loop) {
    if (a == 0 || a > 15) throw std::invalid_argument("loop member is not a pure sedenion basis element");
    for (Mask b : loop)
      if (a != b && std::find(loop.begin(), loop.end(), a ^ b) == loop.end())
        throw std::invalid_argument("loop is not closed");
    out |= Mask{1} << (a - 1);
  }
  if (grade(out) != 7) throw std::invalid_argument("loop members are not distinct");
  return out;
}

}  // namespace sedalg
