#pragma once
// Generator maps from Clifford blades to Cayley-Dickson basis elements.

#include <array>
#include <string>
#include <vector>

#include "sedalg/cayley_dickson.hpp"
#include "sedalg/clifford.hpp"

namespace sedalg {

struct GenMap {
  std::string name;
  int dim = 0;    // Clifford dimension
  int level = 0;  // Cayley-Dickson level
  std::vector<SignedBlade> images;  // images[k-1] for generator k

  std::string to_json() const;
};

// e1,e2,e3 -> o1,o2,o12
GenMap map3();
// e_k -> o_k in graded order, with e7 -> -o123
GenMap map7();
// e_k -> o_k in graded order, all positive (hex indices 1..F)
GenMap map15();

// Ordered product of generator images, ascending index, left to right.
SignedBlade map_blade(Mask blade, const GenMap& m);
CDElement map_multivector(const Multivector& x, const GenMap& m);

// True iff the mapped sum of the signed 2-blades is 0 and the mapped
// Clifford product of the signed 2-blades (in order) is +1.
bool automorphism_filter(const std::vector<SignedBlade>& candidate, const GenMap& m);

// Grade-7 blade over Cl15 whose generators are the map15 preimages of the loop.
Mask loop_to_form(const std::array<Mask, 7>& loop);

}  // namespace sedalg
