#pragma once
// Fano plane and Fano volume incidence, with fixed-layout SVG, DOT and JSON
// output. All output is a pure function of the input.

#include <array>
#include <string>
#include <vector>

#include "sedalg/clifford.hpp"

namespace sedalg {

struct FanoLine {
  std::array<int, 3> members{};  // ascending generator indices
  int orientation = 1;           // sign of the term
  std::array<int, 3> cycle{};    // members in arrow order
};

struct FanoPlane {
  std::vector<FanoLine> lines;       // in term order
  std::array<int, 8> slot_of{};      // generator -> layout slot 0..6 (index 0 unused)
  std::string cls;                   // octonion-like class of the form
};

// Throws IncidenceError for anything but seven lines on seven points.
FanoPlane fano_plane(const Multivector& form);
std::string fano_plane_svg(const FanoPlane& p);
std::string fano_plane_dot(const FanoPlane& p);
std::string fano_plane_json(const FanoPlane& p);

struct VolumePlane {
  int index = 0;                // 1..15
  std::array<int, 7> members{};  // generator indices 1..15
  std::string cls;               // O or P4
  std::string geometry;          // Face, Plane, Cone, Folly
  int orientation = 1;           // sign of the Phi term
};

struct FanoVolume {
  std::vector<int> vertices;                    // 1..15
  std::vector<VolumePlane> planes;              // 15
  std::vector<std::array<int, 3>> quaternions;  // {i, j, i^j}, 35
  std::vector<int> quaternion_sign;             // sign of the matching Theta term
  std::vector<int> planes_per_quaternion;
};

FanoVolume fano_volume();
std::string fano_volume_svg(const FanoVolume& v);
std::string fano_volume_dot(const FanoVolume& v);
std::string fano_volume_json(const FanoVolume& v);

}  // namespace sedalg
