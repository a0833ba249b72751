#pragma once

// Built-in example surfaces: the regular 4g-gon with opposite sides
// identified. The Euclidean vertex radius is tuned by bisection until the
// interior angle equals 2*pi/(4g), which makes the corner cycle close up
// with total angle 2*pi (all 4g corners form one orbit).

#include <array>
#include <vector>

#include "hypdom/fundamental_polygon.hpp"

namespace hypdom {

struct GeneratedPolygon {
  std::vector<DiskPoint> vertices;
  std::vector<std::array<int, 2>> pairings;
  std::vector<Isometry> generators;
};

GeneratedPolygon regular_polygon(int genus, const Tolerances& tol);

}  // namespace hypdom
