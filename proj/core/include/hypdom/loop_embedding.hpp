#pragma once

// Stage 2: replace the chain polygon by a convex geodesic one with the same
// deck words. Two of the loops whose ends interleave around the base point
// are picked; their holonomies are hyperbolic with crossing axes, and the
// axes' intersection becomes the new base point. Pushing it through the
// table words t_k yields a convex, simple, correctly-paired 4g-gon whose
// sides are honest geodesic segments.

#include <array>
#include <vector>

#include "hypdom/loop_reduction.hpp"
#include "hypdom/polygon.hpp"

namespace hypdom {

struct ConvexSystem {
  DiskPoint center;   // relocated base point (intersection of the two axes)
  Polygon polygon;    // 4g vertices, counterclockwise: vertex k = t_k(center)

  std::vector<Word> table;                   // shared with the loop system
  std::vector<std::array<int, 2>> pairings;  // same combinatorics as stage 1
  std::vector<Word> pairing_words;
  std::vector<Word> side_words;

  double relocation = 0.0;  // dist(old base point, new one)
  double max_chord = 0.0;   // longest stage-1 chord
  int axis_pairing_a = 0;   // pairings whose loop axes were intersected
  int axis_pairing_b = 0;

  // Cyclic order of the loop ends around the base point, one pairing index
  // per polygon corner (used for the interleaving test; kept for reporting).
  std::vector<int> end_order;
};

// Cyclic corner-to-corner jump sequence of pairing indices; must be a single
// 4g-cycle for a one-vertex polygon (throws InvalidTopology otherwise).
std::vector<int> loop_end_order(const std::vector<std::array<int, 2>>& pairings,
                                int num_sides);

// True when the two pairings' occurrences alternate in the cyclic sequence.
bool interleaves(const std::vector<int>& order, int pairing_a, int pairing_b);

ConvexSystem embed_loops(const LoopSystem& L, const Tolerances& tol);

}  // namespace hypdom
