#include "hypdom/loop_embedding.hpp"

#include <algorithm>
#include <cmath>

namespace hypdom {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<int> loop_end_order(const std::vector<std::array<int, 2>>& pairings,
                                int num_sides) {
  std::vector<int> pair_of(num_sides, -1), partner(num_sides, -1);
  for (int p = 0; p < static_cast<int>(pairings.size()); ++p) {
    for (int side : pairings[p]) {
      if (side < 0 || side >= num_sides || pair_of[side] >= 0) {
        fail(ErrorKind::NotMatching, "bad pairing table");
      }
      pair_of[side] = p;
    }
    partner[pairings[p][0]] = pairings[p][1];
    partner[pairings[p][1]] = pairings[p][0];
  }
  for (int s = 0; s < num_sides; ++s) {
    if (pair_of[s] < 0) fail(ErrorKind::NotMatching, "unpaired side");
  }

  // Jump corner to corner around the single vertex: after the corner before
  // side k comes the corner before the side after k's partner.
  std::vector<int> order;
  order.reserve(num_sides);
  int k = 0;
  do {
    order.push_back(pair_of[k]);
    k = (partner[k] + 1) % num_sides;
  } while (k != 0 && static_cast<int>(order.size()) <= num_sides);
  if (static_cast<int>(order.size()) != num_sides) {
    fail(ErrorKind::InvalidTopology,
         "corner walk does not close through all corners");
  }
  return order;
}

bool interleaves(const std::vector<int>& order, int pairing_a, int pairing_b) {
  if (pairing_a == pairing_b) return false;
  std::vector<int> pa, pb;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    if (order[i] == pairing_a) pa.push_back(i);
    if (order[i] == pairing_b) pb.push_back(i);
  }
  if (pa.size() != 2 || pb.size() != 2) return false;
  auto inside = [&](int x) { return pa[0] < x && x < pa[1]; };
  return inside(pb[0]) != inside(pb[1]);
}

ConvexSystem embed_loops(const LoopSystem& L, const Tolerances& tol) {
  int num_sides = static_cast<int>(L.sides.size());
  int g = num_sides / 4;

  std::vector<int> order = loop_end_order(L.pairings, num_sides);

  // Loop 0 plus the lowest-index loop whose ends interleave with it; their
  // holonomies are translations with crossing axes.
  int other = -1;
  for (int j = 1; j < static_cast<int>(L.pairings.size()); ++j) {
    if (interleaves(order, 0, j)) {
      other = j;
      break;
    }
  }
  if (other < 0) {
    fail(ErrorKind::InvalidTopology,
         "no loop interleaves with loop 0 around the base point");
  }

  // Holonomy of the loop along side k, rebased at the base point.
  auto loop_holonomy = [&](int pairing) {
    int k = L.pairings[pairing][0];
    return L.table[k].inverse() * L.table[k + 1];
  };
  Word g0 = loop_holonomy(0);
  Word g1 = loop_holonomy(other);

  DiskPoint center = geodesic_intersection(axis(g0.iso()), axis(g1.iso()));

  std::vector<DiskPoint> verts;
  verts.reserve(num_sides);
  for (int k = 0; k < num_sides; ++k) verts.push_back(L.table[k].apply(center));
  Polygon poly(std::move(verts));

  ConvexSystem C;
  C.center = center;
  C.polygon = std::move(poly);
  C.table = L.table;
  C.pairings = L.pairings;
  C.pairing_words = L.pairing_words;
  C.side_words = L.side_words;
  C.relocation = dist(L.basepoint, center);
  C.max_chord = 0.0;
  for (const LoopSide& s : L.sides) {
    C.max_chord = std::max(C.max_chord, s.chord_length);
  }
  C.axis_pairing_a = 0;
  C.axis_pairing_b = other;
  C.end_order = std::move(order);

  // The relocated polygon must be an honest convex fundamental polygon.
  if (!C.polygon.is_ccw()) {
    fail(ErrorKind::NumericFailure, "relocated polygon is not counterclockwise");
  }
  if (!C.polygon.is_convex(tol.angle)) {
    fail(ErrorKind::NotConvex, "relocated polygon has a flat or reflex corner");
  }
  if (!C.polygon.is_simple(tol.pred)) {
    fail(ErrorKind::SelfIntersecting, "relocated polygon crosses itself");
  }
  double angle_sum = C.polygon.angle_sum();
  if (std::abs(angle_sum - 2.0 * kPi) > tol.angle) {
    fail(ErrorKind::AngleSum,
         "relocated polygon has corner angle sum " + std::to_string(angle_sum));
  }
  double area = C.polygon.area();
  double want = 2.0 * kPi * (2 * g - 2);
  if (std::abs(area - want) > tol.area) {
    fail(ErrorKind::NumericFailure,
         "relocated polygon area " + std::to_string(area) + " != " +
             std::to_string(want));
  }
  for (int k = 0; k < num_sides; ++k) {
    double bound = L.sides[k].chord_length + 2.0 * C.relocation + tol.geom;
    if (C.polygon.side_length(k) > bound) {
      fail(ErrorKind::NumericFailure,
           "side " + std::to_string(k) + " exceeds its relocation bound");
    }
  }

  return C;
}

}  // namespace hypdom
