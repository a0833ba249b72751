#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "hypdom/loop_embedding.hpp"
#include "support/fixtures.hpp"

using namespace hypdom;

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_convex_system(const ConvexSystem& C, int genus, const LoopSystem& L,
                         double pos_tol = 1e-8) {
  int n = 4 * genus;
  REQUIRE(C.polygon.size() == n);
  CHECK(C.polygon.is_ccw());
  CHECK(C.polygon.is_convex(1e-8));
  CHECK(C.polygon.is_simple(1e-12));
  CHECK(std::abs(C.polygon.angle_sum() - 2 * kPi) <= 1e-8);
  CHECK(std::abs(C.polygon.area() - 2 * kPi * (2 * genus - 2)) <= 1e-8);

  // vertices really are the table words pushed through the new center
  for (int k = 0; k < n; ++k) {
    CHECK(dist(C.polygon.vertex(k), C.table[k].apply(C.center)) <= pos_tol);
  }

  // sides pair up with the stage-1 words: side k2 onto side k1 reversed
  for (std::size_t j = 0; j < C.pairings.size(); ++j) {
    int k1 = C.pairings[j][0], k2 = C.pairings[j][1];
    const Word& w = C.pairing_words[j];
    CHECK(dist(w.apply(C.polygon.vertex(k2)), C.polygon.vertex(k1 + 1)) <=
          pos_tol);
    CHECK(dist(w.apply(C.polygon.vertex(k2 + 1)), C.polygon.vertex(k1)) <=
          pos_tol);
    // same pairing combinatorics as stage 1
    CHECK(C.pairings[j] == L.pairings[j]);
  }

  // paired sides are congruent
  for (std::size_t j = 0; j < C.pairings.size(); ++j) {
    CHECK(std::abs(C.polygon.side_length(C.pairings[j][0]) -
                   C.polygon.side_length(C.pairings[j][1])) <= pos_tol);
  }

  // each new side is at most the old chord plus twice the relocation
  for (int k = 0; k < n; ++k) {
    CHECK(C.polygon.side_length(k) <=
          L.sides[k].chord_length + 2.0 * C.relocation + 1e-9);
  }

  // the two axis pairings interleave around the base point
  CHECK(interleaves(C.end_order, C.axis_pairing_a, C.axis_pairing_b));
}

}  // namespace

TEST_CASE("loop end order of the octagon") {
  // opposite pairing on 8 sides: pairing indices read 0,1,2,3,0,1,2,3
  std::vector<std::array<int, 2>> pairings = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
  auto order = loop_end_order(pairings, 8);
  REQUIRE(order.size() == 8);
  std::vector<int> expect = {0, 1, 2, 3, 0, 1, 2, 3};
  CHECK(order == expect);
  CHECK(interleaves(order, 0, 1));
  CHECK(interleaves(order, 0, 2));
  CHECK(interleaves(order, 2, 3));
}

TEST_CASE("interleaving of loop ends") {
  // a b a b alternates; a a b b does not
  CHECK(interleaves({0, 1, 0, 1}, 0, 1));
  CHECK(!interleaves({0, 0, 1, 1}, 0, 1));
  CHECK(!interleaves({0, 1, 1, 0}, 0, 1));
  // octagon-like order with extra letters in between
  CHECK(interleaves({0, 2, 1, 3, 0, 2, 1, 3}, 2, 3));
  CHECK(!interleaves({0, 2, 2, 3, 0, 1, 1, 3}, 1, 2));
}

TEST_CASE("non-single-cycle jumps are rejected") {
  // adjacent pairing (sphere-like gluing) breaks the one-orbit requirement
  std::vector<std::array<int, 2>> pairings = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  try {
    loop_end_order(pairings, 8);
    FAIL("expected InvalidTopology");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidTopology);
  }
}

TEST_CASE("octagon embeds with almost no relocation") {
  PolygonInput in = fixtures::regular_input(2);
  FundamentalPolygon fp(in.vertices, in.pairings, in.generators, Tolerances{});
  LoopSystem L = reduce_to_loops(fp, Tolerances{});
  ConvexSystem C = embed_loops(L, Tolerances{});
  check_convex_system(C, 2, L);
  // the chain polygon is already the regular octagon: the axes of the two
  // crossing loops meet at (a lift of) the single vertex orbit... the new
  // base point stays within the original polygon's diameter
  CHECK(C.relocation <= 2.0 * C.max_chord);
  // sides keep their stage-1 chord lengths only approximately; the regular
  // case is symmetric enough that the polygon stays regular
  for (int k = 0; k < 8; ++k) {
    CHECK(std::abs(C.polygon.side_length(k) - C.polygon.side_length(0)) <=
          1e-6);
  }
}

TEST_CASE("perturbed surfaces embed convexly") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    CAPTURE(seed);
    PolygonInput in = fixtures::perturbed_genus2(seed);
    FundamentalPolygon fp(in.vertices, in.pairings, in.generators,
                          Tolerances{});
    LoopSystem L = reduce_to_loops(fp, Tolerances{});
    ConvexSystem C = embed_loops(L, Tolerances{});
    check_convex_system(C, 2, L);
  }
}

TEST_CASE("higher genus embeddings") {
  for (int genus = 3; genus <= 5; ++genus) {
    CAPTURE(genus);
    PolygonInput in = fixtures::regular_input(genus);
    FundamentalPolygon fp(in.vertices, in.pairings, in.generators,
                          Tolerances{});
    LoopSystem L = reduce_to_loops(fp, Tolerances{});
    ConvexSystem C = embed_loops(L, Tolerances{});
    // word entries grow like cosh of the translation lengths, so the
    // word-vs-position cross checks lose accuracy with the genus
    check_convex_system(C, genus, L, genus <= 3 ? 1e-8 : 1e-6);
  }
}

TEST_CASE("axis holonomies translate along crossing axes") {
  PolygonInput in = fixtures::regular_input(2);
  FundamentalPolygon fp(in.vertices, in.pairings, in.generators, Tolerances{});
  LoopSystem L = reduce_to_loops(fp, Tolerances{});
  ConvexSystem C = embed_loops(L, Tolerances{});

  // recover the two holonomies the implementation intersected
  auto holonomy = [&](int pairing) {
    int k = -1;
    for (std::size_t j = 0; j < L.pairings.size(); ++j) {
      if (static_cast<int>(j) == pairing) k = L.pairings[j][0];
    }
    REQUIRE(k >= 0);
    return (L.table[k].inverse() * L.table[k + 1]).iso();
  };
  Isometry g0 = holonomy(C.axis_pairing_a);
  Isometry g1 = holonomy(C.axis_pairing_b);
  REQUIRE(g0.is_hyperbolic());
  REQUIRE(g1.is_hyperbolic());

  // the center lies on both axes, so both holonomies keep it on its axis:
  // d(center, g(center)) equals the translation length exactly
  DiskPoint c = C.center;
  CHECK(std::abs(dist(c, g0.apply(c)) - g0.translation_length()) <= 1e-9);
  CHECK(std::abs(dist(c, g1.apply(c)) - g1.translation_length()) <= 1e-9);

  // iterating the holonomy from the center walks along its axis toward the
  // attracting fixed point
  Geodesic ax = axis(g0);
  DiskPoint z = c;
  for (int i = 0; i < 12; ++i) z = g0.apply(z);
  CHECK(std::abs(z.z() - ax.q) <= 1e-4);
}
