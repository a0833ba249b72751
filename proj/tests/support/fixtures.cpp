#include "support/fixtures.hpp"

#include <cmath>

namespace fixtures {

using namespace hypdom;

PolygonInput regular_input(int genus, bool with_generators) {
  GeneratedPolygon G = regular_polygon(genus, Tolerances{});
  PolygonInput in;
  in.vertices = G.vertices;
  in.pairings = G.pairings;
  if (with_generators) in.generators = G.generators;
  return in;
}

Isometry random_isometry(std::mt19937_64& rng, double max_translation) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::uniform_real_distribution<double> radius(0.0, max_translation);
  double t = angle(rng), d = radius(rng), phase = angle(rng);
  // Rotation about the origin composed with a translation along direction t.
  double c = std::cosh(d / 2.0), s = std::sinh(d / 2.0);
  Isometry translate(Complex(c, 0.0),
                     Complex(s * std::cos(t), s * std::sin(t)));
  Isometry rotate(Complex(std::cos(phase / 2.0), std::sin(phase / 2.0)),
                  Complex(0.0, 0.0));
  return rotate * translate;
}

DiskPoint random_point(std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> u(-max_radius, max_radius);
  for (;;) {
    double x = u(rng), y = u(rng);
    if (x * x + y * y < max_radius * max_radius) return DiskPoint(x, y);
  }
}

PolygonInput perturbed_genus2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolygonInput base = regular_input(2);

  // Cut the triangle (v_s, p, v_{s+1}) out of the octagon and glue its image
  // under gamma^{-1} back along the partner side. The quotient surface is
  // unchanged, so the result is a valid (non-convex) 10-gon fundamental
  // polygon with vertex orbits {original 8} and {p, gamma^{-1} p}.
  std::uniform_int_distribution<int> pick_pair(0, 3);
  std::uniform_real_distribution<double> pick_depth(0.05, 0.15);
  int pr = pick_pair(rng);
  int s = base.pairings[pr][0];       // 0..3 for the octagon
  int s2 = base.pairings[pr][1];      // s + 4
  const Isometry gamma = base.generators[pr];

  Polygon oct(base.vertices);
  DiskPoint mid = midpoint(oct.vertex(s), oct.vertex(s + 1));
  double depth = pick_depth(rng) * oct.side_length(s);
  DiskPoint p = point_toward(mid, DiskPoint(0.0, 0.0), depth);
  DiskPoint q = gamma.inverse().apply(p);

  PolygonInput out;
  for (int k = 0; k <= s; ++k) out.vertices.push_back(oct.vertex(k));
  out.vertices.push_back(p);
  for (int k = s + 1; k <= s2; ++k) out.vertices.push_back(oct.vertex(k));
  out.vertices.push_back(q);
  for (int k = s2 + 1; k < 8; ++k) out.vertices.push_back(oct.vertex(k));

  // Old side k keeps its matrix at its shifted position; the split sides
  // (s and s+1 on the dent, s2+1 and s2+2 on the bulge) pair up crosswise,
  // both with the original matrix.
  auto shift = [&](int k) {
    if (k < s) return k;
    if (k < s2) return k + 1;  // k > s here: the dent added one vertex
    return k + 2;
  };
  for (int k = 0; k < 4; ++k) {
    if (k == pr) continue;
    int a = base.pairings[k][0], b = base.pairings[k][1];
    out.pairings.push_back({shift(a), shift(b)});
    out.generators.push_back(base.generators[k]);
  }
  out.pairings.push_back({s, s2 + 2});      // (v_s -> p) with (q -> v_{s2+1})
  out.generators.push_back(gamma);
  out.pairings.push_back({s + 1, s2 + 1});  // (p -> v_{s+1}) with (v_{s2} -> q)
  out.generators.push_back(gamma);

  // Move the whole polygon by a random isometry (conjugating the matrices).
  Isometry move = random_isometry(rng);
  for (DiskPoint& v : out.vertices) v = move.apply(v);
  for (Isometry& gen : out.generators) {
    gen = move * gen * move.inverse();
  }
  return out;
}

PolygonInput broken_genus2(std::uint64_t seed) {
  PolygonInput in = perturbed_genus2(seed);
  in.vertices[3] = DiskPoint(in.vertices[3].re + 1e-3, in.vertices[3].im);
  return in;
}

}  // namespace fixtures
