#include "hypdom/generate.hpp"

#include <cmath>

namespace hypdom {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<DiskPoint> ring(int count, double radius) {
  std::vector<DiskPoint> v;
  v.reserve(count);
  for (int k = 0; k < count; ++k) {
    double t = 2.0 * kPi * k / count;
    v.emplace_back(radius * std::cos(t), radius * std::sin(t));
  }
  return v;
}

}  // namespace

GeneratedPolygon regular_polygon(int genus, const Tolerances& tol) {
  if (genus < 2) {
    fail(ErrorKind::InvalidInput, "regular polygon needs genus >= 2");
  }
  int N = 4 * genus;
  double target = 2.0 * kPi / N;  // corner angle making all 4g corners sum to 2*pi

  // Interior angle decreases from the Euclidean value toward 0 as the
  // vertices approach the boundary; bisect the Euclidean vertex radius.
  auto angle_at = [&](double r) {
    return Polygon(ring(N, r)).interior_angle(0);
  };
  double lo = 0.05, hi = 0.999;
  if (!(angle_at(lo) > target && angle_at(hi) < target)) {
    fail(ErrorKind::BisectionFailure, "corner angle does not bracket 2*pi/4g");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    double mid = 0.5 * (lo + hi);
    (angle_at(mid) > target ? lo : hi) = mid;
  }
  double r = 0.5 * (lo + hi);

  GeneratedPolygon G;
  G.vertices = ring(N, r);
  Polygon poly(G.vertices);
  for (int k = 0; k < 2 * genus; ++k) {
    int a = k, b = k + 2 * genus;  // opposite sides identified
    G.pairings.push_back({a, b});
    G.generators.push_back(Isometry::mapping_segment(
        poly.vertex(b), poly.vertex(b + 1), poly.vertex(a + 1), poly.vertex(a),
        tol.geom));
  }
  return G;
}

}  // namespace hypdom
