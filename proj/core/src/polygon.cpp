#include "hypdom/polygon.hpp"

#include <cmath>

namespace hypdom {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Polygon::Polygon(std::vector<DiskPoint> vertices) : verts_(std::move(vertices)) {
  int n = size();
  if (n < 3) fail(ErrorKind::InvalidInput, "polygon needs at least 3 vertices");
  for (int k = 0; k < n; ++k) {
    if (dist(verts_[k], verts_[(k + 1) % n]) < 1e-14) {
      fail(ErrorKind::InvalidInput,
           "polygon has coincident consecutive vertices at " +
               std::to_string(k));
    }
  }
}

const DiskPoint& Polygon::vertex(int k) const {
  int n = size();
  return verts_[((k % n) + n) % n];
}

double Polygon::side_length(int k) const {
  return dist(vertex(k), vertex(k + 1));
}

double Polygon::perimeter() const {
  double s = 0.0;
  for (int k = 0; k < size(); ++k) s += side_length(k);
  return s;
}

double Polygon::interior_angle(int k) const {
  // Counterclockwise boundary: interior lies between the ray toward the next
  // vertex and the ray toward the previous one, sweeping counterclockwise.
  return wrap_angle(bearing(vertex(k), vertex(k - 1)) -
                    bearing(vertex(k), vertex(k + 1)));
}

double Polygon::angle_sum() const {
  double s = 0.0;
  for (int k = 0; k < size(); ++k) s += interior_angle(k);
  return s;
}

double Polygon::area() const { return (size() - 2) * kPi - angle_sum(); }

bool Polygon::is_ccw() const {
  // Shoelace on the Klein coordinates: the sides are straight there.
  double s = 0.0;
  for (int k = 0; k < size(); ++k) {
    Complex a = poincare_to_klein(vertex(k));
    Complex b = poincare_to_klein(vertex(k + 1));
    s += a.real() * b.imag() - a.imag() * b.real();
  }
  return s > 0.0;
}

bool Polygon::is_convex(double angle_tol) const {
  for (int k = 0; k < size(); ++k) {
    if (interior_angle(k) > kPi - angle_tol) return false;
  }
  return true;
}

bool Polygon::is_simple(double tol) const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Adjacent sides share an endpoint; skip them (including the wrap).
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_cross(vertex(i), vertex(i + 1), vertex(j), vertex(j + 1),
                         tol)) {
        return false;
      }
    }
  }
  return true;
}

bool Polygon::contains(DiskPoint p, double margin) const {
  for (int k = 0; k < size(); ++k) {
    if (orientation(vertex(k), vertex(k + 1), p) <= margin) return false;
  }
  return true;
}

}  // namespace hypdom
