#pragma once

// A hyperbolic polygon: a cyclic list of vertices in the disk, sides being
// the geodesic segments between consecutive vertices. Side k runs from
// vertex k to vertex k+1 (mod n). Angles, perimeter and area are hyperbolic;
// area comes from the Gauss-Bonnet angle defect.

#include <vector>

#include "hypdom/geometry.hpp"

namespace hypdom {

class Polygon {
 public:
  Polygon() = default;
  // At least 3 vertices, consecutive ones distinct (throws InvalidInput).
  explicit Polygon(std::vector<DiskPoint> vertices);

  int size() const { return static_cast<int>(verts_.size()); }
  const DiskPoint& vertex(int k) const;  // cyclic index, negatives allowed
  const std::vector<DiskPoint>& vertices() const { return verts_; }

  double side_length(int k) const;
  double perimeter() const;

  // Interior angle at vertex k for a counterclockwise boundary, in (0, 2*pi).
  double interior_angle(int k) const;
  double angle_sum() const;

  // Gauss-Bonnet: (n-2)*pi minus the interior angle sum.
  double area() const;

  bool is_ccw() const;  // Klein-model shoelace sign
  // All interior angles at most pi - angle_tol.
  bool is_convex(double angle_tol) const;
  // No two non-adjacent sides cross (proper crossings only).
  bool is_simple(double tol) const;
  // Convex counterclockwise polygons only: p strictly on the interior side
  // of every edge (Klein-model cross products exceed margin).
  bool contains(DiskPoint p, double margin = 0.0) const;

 private:
  std::vector<DiskPoint> verts_;
};

}  // namespace hypdom
