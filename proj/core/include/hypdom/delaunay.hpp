#pragma once

// Stage 3a: triangulation of the quotient surface with the single vertex of
// the convex polygon, made Delaunay by edge flips.
//
// Storage is by half-edge index h: triangle h/3, slot h%3, with next/prev
// implicit in the slot arithmetic. Each triangle carries its own lift into
// the disk (corner_ gives the source point of h in that lift) plus the deck
// word corner_word_ sending the base lift to that corner. hol_[h] changes
// frames across the edge: it maps the twin triangle's lift so that the
// twin's copy of the shared edge lands on h's copy (reversed).
//
// An edge is locally Delaunay when the twin's far corner, brought into h's
// frame, is not strictly inside the circumcircle of h's triangle. Flipping
// rewrites the two triangles in the lower-indexed triangle's frame, so the
// new diagonal always has identity holonomy.

#include <cstdint>
#include <functional>
#include <vector>

#include "hypdom/loop_embedding.hpp"

namespace hypdom {

class SurfaceTriangulation {
 public:
  // Fan triangulation of the convex polygon from vertex 0: 4g-2 triangles,
  // diagonals with identity holonomy, boundary sides glued by the pairing
  // words.
  static SurfaceTriangulation fan(const ConvexSystem& C, const Tolerances& tol);

  int genus() const { return genus_; }
  int num_triangles() const { return static_cast<int>(twin_.size()) / 3; }
  int num_halfedges() const { return static_cast<int>(twin_.size()); }

  static int tri(int h) { return h / 3; }
  static int next(int h) { return 3 * (h / 3) + (h % 3 + 1) % 3; }
  static int prev(int h) { return 3 * (h / 3) + (h % 3 + 2) % 3; }

  int twin(int h) const { return twin_[h]; }
  const Word& holonomy(int h) const { return hol_[h]; }
  const DiskPoint& corner(int h) const { return corner_[h]; }
  const Word& corner_word(int h) const { return cword_[h]; }
  // The base lift of the single vertex: corner_word(h) maps it to corner(h).
  const DiskPoint& base() const { return base_; }

  double triangle_area(int t) const;
  double total_area() const;

  // Violation determinant for edge h: positive when the opposite corner of
  // the twin triangle lies strictly inside this triangle's circumcircle.
  double in_circle_value(int h) const;
  bool locally_delaunay(int h, double tol) const;

  // Replace the diagonal h/twin(h) of its strictly convex quad by the other
  // diagonal; throws DegenerateQuad when the quad is not strictly convex.
  // Returns the half-edge id of the new diagonal.
  int flip(int h);

  struct FlipStats {
    std::uint64_t flips = 0;
    std::uint64_t tests = 0;
    std::uint64_t max_queue = 0;
  };

  // Flip until every edge is locally Delaunay (FIFO over canonical edge ids
  // with re-queueing of the quad boundary); throws IterationLimit past `cap`
  // flips. The observer, when set, runs after every flip.
  FlipStats make_delaunay(
      const Tolerances& tol, std::uint64_t cap = 10'000'000,
      const std::function<void(const SurfaceTriangulation&)>& observer = {});

  // Structural and geometric self-checks (twin involution, holonomy gluing,
  // corner words, positive triangle areas); throws on violation.
  void check_invariants(const Tolerances& tol) const;

 private:
  int genus_ = 0;
  DiskPoint base_;
  std::vector<int> twin_;
  std::vector<Word> hol_;
  std::vector<DiskPoint> corner_;
  std::vector<Word> cword_;
};

}  // namespace hypdom
