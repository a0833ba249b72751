#pragma once

// A fundamental polygon for a closed orientable hyperbolic surface: a simple
// counterclockwise polygon with 2m sides and a fixed-point-free matching of
// the sides into m pairs. The generator of pair p maps the higher-indexed
// side onto the lower-indexed one reversing boundary orientation (source of
// one side lands on the target of the other), which is what a closed
// orientable gluing requires.
//
// Construction validates everything: the matching, side lengths, that the
// generators really realize the gluing, vertex-orbit words, the Euler
// characteristic (genus >= 2), and the 2*pi angle-sum condition per vertex
// orbit.

#include <array>
#include <vector>

#include "hypdom/polygon.hpp"
#include "hypdom/tolerances.hpp"
#include "hypdom/words.hpp"

namespace hypdom {

enum class End { Source, Target };

struct SideRecord {
  int source = 0;   // vertex index; target is source+1 mod 2m
  int target = 0;
  int pair = 0;     // partner side
  int pairing = 0;  // index of the pairing (the generator letter)
  bool is_rep = false;  // lower-indexed side of its pairing
};

struct VertexRecord {
  DiskPoint pos;
  int orbit = 0;
  int rep = 0;  // representative vertex of the orbit (lowest index)
  Word word;    // apply(word, pos(rep)) == pos
};

// A directed edge-end in the developed tiling: side `side` of the polygon
// copy word*P, anchored at that side's source or target vertex lift.
struct StarState {
  int side = 0;
  End end = End::Source;
  Word word;
};

class FundamentalPolygon {
 public:
  // `generators` may be empty, in which case they are derived from the
  // vertex positions of each pair of sides.
  FundamentalPolygon(std::vector<DiskPoint> vertices,
                     std::vector<std::array<int, 2>> pairings,
                     std::vector<Isometry> generators, const Tolerances& tol);

  int num_sides() const { return static_cast<int>(sides_.size()); }
  int num_pairings() const { return static_cast<int>(generators_.size()); }
  int num_orbits() const { return num_orbits_; }
  int genus() const { return genus_; }

  const Polygon& polygon() const { return poly_; }
  const SideRecord& side(int k) const { return sides_[k]; }
  const VertexRecord& vertex(int v) const { return verts_[v]; }
  const Isometry& generator(int pairing) const { return generators_[pairing]; }
  const std::vector<Isometry>& generators() const { return generators_; }
  const Tolerances& tolerances() const { return tol_; }

  // Single-letter word for generator `pairing`, optionally inverted.
  Word letter(int pairing, bool inverse = false) const;
  // Word mapping side k's partner onto side k (a single letter).
  Word mu(int k) const;

  double orbit_angle_sum(int orbit) const;

  // Vertex lift the state is anchored at.
  DiskPoint star_anchor(const StarState& s) const;
  // One step counterclockwise around the state's anchor vertex lift.
  StarState star_next(const StarState& s) const;
  // Full closed cycle of star states from (side, end, id); throws
  // NonClosingStar if it fails to come back with a +-identity word.
  std::vector<StarState> vertex_star(int side, End end) const;

 private:
  Polygon poly_;
  std::vector<SideRecord> sides_;
  std::vector<VertexRecord> verts_;
  std::vector<Isometry> generators_;
  Tolerances tol_;
  int num_orbits_ = 0;
  int genus_ = 0;
};

}  // namespace hypdom
