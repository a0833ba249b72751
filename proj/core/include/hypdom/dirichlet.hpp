#pragma once

// Stage 3b: Dirichlet domain as the Voronoi dual of the Delaunay
// triangulation.
//
// Walking the star of the single vertex enumerates the 12g-6 triangle
// wedges around one lift of it; the circumcenters of those wedges, brought
// into the central frame, are the dual cell's vertices in counterclockwise
// order. Each dual side lies on the bisector between the center and one
// orbit neighbor (its site); the side's word gamma satisfies
// gamma(center) = site and maps the partner side onto it. Coincident
// consecutive circumcenters (more than three cocircular sites) are merged.

#include <cstdint>
#include <vector>

#include "hypdom/delaunay.hpp"
#include "hypdom/polygon.hpp"

namespace hypdom {

struct DirichletDomain {
  int genus = 0;
  DiskPoint center;
  std::vector<DiskPoint> vertices;  // counterclockwise; side k: v_k -> v_{k+1}
  std::vector<Word> side_words;     // per side: gamma with gamma(center) = site
  std::vector<int> partner;         // per side: the side it is glued to

  double area = 0.0;       // Gauss-Bonnet
  double perimeter = 0.0;

  Polygon polygon() const { return Polygon(vertices); }
};

// `generators` are the input polygon's pairing isometries; side words are
// respelled as short words in them, which keeps the resolved matrices close
// to the exact group elements (long star-walk spellings accumulate roundoff
// in proportion to their intermediate entry growth).
DirichletDomain dualize(const SurfaceTriangulation& T,
                        const std::vector<Isometry>& generators,
                        const Tolerances& tol);

// Random interior points tested against all side words and their pairwise
// products: a violation is a sample strictly closer (beyond tol) to some
// translate of the center than to the center itself.
struct SampleCheck {
  int samples = 0;
  int violations = 0;
  double worst_excess = 0.0;  // most negative margin seen, as a positive gap
};

SampleCheck sample_check(const DirichletDomain& D, int samples, double tol,
                         std::uint64_t seed);

}  // namespace hypdom
