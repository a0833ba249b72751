#pragma once

// JSON input/output. Two schemas are accepted on input:
//
//  * polygon: {"vertices": [[re,im],...], "pairings": [[i,j],...],
//              "generators": [[a_re,a_im,b_re,b_im],...]?}
//    Side k runs from vertex k to vertex k+1 (mod 2m); generators are
//    optional and derived from the vertices when absent.
//
//  * dirichlet: the output of a previous run ({"genus","center","vertices",
//    "pairings":[{"side","partner","word","matrix"},...],...}); it is
//    converted back into the polygon form so results can be re-ingested.
//
// Serialization goes through ordered JSON with the default shortest
// round-trip number format, so equal runs produce byte-identical files.

#include <string>

#include "hypdom/delaunay.hpp"
#include "hypdom/dirichlet.hpp"
#include "hypdom/generate.hpp"
#include "hypdom/loop_embedding.hpp"
#include "hypdom/loop_reduction.hpp"

namespace hypdom {

struct PolygonInput {
  std::vector<DiskPoint> vertices;
  std::vector<std::array<int, 2>> pairings;
  std::vector<Isometry> generators;  // empty: derive from vertices
};

PolygonInput parse_polygon(const std::string& json_text);
PolygonInput read_polygon_file(const std::string& path);

std::string to_json(const GeneratedPolygon& G);
std::string to_json(const DirichletDomain& D);

// Stage dumps for --dump-stages.
std::string loops_json(const LoopSystem& L);
std::string convex_json(const ConvexSystem& C);
std::string delaunay_json(const SurfaceTriangulation& T,
                          const SurfaceTriangulation::FlipStats& stats);

void write_file(const std::string& path, const std::string& text);

}  // namespace hypdom
