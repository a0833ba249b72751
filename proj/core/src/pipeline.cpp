#include "hypdom/pipeline.hpp"

namespace hypdom {

FundamentalPolygon validate_input(const PolygonInput& in,
                                  const Tolerances& tol) {
  return FundamentalPolygon(in.vertices, in.pairings, in.generators, tol);
}

PipelineResult run_pipeline(const PolygonInput& in,
                            const PipelineOptions& opts) {
  FundamentalPolygon P = validate_input(in, opts.tol);
  LoopSystem loops = reduce_to_loops(P, opts.tol);
  ConvexSystem convex = embed_loops(loops, opts.tol);
  SurfaceTriangulation tri = SurfaceTriangulation::fan(convex, opts.tol);
  auto stats = tri.make_delaunay(opts.tol, opts.flip_cap);
  tri.check_invariants(opts.tol);
  DirichletDomain dom = dualize(tri, P.generators(), opts.tol);
  return PipelineResult{std::move(P),     std::move(loops), std::move(convex),
                        std::move(tri),   stats,            std::move(dom)};
}

}  // namespace hypdom
