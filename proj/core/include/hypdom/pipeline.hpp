#pragma once

// The whole computation in one call: validate the input polygon, reduce to
// loops, embed as a convex polygon, flip to Delaunay, dualize to the
// Dirichlet domain. Intermediate stages stay available in the result.

#include <cstdint>

#include "hypdom/delaunay.hpp"
#include "hypdom/dirichlet.hpp"
#include "hypdom/fundamental_polygon.hpp"
#include "hypdom/io.hpp"
#include "hypdom/loop_embedding.hpp"
#include "hypdom/loop_reduction.hpp"

namespace hypdom {

struct PipelineOptions {
  Tolerances tol;
  std::uint64_t flip_cap = 10'000'000;
};

struct PipelineResult {
  FundamentalPolygon input;
  LoopSystem loops;
  ConvexSystem convex;
  SurfaceTriangulation delaunay;
  SurfaceTriangulation::FlipStats flip_stats;
  DirichletDomain dirichlet;
};

FundamentalPolygon validate_input(const PolygonInput& in,
                                  const Tolerances& tol);

PipelineResult run_pipeline(const PolygonInput& in,
                            const PipelineOptions& opts = {});

}  // namespace hypdom
