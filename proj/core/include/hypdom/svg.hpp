#pragma once

// SVG rendering of a pipeline run: unit circle, input polygon, stage-1
// chains and chords, stage-2 convex polygon, Dirichlet domain. Geodesics are
// drawn as circular arcs orthogonal to the unit circle.

#include <string>

#include "hypdom/pipeline.hpp"

namespace hypdom {

std::string render_svg(const PipelineResult& R);

}  // namespace hypdom
