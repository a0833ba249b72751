#pragma once

// Shared test inputs: the regular 4g-gon, randomized valid perturbations of
// the genus-2 octagon, and small helpers.

#include <cstdint>
#include <random>

#include "hypdom/generate.hpp"
#include "hypdom/io.hpp"

namespace fixtures {

// Regular 4g-gon input, with or without explicit generator matrices.
hypdom::PolygonInput regular_input(int genus, bool with_generators = true);

// A valid genus-2 input that is *not* the regular octagon: a triangle is cut
// off one side of the octagon and glued back along the partner side, giving
// a non-convex 10-gon with two vertex orbits; optionally the whole thing is
// moved by a random isometry. Every seed gives a valid surface.
hypdom::PolygonInput perturbed_genus2(std::uint64_t seed);

// The same fixture with one vertex coordinate knocked off by 1e-3, which
// breaks the gluing conditions.
hypdom::PolygonInput broken_genus2(std::uint64_t seed);

hypdom::Isometry random_isometry(std::mt19937_64& rng,
                                 double max_translation = 0.3);

hypdom::DiskPoint random_point(std::mt19937_64& rng, double max_radius = 0.8);

}  // namespace fixtures
