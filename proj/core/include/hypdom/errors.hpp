#pragma once

// Error taxonomy for the whole library. Every throwing operation uses
// hypdom::Error with a kind that maps onto one of three CLI exit classes:
// input/schema problems, surface-validation failures, numeric failures.

#include <stdexcept>
#include <string>

namespace hypdom {

enum class ErrorKind {
  // input / schema (exit code 1)
  InvalidInput,

  // surface validation (exit code 2)
  NotMatching,     // pairings are not a fixed-point-free perfect matching
  LengthMismatch,  // paired sides have different hyperbolic lengths
  OpenPolygon,     // identifications are geometrically inconsistent
  InvalidTopology, // Euler data does not describe a closed genus>=2 surface
  AngleSum,        // vertex-orbit angle sums violate the 2*pi condition

  // numeric / algorithmic (exit code 3)
  EllipticOrParabolic, // isometry has no axis
  DisjointGeodesics,   // geodesics do not cross
  IdenticalGeodesics,
  Collinear,           // no circumcircle: points on a common geodesic
  CenterAtInfinity,    // equidistant locus is a horocycle/hypercycle
  SelfIntersecting,    // polygon boundary crosses itself
  NotConvex,
  LiftNotFound,        // vertex-star search exhausted without a match
  WordMismatch,        // two derivations of the same word disagree
  NonClosingStar,      // vertex-star walk failed to cycle
  DegenerateQuad,      // flip quad is not strictly convex
  IterationLimit,      // flip budget exhausted
  DegenerateCell,      // dual cell lost too many vertices to merging
  BisectionFailure,
  NumericFailure,      // anything else that should not happen on valid input
};

// Exit classes used by the CLI: 1 = input, 2 = validation, 3 = numeric.
int exit_code_for(ErrorKind kind);

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hypdom
