#pragma once

namespace hypdom {

// Numerical tolerances used across the pipeline. The defaults are tuned for
// double precision on surfaces of genus 2..~10; `scaled` multiplies the whole
// family by a common factor (the CLI --tol flag divides by the geom default).
struct Tolerances {
  double geom = 1e-9;   // point/distance comparisons
  double pred = 1e-12;  // in-circle / orientation near-zero band
  double angle = 1e-8;  // angle-sum checks
  double area = 1e-8;   // area comparisons
  double merge = 1e-7;  // merging near-coincident dual vertices
  double norm = 1e-12;  // matrix normalization drift

  Tolerances scaled(double factor) const {
    Tolerances t = *this;
    t.geom *= factor;
    t.pred *= factor;
    t.angle *= factor;
    t.area *= factor;
    t.merge *= factor;
    t.norm *= factor;
    return t;
  }
};

}  // namespace hypdom
