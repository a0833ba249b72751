#pragma once

// Poincaré disk kernel: points, orientation-preserving isometries, geodesics,
// and the metric predicates the rest of the library is built on.
//
// Conventions:
//  * A point is a complex number z with |z| < 1.
//  * An isometry is z -> (a z + b) / (conj(b) z + conj(a)) with |a|^2-|b|^2=1.
//  * A geodesic is stored by its two ideal endpoints on the unit circle; for
//    translation axes the order is (repelling, attracting).

#include <complex>
#include <cstdint>

#include "hypdom/errors.hpp"

namespace hypdom {

using Complex = std::complex<double>;

struct DiskPoint {
  double re = 0.0;
  double im = 0.0;

  DiskPoint() = default;
  DiskPoint(double re_, double im_);  // throws InvalidInput when |z| >= 1
  static DiskPoint from_complex(Complex z) { return DiskPoint(z.real(), z.imag()); }

  Complex z() const { return {re, im}; }
  double abs2() const { return re * re + im * im; }
};

// Hyperbolic distance, dist(x,y) = 2 atanh |(y-x)/(1 - conj(x) y)|.
double dist(DiskPoint x, DiskPoint y);

// Hyperbolic midpoint of the segment [x,y].
DiskPoint midpoint(DiskPoint x, DiskPoint y);

// Point at hyperbolic distance s from x along the geodesic toward y (s may
// exceed dist(x,y)); requires x != y.
DiskPoint point_toward(DiskPoint x, DiskPoint y, double s);

// Initial bearing (radians) of the geodesic from x toward y, measured at x
// after translating x to the origin. Requires x != y.
double bearing(DiskPoint x, DiskPoint y);

// Poincaré <-> Klein model conversions (same ideal boundary). Used internally
// where straight-chord reasoning is convenient.
Complex poincare_to_klein(DiskPoint z);
DiskPoint klein_to_poincare(Complex k);

// Orientation of the triple (p,q,r): > 0 when counterclockwise, 0 when the
// three points lie on a common geodesic. (Sign of the Klein-model cross
// product, which is collinearity-exact for geodesics.)
double orientation(DiskPoint p, DiskPoint q, DiskPoint r);

class Isometry {
 public:
  Isometry() : a_(1.0, 0.0), b_(0.0, 0.0) {}
  Isometry(Complex a, Complex b);  // normalizes; throws unless |a| > |b|

  static Isometry identity() { return Isometry(); }
  // z -> (z - p) / (1 - conj(p) z), sending p to the origin.
  static Isometry point_to_origin(DiskPoint p);
  // Sends x to the origin and y onto the positive real axis.
  static Isometry segment_frame(DiskPoint x, DiskPoint y);
  // The unique orientation-preserving isometry with x1 -> x2 and y1 -> y2.
  // Requires dist(x1,y1) == dist(x2,y2) within tol.
  static Isometry mapping_segment(DiskPoint x1, DiskPoint y1, DiskPoint x2,
                                  DiskPoint y2, double tol);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  DiskPoint apply(DiskPoint z) const;
  // Action on an ideal point (|z| = 1); result is renormalized to |.| = 1.
  Complex apply_boundary(Complex z) const;

  Isometry inverse() const;
  friend Isometry operator*(const Isometry& g, const Isometry& h);  // g after h

  // 2 Re(a): the isometry is a translation iff |trace| > 2.
  double trace() const { return 2.0 * a_.real(); }
  bool is_hyperbolic(double margin = 1e-12) const {
    return std::abs(trace()) > 2.0 + margin;
  }
  double translation_length() const;

  double norm_defect() const;  // | |a|^2 - |b|^2 - 1 |
  Isometry& normalize();       // rescale so |a|^2 - |b|^2 = 1 exactly

  // True when within tol of the identity; deck transformations are only
  // defined up to sign, so by default -identity also counts.
  bool near_identity(double tol, bool up_to_sign = true) const;
  static bool near(const Isometry& g, const Isometry& h, double tol,
                   bool up_to_sign = true);

 private:
  Complex a_, b_;
  std::uint32_t drift_ = 0;  // compositions since last renormalization
};

struct Geodesic {
  Complex p;  // ideal endpoint, |p| = 1
  Complex q;  // ideal endpoint, |q| = 1

  // Complete geodesic through two distinct interior points, oriented x -> y.
  static Geodesic through(DiskPoint x, DiskPoint y);
};

// Translation axis of a hyperbolic isometry, oriented (repelling, attracting):
// g moves points along the axis from p toward q. Throws EllipticOrParabolic
// when |Re a| <= 1.
Geodesic axis(const Isometry& g);

// Transversal intersection point of two complete geodesics. Throws
// DisjointGeodesics / IdenticalGeodesics when they do not cross once.
DiskPoint geodesic_intersection(const Geodesic& A, const Geodesic& B);

// Distance from p to the complete geodesic G (always >= 0).
double dist_to_geodesic(DiskPoint p, const Geodesic& G);

// Angle in [0, pi/2] between two geodesics at a common point z (z must lie on
// both within ordinary accuracy; only the tangent directions are used).
double angle_between(const Geodesic& A, const Geodesic& B, DiskPoint z);

// Euclidean in-circle determinant on disk coordinates: > 0 iff s lies strictly
// inside the circle through the counterclockwise triple (p,q,r). Hyperbolic
// circles are Euclidean circles in this model, so the sign is also the
// hyperbolic in-circle answer.
double in_circle_det(DiskPoint p, DiskPoint q, DiskPoint r, DiskPoint s);

enum class CircleSide { Inside, Outside, Cocircular };
CircleSide in_circle(DiskPoint p, DiskPoint q, DiskPoint r, DiskPoint s,
                     double tol);

// Center of the hyperbolic circle through three points not on a common
// geodesic. Solved on the hyperboloid (Minkowski) model and polished by a few
// Gauss-Newton steps on the equidistance residual. Throws Collinear or
// CenterAtInfinity in the degenerate cases.
DiskPoint circumcenter(DiskPoint p, DiskPoint q, DiskPoint r);

// True hyperbolic segments [a1,b1] and [a2,b2] cross in exactly one interior
// point (shared endpoints do not count as crossing beyond tol).
bool segments_cross(DiskPoint a1, DiskPoint b1, DiskPoint a2, DiskPoint b2,
                    double tol);

// Wrap an angle into [0, 2*pi).
double wrap_angle(double x);

}  // namespace hypdom
