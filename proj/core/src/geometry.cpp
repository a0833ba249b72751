#include "hypdom/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace hypdom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Drift budget before an isometry is renormalized (see Isometry::operator*).
constexpr std::uint32_t kRenormEvery = 16;

std::string point_str(Complex z) {
  std::ostringstream os;
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return 1;
    case ErrorKind::NotMatching:
    case ErrorKind::LengthMismatch:
    case ErrorKind::OpenPolygon:
    case ErrorKind::InvalidTopology:
    case ErrorKind::AngleSum:
      return 2;
    default:
      return 3;
  }
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotMatching: return "NotMatching";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::OpenPolygon: return "OpenPolygon";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::AngleSum: return "AngleSum";
    case ErrorKind::EllipticOrParabolic: return "EllipticOrParabolic";
    case ErrorKind::DisjointGeodesics: return "DisjointGeodesics";
    case ErrorKind::IdenticalGeodesics: return "IdenticalGeodesics";
    case ErrorKind::Collinear: return "Collinear";
    case ErrorKind::CenterAtInfinity: return "CenterAtInfinity";
    case ErrorKind::SelfIntersecting: return "SelfIntersecting";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::LiftNotFound: return "LiftNotFound";
    case ErrorKind::WordMismatch: return "WordMismatch";
    case ErrorKind::NonClosingStar: return "NonClosingStar";
    case ErrorKind::DegenerateQuad: return "DegenerateQuad";
    case ErrorKind::IterationLimit: return "IterationLimit";
    case ErrorKind::DegenerateCell: return "DegenerateCell";
    case ErrorKind::BisectionFailure: return "BisectionFailure";
    case ErrorKind::NumericFailure: return "NumericFailure";
  }
  return "UnknownError";
}

DiskPoint::DiskPoint(double re_, double im_) : re(re_), im(im_) {
  double r2 = re * re + im * im;
  if (!(r2 < 1.0)) {
    fail(ErrorKind::InvalidInput,
         "point " + point_str({re, im}) + " is not inside the unit disk");
  }
}

double dist(DiskPoint x, DiskPoint y) {
  Complex num = y.z() - x.z();
  Complex den = 1.0 - std::conj(x.z()) * y.z();
  double t = std::abs(num) / std::abs(den);
  // t < 1 for interior points; clamp rounding spill.
  return 2.0 * std::atanh(std::min(t, 1.0 - 1e-17));
}

DiskPoint midpoint(DiskPoint x, DiskPoint y) {
  Isometry T = Isometry::point_to_origin(x);
  Complex u = T.apply(y).z();
  double r = std::abs(u);
  if (r == 0.0) return x;
  // tanh(atanh(r)/2) = r / (1 + sqrt(1 - r^2))
  Complex m = u / r * (r / (1.0 + std::sqrt(1.0 - r * r)));
  return T.inverse().apply(DiskPoint::from_complex(m));
}

DiskPoint point_toward(DiskPoint x, DiskPoint y, double s) {
  Isometry T = Isometry::point_to_origin(x);
  Complex u = T.apply(y).z();
  double r = std::abs(u);
  if (r == 0.0) fail(ErrorKind::NumericFailure, "point_toward: x == y");
  Complex m = u / r * std::tanh(s / 2.0);
  return T.inverse().apply(DiskPoint::from_complex(m));
}

double bearing(DiskPoint x, DiskPoint y) {
  Isometry T = Isometry::point_to_origin(x);
  Complex u = T.apply(y).z();
  if (std::abs(u) == 0.0) fail(ErrorKind::NumericFailure, "bearing: x == y");
  return std::arg(u);
}

Complex poincare_to_klein(DiskPoint z) {
  return 2.0 * z.z() / (1.0 + z.abs2());
}

DiskPoint klein_to_poincare(Complex k) {
  double n2 = std::norm(k);
  if (n2 >= 1.0) fail(ErrorKind::NumericFailure, "klein point outside disk");
  return DiskPoint::from_complex(k / (1.0 + std::sqrt(1.0 - n2)));
}

double orientation(DiskPoint p, DiskPoint q, DiskPoint r) {
  Complex a = poincare_to_klein(p);
  Complex b = poincare_to_klein(q);
  Complex c = poincare_to_klein(r);
  Complex u = b - a, v = c - a;
  return u.real() * v.imag() - u.imag() * v.real();
}

Isometry::Isometry(Complex a, Complex b) : a_(a), b_(b) {
  double det = std::norm(a_) - std::norm(b_);
  if (!(det > 0.0)) {
    fail(ErrorKind::InvalidInput,
         "isometry coefficients need |a| > |b|, got a=" + point_str(a) +
             " b=" + point_str(b));
  }
  normalize();
}

Isometry Isometry::point_to_origin(DiskPoint p) {
  double s = std::sqrt(1.0 - p.abs2());
  Isometry g;
  g.a_ = Complex(1.0 / s, 0.0);
  g.b_ = -p.z() / s;
  return g;
}

Isometry Isometry::segment_frame(DiskPoint x, DiskPoint y) {
  Isometry T = Isometry::point_to_origin(x);
  Complex u = T.apply(y).z();
  double r = std::abs(u);
  if (r == 0.0) fail(ErrorKind::NumericFailure, "segment_frame: x == y");
  // Post-compose with the rotation taking u to the positive real axis.
  // A rotation by theta is (a,b) = (e^{i theta/2}, 0), so composing it after
  // T scales both coefficients by the same phase.
  Complex phase = std::sqrt(std::conj(u) / r);
  Isometry g;
  g.a_ = phase * T.a_;
  g.b_ = phase * T.b_;
  return g.normalize();
}

Isometry Isometry::mapping_segment(DiskPoint x1, DiskPoint y1, DiskPoint x2,
                                   DiskPoint y2, double tol) {
  double d1 = dist(x1, y1), d2 = dist(x2, y2);
  if (std::abs(d1 - d2) > tol) {
    std::ostringstream os;
    os << "mapping_segment: lengths differ by " << std::abs(d1 - d2);
    fail(ErrorKind::LengthMismatch, os.str());
  }
  return segment_frame(x2, y2).inverse() * segment_frame(x1, y1);
}

DiskPoint Isometry::apply(DiskPoint z) const {
  Complex w = (a_ * z.z() + b_) / (std::conj(b_) * z.z() + std::conj(a_));
  // Guard against rounding spill onto/over the unit circle for points that
  // are legitimately close to the boundary.
  double n = std::abs(w);
  if (n >= 1.0) w *= (1.0 - 1e-16) / n;
  return DiskPoint::from_complex(w);
}

Complex Isometry::apply_boundary(Complex z) const {
  Complex w = (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
  return w / std::abs(w);
}

Isometry Isometry::inverse() const {
  Isometry g;
  g.a_ = std::conj(a_);
  g.b_ = -b_;
  g.drift_ = drift_;
  return g;
}

Isometry operator*(const Isometry& g, const Isometry& h) {
  Isometry r;
  r.a_ = g.a_ * h.a_ + g.b_ * std::conj(h.b_);
  r.b_ = g.a_ * h.b_ + g.b_ * std::conj(h.a_);
  r.drift_ = std::max(g.drift_, h.drift_) + 1;
  if (r.drift_ >= kRenormEvery) r.normalize();
  return r;
}

double Isometry::translation_length() const {
  double t = std::abs(trace()) / 2.0;
  if (t <= 1.0) return 0.0;
  return 2.0 * std::acosh(t);
}

double Isometry::norm_defect() const {
  return std::abs(std::norm(a_) - std::norm(b_) - 1.0);
}

Isometry& Isometry::normalize() {
  double det = std::norm(a_) - std::norm(b_);
  if (!(det > 0.0)) {
    fail(ErrorKind::NumericFailure, "isometry lost positivity of |a|^2-|b|^2");
  }
  double s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
  drift_ = 0;
  return *this;
}

bool Isometry::near_identity(double tol, bool up_to_sign) const {
  auto close = [&](double sign) {
    return std::abs(a_ - sign) <= tol && std::abs(b_) <= tol;
  };
  return close(1.0) || (up_to_sign && close(-1.0));
}

bool Isometry::near(const Isometry& g, const Isometry& h, double tol,
                    bool up_to_sign) {
  auto close = [&](double sign) {
    return std::abs(g.a_ - sign * h.a_) <= tol &&
           std::abs(g.b_ - sign * h.b_) <= tol;
  };
  return close(1.0) || (up_to_sign && close(-1.0));
}

Geodesic Geodesic::through(DiskPoint x, DiskPoint y) {
  Isometry T = Isometry::point_to_origin(x);
  Complex u = T.apply(y).z();
  double r = std::abs(u);
  if (r == 0.0) fail(ErrorKind::NumericFailure, "geodesic through equal points");
  Complex dir = u / r;
  Isometry Tinv = T.inverse();
  return Geodesic{Tinv.apply_boundary(-dir), Tinv.apply_boundary(dir)};
}

Geodesic axis(const Isometry& g) {
  Isometry n = g;
  n.normalize();
  Complex a = n.a(), b = n.b();
  if (!(std::abs(a.real()) > 1.0 + 1e-13)) {
    fail(ErrorKind::EllipticOrParabolic,
         "isometry with |Re a| = " + std::to_string(std::abs(a.real())) +
             " has no translation axis");
  }
  // Fixed points: conj(b) z^2 + (conj(a) - a) z - b = 0. With |a|^2-|b|^2=1
  // and |Re a|>1 the discriminant |b|^2 - Im(a)^2 = Re(a)^2 - 1 > 0 and both
  // roots land on the unit circle.
  double disc = std::norm(b) - a.imag() * a.imag();
  double root = std::sqrt(std::max(disc, 0.0));
  Complex cb = std::conj(b);
  Complex p = (Complex(0.0, a.imag()) - root) / cb;
  Complex q = (Complex(0.0, a.imag()) + root) / cb;
  p /= std::abs(p);
  q /= std::abs(q);
  // Order (repelling, attracting): push an interior axis point and see which
  // ideal endpoint it moves toward (Klein chord parametrization).
  DiskPoint m = klein_to_poincare((p + q) / 2.0);
  Complex km = poincare_to_klein(m);
  Complex kg = poincare_to_klein(n.apply(m));
  Complex u = (q - p) / std::abs(q - p);
  double step = ((kg - km) * std::conj(u)).real();
  if (step < 0.0) std::swap(p, q);
  return Geodesic{p, q};
}

namespace {

// Line through the Klein chords of two geodesics; the chords and the
// geodesics meet in the same point set.
struct Chord {
  Complex p, q;
};

bool strictly_separates(const Chord& c, Complex u, Complex v) {
  Complex d = c.q - c.p;
  double su = (d * std::conj(u - c.p)).imag();
  double sv = (d * std::conj(v - c.p)).imag();
  // note: imag(d * conj(w)) = cross(w, d); sign flip is fine, we only compare.
  return (su > 0 && sv < 0) || (su < 0 && sv > 0);
}

}  // namespace

DiskPoint geodesic_intersection(const Geodesic& A, const Geodesic& B) {
  Chord ca{A.p, A.q}, cb{B.p, B.q};
  auto same_pt = [](Complex x, Complex y) { return std::abs(x - y) < 1e-12; };
  bool identical = (same_pt(A.p, B.p) && same_pt(A.q, B.q)) ||
                   (same_pt(A.p, B.q) && same_pt(A.q, B.p));
  if (identical) {
    fail(ErrorKind::IdenticalGeodesics, "geodesics share both ideal endpoints");
  }
  if (!strictly_separates(ca, B.p, B.q) || !strictly_separates(cb, A.p, A.q)) {
    fail(ErrorKind::DisjointGeodesics,
         "geodesics do not cross: endpoints do not interleave");
  }
  // Intersect the chords (both straight in the Klein model).
  Complex r = ca.q - ca.p, s = cb.q - cb.p;
  double denom = r.real() * s.imag() - r.imag() * s.real();
  if (denom == 0.0) {
    fail(ErrorKind::DisjointGeodesics, "parallel chords in intersection");
  }
  Complex w = cb.p - ca.p;
  double t = (w.real() * s.imag() - w.imag() * s.real()) / denom;
  return klein_to_poincare(ca.p + t * r);
}

double dist_to_geodesic(DiskPoint p, const Geodesic& G) {
  // Translate p to the origin; the image geodesic has ideal endpoints u, v
  // and the distance from 0 depends only on their angular half-separation.
  Isometry T = Isometry::point_to_origin(p);
  Complex u = T.apply_boundary(G.p);
  Complex v = T.apply_boundary(G.q);
  double delta = std::abs(wrap_angle(std::arg(v) - std::arg(u)));
  if (delta > kPi) delta = 2.0 * kPi - delta;
  double half = delta / 2.0;  // in (0, pi/2]
  double x0 = std::tan((kPi / 2.0 - half) / 2.0);
  return 2.0 * std::atanh(std::min(x0, 1.0 - 1e-17));
}

double angle_between(const Geodesic& A, const Geodesic& B, DiskPoint z) {
  Isometry T = Isometry::point_to_origin(z);
  double da = std::arg(T.apply_boundary(A.q));
  double db = std::arg(T.apply_boundary(B.q));
  double d = std::abs(wrap_angle(da - db));
  if (d > kPi) d = 2.0 * kPi - d;  // fold into [0, pi]
  if (d > kPi / 2.0) d = kPi - d;  // lines, not rays: fold into [0, pi/2]
  return d;
}

double in_circle_det(DiskPoint p, DiskPoint q, DiskPoint r, DiskPoint s) {
  double ax = p.re - s.re, ay = p.im - s.im;
  double bx = q.re - s.re, by = q.im - s.im;
  double cx = r.re - s.re, cy = r.im - s.im;
  double a2 = ax * ax + ay * ay;
  double b2 = bx * bx + by * by;
  double c2 = cx * cx + cy * cy;
  return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) +
         a2 * (bx * cy - by * cx);
}

CircleSide in_circle(DiskPoint p, DiskPoint q, DiskPoint r, DiskPoint s,
                     double tol) {
  double d = in_circle_det(p, q, r, s);
  if (std::abs(d) <= tol) return CircleSide::Cocircular;
  return d > 0 ? CircleSide::Inside : CircleSide::Outside;
}

namespace {

// Hyperboloid lift of a disk point: (2x, 2y, 1+|z|^2) / (1-|z|^2).
std::array<double, 3> lift(DiskPoint z) {
  double s = 1.0 - z.abs2();
  return {2.0 * z.re / s, 2.0 * z.im / s, (1.0 + z.abs2()) / s};
}

}  // namespace

DiskPoint circumcenter(DiskPoint p, DiskPoint q, DiskPoint r) {
  double orient = orientation(p, q, r);
  double scale = std::max({1e-30, std::abs(orient)});
  if (!(scale > 1e-18)) {
    fail(ErrorKind::Collinear, "circumcenter of points on a common geodesic");
  }

  auto P = lift(p), Q = lift(q), R = lift(r);
  // Covectors of the equidistance equations <C,P> = <C,Q> = <C,R>.
  std::array<double, 3> u = {P[0] - Q[0], P[1] - Q[1], -(P[2] - Q[2])};
  std::array<double, 3> v = {Q[0] - R[0], Q[1] - R[1], -(Q[2] - R[2])};
  std::array<double, 3> C = {u[1] * v[2] - u[2] * v[1],
                             u[2] * v[0] - u[0] * v[2],
                             u[0] * v[1] - u[1] * v[0]};
  double mink = C[0] * C[0] + C[1] * C[1] - C[2] * C[2];
  if (!(mink < 0.0)) {
    // Equidistant locus is a horocycle or hypercycle: no interior center.
    fail(ErrorKind::CenterAtInfinity,
         "equidistant locus of the triple has no interior center");
  }
  double n = std::sqrt(-mink);
  if (C[2] < 0.0) n = -n;  // pick the upper hyperboloid sheet
  DiskPoint c = DiskPoint::from_complex(
      Complex(C[0] / n, C[1] / n) / (1.0 + C[2] / n));

  // Gauss-Newton polish of (d(c,p)-d(c,q), d(c,p)-d(c,r)); the linear solve
  // above is already close, this drives the residual to machine precision.
  for (int iter = 0; iter < 4; ++iter) {
    double f1 = dist(c, p) - dist(c, q);
    double f2 = dist(c, p) - dist(c, r);
    if (std::abs(f1) < 1e-14 && std::abs(f2) < 1e-14) break;
    double h = 1e-7;
    DiskPoint cx(c.re + h, c.im), cy(c.re, c.im + h);
    double j11 = (dist(cx, p) - dist(cx, q) - f1) / h;
    double j12 = (dist(cy, p) - dist(cy, q) - f1) / h;
    double j21 = (dist(cx, p) - dist(cx, r) - f2) / h;
    double j22 = (dist(cy, p) - dist(cy, r) - f2) / h;
    double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-18) break;
    double dx = (f1 * j22 - f2 * j12) / det;
    double dy = (j11 * f2 - j21 * f1) / det;
    DiskPoint next(c.re - dx, c.im - dy);
    c = next;
  }
  return c;
}

bool segments_cross(DiskPoint a1, DiskPoint b1, DiskPoint a2, DiskPoint b2,
                    double tol) {
  // Straight segments in the Klein model; strict proper crossing test.
  Complex p = poincare_to_klein(a1), q = poincare_to_klein(b1);
  Complex r = poincare_to_klein(a2), s = poincare_to_klein(b2);
  auto cross = [](Complex u, Complex v) {
    return u.real() * v.imag() - u.imag() * v.real();
  };
  double d1 = cross(q - p, r - p);
  double d2 = cross(q - p, s - p);
  double d3 = cross(s - r, p - r);
  double d4 = cross(s - r, q - r);
  return ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
         ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol));
}

double wrap_angle(double x) {
  double two_pi = 2.0 * kPi;
  double y = std::fmod(x, two_pi);
  if (y < 0.0) y += two_pi;
  return y;
}

}  // namespace hypdom
