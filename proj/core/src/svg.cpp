#include "hypdom/svg.hpp"

#include <cmath>
#include <sstream>

namespace hypdom {

namespace {

constexpr double kCx = 500.0, kCy = 500.0, kScale = 480.0;

struct Pix {
  double x, y;
};

Pix pix(Complex z) { return {kCx + kScale * z.real(), kCy - kScale * z.imag()}; }
Pix pix(DiskPoint p) { return pix(p.z()); }

void fmt(std::ostringstream& os, double v) {
  os << (std::abs(v) < 1e-9 ? 0.0 : v);
}

// Path segment along the geodesic from a to b: a circular arc orthogonal to
// the unit circle, or a straight line through the origin.
std::string arc_to(DiskPoint a, DiskPoint b) {
  Complex z1 = a.z(), z2 = b.z();
  double cross = z1.real() * z2.imag() - z1.imag() * z2.real();
  std::ostringstream os;
  os.precision(10);
  if (std::abs(cross) < 1e-9) {
    Pix q = pix(b);
    os << "L ";
    fmt(os, q.x);
    os << ' ';
    fmt(os, q.y);
    return os.str();
  }
  // Orthogonal circle center c: 2<c, z> = 1 + |z|^2 for both endpoints.
  double r1 = 1.0 + std::norm(z1), r2 = 1.0 + std::norm(z2);
  double det = 4.0 * cross;
  double cx = (r1 * 2.0 * z2.imag() - r2 * 2.0 * z1.imag()) / det;
  double cy = (2.0 * z1.real() * r2 - 2.0 * z2.real() * r1) / det;
  Complex c(cx, cy);
  double radius = std::sqrt(std::abs(std::norm(c) - 1.0));
  // Positive-angle arc in disk coordinates shows as sweep 0 after y-flip.
  Complex u = z1 - c, v = z2 - c;
  int sweep = (u.real() * v.imag() - u.imag() * v.real()) > 0 ? 0 : 1;
  Pix q = pix(b);
  os << "A ";
  fmt(os, kScale * radius);
  os << ' ';
  fmt(os, kScale * radius);
  os << " 0 0 " << sweep << ' ';
  fmt(os, q.x);
  os << ' ';
  fmt(os, q.y);
  return os.str();
}

std::string polygon_path(const std::vector<DiskPoint>& verts, bool close) {
  std::ostringstream os;
  os.precision(10);
  Pix p0 = pix(verts[0]);
  os << "M ";
  fmt(os, p0.x);
  os << ' ';
  fmt(os, p0.y);
  os << ' ';
  std::size_t n = verts.size();
  std::size_t last = close ? n : n - 1;
  for (std::size_t k = 0; k < last; ++k) {
    os << arc_to(verts[k], verts[(k + 1) % n]) << ' ';
  }
  if (close) os << 'Z';
  return os.str();
}

void add_path(std::ostringstream& svg, const std::string& d,
              const std::string& stroke, double width,
              const std::string& extra = "") {
  svg << "  <path d=\"" << d << "\" fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"" << width << "\"" << extra << "/>\n";
}

void add_dot(std::ostringstream& svg, DiskPoint p, const std::string& color,
             double r) {
  Pix q = pix(p);
  svg << "  <circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"" << r
      << "\" fill=\"" << color << "\"/>\n";
}

}  // namespace

std::string render_svg(const PipelineResult& R) {
  std::ostringstream svg;
  svg.precision(10);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" "
         "height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  svg << "  <rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  svg << "  <circle cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\"" << kScale
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  // Input polygon.
  add_path(svg, polygon_path(R.input.polygon().vertices(), true), "#b0b0b0",
           1.5);

  // Stage 1: lifted chains and their chords.
  for (const LoopSide& s : R.loops.sides) {
    add_path(svg, polygon_path(s.chain, false), "#e8a33d", 1.0);
    add_path(svg,
             polygon_path({s.chain.front(), s.chain.back()}, false), "#d04a35",
             1.0, " stroke-dasharray=\"6 4\"");
  }
  add_dot(svg, R.loops.basepoint, "#d04a35", 4.0);

  // Stage 2: convex polygon.
  add_path(svg, polygon_path(R.convex.polygon.vertices(), true), "#3a6fd8",
           1.5);
  add_dot(svg, R.convex.center, "#3a6fd8", 4.0);

  // Stage 3: Dirichlet domain.
  add_path(svg, polygon_path(R.dirichlet.vertices, true), "#2d8a4e", 2.5);
  add_dot(svg, R.dirichlet.center, "#2d8a4e", 4.0);
  for (const DiskPoint& v : R.dirichlet.vertices) add_dot(svg, v, "#2d8a4e", 2.0);

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hypdom
