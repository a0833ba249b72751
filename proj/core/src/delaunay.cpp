#include "hypdom/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>

namespace hypdom {

namespace {
constexpr double kPi = 3.14159265358979323846;

double corner_angle(DiskPoint at, DiskPoint u, DiskPoint v) {
  double d = wrap_angle(bearing(at, u) - bearing(at, v));
  return d > kPi ? 2.0 * kPi - d : d;
}
}  // namespace

SurfaceTriangulation SurfaceTriangulation::fan(const ConvexSystem& C,
                                               const Tolerances& tol) {
  int N = C.polygon.size();
  int T = N - 2;

  SurfaceTriangulation S;
  S.genus_ = N / 4;
  S.base_ = C.center;
  S.twin_.assign(3 * T, -1);
  S.hol_.assign(3 * T, Word());
  S.corner_.assign(3 * T, DiskPoint());
  S.cword_.assign(3 * T, Word());

  // Triangle t = (v0, v_{t+1}, v_{t+2}); every triangle lives in the
  // polygon's own frame, so the fan diagonals glue with identity holonomy.
  for (int t = 0; t < T; ++t) {
    S.corner_[3 * t] = C.polygon.vertex(0);
    S.corner_[3 * t + 1] = C.polygon.vertex(t + 1);
    S.corner_[3 * t + 2] = C.polygon.vertex(t + 2);
    S.cword_[3 * t] = C.table[0];
    S.cword_[3 * t + 1] = C.table[t + 1];
    S.cword_[3 * t + 2] = C.table[t + 2];
  }
  for (int k = 1; k <= T - 1; ++k) {
    int h = 3 * k;            // v0 -> v_{k+1} in triangle k
    int h2 = 3 * (k - 1) + 2; // v_{k+1} -> v0 in triangle k-1
    S.twin_[h] = h2;
    S.twin_[h2] = h;
  }

  // Boundary side s (v_s -> v_{s+1}) glued to its partner by the side word.
  auto boundary_he = [&](int s) {
    if (s == 0) return 0;
    if (s <= N - 2) return 3 * (s - 1) + 1;
    return 3 * (T - 1) + 2;
  };
  std::vector<int> partner(N, -1);
  for (const auto& pr : C.pairings) {
    partner[pr[0]] = pr[1];
    partner[pr[1]] = pr[0];
  }
  for (int s = 0; s < N; ++s) {
    int h = boundary_he(s);
    S.twin_[h] = boundary_he(partner[s]);
    S.hol_[h] = C.side_words[s];
  }

  S.check_invariants(tol);
  return S;
}

double SurfaceTriangulation::triangle_area(int t) const {
  DiskPoint a = corner_[3 * t], b = corner_[3 * t + 1], c = corner_[3 * t + 2];
  return kPi - corner_angle(a, b, c) - corner_angle(b, c, a) -
         corner_angle(c, a, b);
}

double SurfaceTriangulation::total_area() const {
  double s = 0.0;
  for (int t = 0; t < num_triangles(); ++t) s += triangle_area(t);
  return s;
}

double SurfaceTriangulation::in_circle_value(int h) const {
  DiskPoint a = corner_[h];
  DiskPoint b = corner_[next(h)];
  DiskPoint c = corner_[prev(h)];
  DiskPoint d = hol_[h].apply(corner_[prev(twin_[h])]);
  return in_circle_det(a, b, c, d);
}

bool SurfaceTriangulation::locally_delaunay(int h, double tol) const {
  return in_circle_value(h) <= tol;
}

int SurfaceTriangulation::flip(int h) {
  int t = twin_[h];
  if (tri(t) == tri(h)) {
    fail(ErrorKind::DegenerateQuad, "flip edge is glued to its own triangle");
  }
  if (tri(h) > tri(t)) std::swap(h, t);
  int s1 = tri(h), s2 = tri(t);
  int a = next(h), b = prev(h);
  int c = next(t), d = prev(t);
  Word holw = hol_[h];  // s2's frame -> s1's frame

  // Quad X -> W -> Y -> Z counterclockwise in s1's frame; the flip replaces
  // diagonal X-Y by W-Z.
  DiskPoint X = corner_[h], Y = corner_[a], Z = corner_[b];
  DiskPoint W = holw.apply(corner_[d]);
  if (!(orientation(X, W, Y) > 0 && orientation(W, Y, Z) > 0 &&
        orientation(Y, Z, X) > 0 && orientation(Z, X, W) > 0)) {
    fail(ErrorKind::DegenerateQuad, "flip quad is not strictly convex");
  }
  Word cwX = cword_[h], cwY = cword_[a], cwZ = cword_[b];
  Word cwW = holw * cword_[d];

  struct Saved {
    int id;
    int twin;
    Word hol;
  };
  std::array<Saved, 4> role = {{{a, twin_[a], hol_[a]},
                                {b, twin_[b], hol_[b]},
                                {c, twin_[c], hol_[c]},
                                {d, twin_[d], hol_[d]}}};
  // Frame change applied to each role's triangle: s1's frame is kept, s2's
  // old frame moves by holw.
  auto phi = [&](int r) { return r < 2 ? Word() : holw; };
  // New slots: s1 = [X->W (role c), W->Z (diagonal), Z->X (role b)],
  //            s2 = [W->Y (role d), Y->Z (role a), Z->W (diagonal twin)].
  auto new_id = [&](int r) {
    switch (r) {
      case 0: return 3 * s2 + 1;
      case 1: return 3 * s1 + 2;
      case 2: return 3 * s1;
      default: return 3 * s2;
    }
  };
  auto role_of = [&](int id) {
    if (id == a) return 0;
    if (id == b) return 1;
    if (id == c) return 2;
    if (id == d) return 3;
    return -1;
  };

  corner_[3 * s1] = X;
  corner_[3 * s1 + 1] = W;
  corner_[3 * s1 + 2] = Z;
  corner_[3 * s2] = W;
  corner_[3 * s2 + 1] = Y;
  corner_[3 * s2 + 2] = Z;
  cword_[3 * s1] = cwX;
  cword_[3 * s1 + 1] = cwW;
  cword_[3 * s1 + 2] = cwZ;
  cword_[3 * s2] = cwW;
  cword_[3 * s2 + 1] = cwY;
  cword_[3 * s2 + 2] = cwZ;

  twin_[3 * s1 + 1] = 3 * s2 + 2;
  twin_[3 * s2 + 2] = 3 * s1 + 1;
  hol_[3 * s1 + 1] = Word();
  hol_[3 * s2 + 2] = Word();

  for (int r = 0; r < 4; ++r) {
    int nid = new_id(r);
    int ot = role[r].twin;
    if (ot == h || ot == t) {
      fail(ErrorKind::DegenerateQuad, "quad side twinned to the flip edge");
    }
    int orole = role_of(ot);
    if (orole >= 0) {
      twin_[nid] = new_id(orole);
      hol_[nid] = phi(r) * role[r].hol * phi(orole).inverse();
    } else {
      twin_[nid] = ot;
      twin_[ot] = nid;
      hol_[nid] = phi(r) * role[r].hol;
      hol_[ot] = hol_[ot] * phi(r).inverse();
    }
  }

  return 3 * s1 + 1;
}

SurfaceTriangulation::FlipStats SurfaceTriangulation::make_delaunay(
    const Tolerances& tol, std::uint64_t cap,
    const std::function<void(const SurfaceTriangulation&)>& observer) {
  int H = num_halfedges();
  std::vector<char> queued(H, 0);
  std::deque<int> queue;
  auto push = [&](int h) {
    int id = std::min(h, twin_[h]);
    if (!queued[id]) {
      queued[id] = 1;
      queue.push_back(id);
    }
  };
  for (int h = 0; h < H; ++h) {
    if (h < twin_[h]) push(h);
  }

  FlipStats st;
  while (!queue.empty()) {
    st.max_queue = std::max(st.max_queue, static_cast<std::uint64_t>(queue.size()));
    int id = queue.front();
    queue.pop_front();
    queued[id] = 0;
    ++st.tests;
    if (locally_delaunay(id, tol.pred)) continue;
    if (st.flips >= cap) {
      fail(ErrorKind::IterationLimit, "flip budget exhausted");
    }
    int diag = flip(id);
    ++st.flips;
    if (observer) observer(*this);
    // The four edges around the flipped quad may have lost the property.
    int dt = twin_[diag];
    push(next(diag));
    push(prev(diag));
    push(next(dt));
    push(prev(dt));
  }
  return st;
}

void SurfaceTriangulation::check_invariants(const Tolerances& tol) const {
  int H = num_halfedges();
  auto entry_size = [](const Word& w) {
    return std::abs(w.iso().a()) + std::abs(w.iso().b());
  };
  for (int h = 0; h < H; ++h) {
    int t = twin_[h];
    if (t < 0 || t >= H || t == h || twin_[t] != h) {
      fail(ErrorKind::NumericFailure, "twin structure is not an involution");
    }
    if (tri(t) == tri(h)) {
      fail(ErrorKind::DegenerateQuad, "edge glued to its own triangle");
    }
    // Positions inherit roundoff that grows with the squared entry size of
    // the words that made them; a structural error displaces corners by
    // order-1 distances, far above this bound.
    double s = std::max({entry_size(cword_[h]), entry_size(cword_[t]),
                         entry_size(cword_[next(h)]),
                         entry_size(cword_[next(t)])});
    double cap = tol.geom * (1.0 + s * s);
    // hol_[h] maps the twin's copy of the edge onto this one, reversed.
    double e1 = dist(hol_[h].apply(corner_[next(t)]), corner_[h]);
    double e2 = dist(hol_[h].apply(corner_[t]), corner_[next(h)]);
    if (e1 > cap || e2 > cap) {
      fail(ErrorKind::NumericFailure, "holonomy does not glue the edge");
    }
    double err = dist(cword_[h].apply(base_), corner_[h]);
    if (err > cap) {
      fail(ErrorKind::NumericFailure, "corner word misplaces its corner");
    }
  }
  for (int t = 0; t < num_triangles(); ++t) {
    if (orientation(corner_[3 * t], corner_[3 * t + 1], corner_[3 * t + 2]) <=
        0.0) {
      fail(ErrorKind::NumericFailure, "triangle lift is not counterclockwise");
    }
  }
}

}  // namespace hypdom
