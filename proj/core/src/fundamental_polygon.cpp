#include "hypdom/fundamental_polygon.hpp"

#include <cmath>
#include <deque>
#include <numeric>

namespace hypdom {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FundamentalPolygon::FundamentalPolygon(std::vector<DiskPoint> vertices,
                                       std::vector<std::array<int, 2>> pairings,
                                       std::vector<Isometry> generators,
                                       const Tolerances& tol)
    : poly_(std::move(vertices)), tol_(tol) {
  int n_sides = poly_.size();
  int m = static_cast<int>(pairings.size());
  if (n_sides != 2 * m) {
    fail(ErrorKind::NotMatching,
         "need " + std::to_string(n_sides) + " sides split into pairs, got " +
             std::to_string(m) + " pairings");
  }

  // Matching: every side in exactly one pair, no side paired with itself.
  sides_.assign(n_sides, SideRecord{});
  std::vector<int> seen(n_sides, 0);
  for (int p = 0; p < m; ++p) {
    int a = pairings[p][0], b = pairings[p][1];
    if (a < 0 || a >= n_sides || b < 0 || b >= n_sides) {
      fail(ErrorKind::InvalidInput, "pairing index out of range");
    }
    if (a == b) fail(ErrorKind::NotMatching, "side paired with itself");
    if (a > b) std::swap(a, b);
    if (seen[a]++ || seen[b]++) {
      fail(ErrorKind::NotMatching, "side appears in two pairings");
    }
    sides_[a] = SideRecord{a, (a + 1) % n_sides, b, p, true};
    sides_[b] = SideRecord{b, (b + 1) % n_sides, a, p, false};
  }

  if (!poly_.is_ccw()) {
    fail(ErrorKind::InvalidInput, "polygon must be counterclockwise");
  }
  if (!poly_.is_simple(tol_.pred)) {
    fail(ErrorKind::SelfIntersecting, "polygon boundary crosses itself");
  }

  // Generators: pair p's generator maps side b onto side a with the boundary
  // orientation reversed (source of b -> target of a). Derive when absent.
  auto rep_of = [&](int p) {
    int a = pairings[p][0], b = pairings[p][1];
    return std::min(a, b);
  };
  if (generators.empty()) {
    generators.reserve(m);
    for (int p = 0; p < m; ++p) {
      int a = rep_of(p);
      int b = sides_[a].pair;
      // mapping_segment throws LengthMismatch when the sides differ.
      generators.push_back(Isometry::mapping_segment(
          poly_.vertex(b), poly_.vertex(b + 1), poly_.vertex(a + 1),
          poly_.vertex(a), tol_.geom));
    }
  } else if (static_cast<int>(generators.size()) != m) {
    fail(ErrorKind::InvalidInput, "generator count differs from pairing count");
  }
  generators_ = std::move(generators);

  // Every generator must realize its gluing exactly (within tolerance).
  for (int p = 0; p < m; ++p) {
    int a = rep_of(p);
    int b = sides_[a].pair;
    double la = poly_.side_length(a), lb = poly_.side_length(b);
    if (std::abs(la - lb) > tol_.geom) {
      fail(ErrorKind::LengthMismatch,
           "paired sides " + std::to_string(a) + "," + std::to_string(b) +
               " have lengths differing by " + std::to_string(std::abs(la - lb)));
    }
    const Isometry& g = generators_[p];
    double e1 = dist(g.apply(poly_.vertex(b)), poly_.vertex(a + 1));
    double e2 = dist(g.apply(poly_.vertex(b + 1)), poly_.vertex(a));
    if (e1 > tol_.geom || e2 > tol_.geom) {
      fail(ErrorKind::OpenPolygon,
           "generator " + std::to_string(p) + " misses its side by " +
               std::to_string(std::max(e1, e2)));
    }
  }

  // Vertex orbits and words. Pair p with sides (a,b), a<b, glues
  // v_b ~ v_{a+1} and v_{b+1} ~ v_a; the letter p maps the former onto the
  // latter in each relation. BFS from each unvisited lowest vertex.
  verts_.assign(n_sides, VertexRecord{});
  for (int v = 0; v < n_sides; ++v) {
    verts_[v].pos = poly_.vertex(v);
    verts_[v].orbit = -1;
  }
  struct Relation {
    int from, to;  // letter maps pos(from) to pos(to)
    Word word;
  };
  std::vector<std::vector<Relation>> adj(n_sides);
  for (int p = 0; p < m; ++p) {
    int a = rep_of(p);
    int b = sides_[a].pair;
    int bt = (b + 1) % n_sides, at = (a + 1) % n_sides;
    adj[b].push_back({b, at, letter(p)});
    adj[at].push_back({at, b, letter(p, true)});
    adj[bt].push_back({bt, a, letter(p)});
    adj[a].push_back({a, bt, letter(p, true)});
  }
  num_orbits_ = 0;
  for (int v0 = 0; v0 < n_sides; ++v0) {
    if (verts_[v0].orbit >= 0) continue;
    int orbit = num_orbits_++;
    verts_[v0].orbit = orbit;
    verts_[v0].rep = v0;
    verts_[v0].word = Word();
    std::deque<int> queue{v0};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Relation& r : adj[v]) {
        if (verts_[r.to].orbit >= 0) continue;
        verts_[r.to].orbit = orbit;
        verts_[r.to].rep = v0;
        verts_[r.to].word = r.word * verts_[v].word;
        queue.push_back(r.to);
      }
    }
  }
  for (int v = 0; v < n_sides; ++v) {
    double err = dist(verts_[v].word.apply(verts_[verts_[v].rep].pos),
                      verts_[v].pos);
    if (err > tol_.geom) {
      fail(ErrorKind::OpenPolygon,
           "vertex " + std::to_string(v) + " word misplaces it by " +
               std::to_string(err));
    }
  }

  // Euler characteristic of the closed surface: n - m + 1 = 2 - 2g.
  int twice_genus = m - num_orbits_ + 1;
  if (twice_genus % 2 != 0 || twice_genus < 4) {
    fail(ErrorKind::InvalidTopology,
         "orbits=" + std::to_string(num_orbits_) + ", pairings=" +
             std::to_string(m) + " is not a closed surface of genus >= 2");
  }
  genus_ = twice_genus / 2;

  for (int orbit = 0; orbit < num_orbits_; ++orbit) {
    double s = orbit_angle_sum(orbit);
    if (std::abs(s - 2.0 * kPi) > tol_.angle) {
      fail(ErrorKind::AngleSum,
           "vertex orbit " + std::to_string(orbit) + " has angle sum " +
               std::to_string(s));
    }
  }
}

Word FundamentalPolygon::letter(int pairing, bool inverse) const {
  const Isometry& g = generators_[pairing];
  return Word(Letter(pairing, inverse), inverse ? g.inverse() : g);
}

Word FundamentalPolygon::mu(int k) const {
  // The letter maps the partner of the representative side onto it; for the
  // partner itself the inverse letter does the job.
  return letter(sides_[k].pairing, /*inverse=*/!sides_[k].is_rep);
}

double FundamentalPolygon::orbit_angle_sum(int orbit) const {
  double s = 0.0;
  for (int v = 0; v < num_sides(); ++v) {
    if (verts_[v].orbit == orbit) s += poly_.interior_angle(v);
  }
  return s;
}

DiskPoint FundamentalPolygon::star_anchor(const StarState& s) const {
  int v = (s.end == End::Source) ? sides_[s.side].source : sides_[s.side].target;
  return s.word.apply(poly_.vertex(v));
}

StarState FundamentalPolygon::star_next(const StarState& s) const {
  // Rotating counterclockwise about the anchor: inside one polygon copy the
  // outgoing ray of side x is followed by the incoming ray of the previous
  // side; crossing that side switches to the glued copy.
  int n = num_sides();
  if (s.end == End::Source) {
    return StarState{(s.side + n - 1) % n, End::Target, s.word};
  }
  return StarState{sides_[s.side].pair, End::Source, s.word * mu(s.side)};
}

std::vector<StarState> FundamentalPolygon::vertex_star(int side, End end) const {
  std::vector<StarState> out;
  StarState s{side, end, Word()};
  int cap = 4 * num_sides() + 4;
  for (int iter = 0; iter < cap; ++iter) {
    out.push_back(s);
    s = star_next(s);
    if (s.side == side && s.end == end) {
      if (!s.word.iso().near_identity(tol_.geom)) {
        fail(ErrorKind::NonClosingStar,
             "vertex star closes combinatorially but the word is not +-id");
      }
      return out;
    }
  }
  fail(ErrorKind::NonClosingStar, "vertex star did not close");
}

}  // namespace hypdom
