#include "hypdom/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <utility>

namespace hypdom {

namespace {
constexpr double kPi = 3.14159265358979323846;

double corner_angle(DiskPoint at, DiskPoint u, DiskPoint v) {
  double d = wrap_angle(bearing(at, u) - bearing(at, v));
  return d > kPi ? 2.0 * kPi - d : d;
}

// Rewrite `target` as a short word in the generators. The star walk spells
// each side word through the whole walk history, and the resolved matrix of
// such a spelling carries the walk's accumulated roundoff; the group element
// itself only moves `x0` by a couple of domain diameters, so it has a short
// spelling whose matrix can be re-resolved from a handful of small factors.
// Best-first search on the left quotient: a state holds prefix and remainder
// with prefix * remainder = target, ordered by how far the remainder still
// moves x0. Distinct remainders send x0 to orbit points separated by the
// systole, so a coarse position grid deduplicates states. Falls back to the
// original spelling if the search fails.
Word respell(const Word& target, const std::vector<Isometry>& gens,
             DiskPoint x0) {
  int n = static_cast<int>(gens.size());
  if (n == 0 || target.empty()) return target;

  std::vector<Word> letters;
  letters.reserve(2 * n);
  for (int j = 0; j < n; ++j) {
    letters.emplace_back(Letter(j, false), gens[j]);
    letters.emplace_back(Letter(j, true), gens[j].inverse());
  }

  struct Node {
    double d = 0.0;  // dist(x0, rem(x0))
    Word prefix;
    Isometry rem;
  };
  auto worse = [](const Node& u, const Node& v) {
    return u.d > v.d ||
           (u.d == v.d && u.prefix.length() > v.prefix.length());
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);
  open.push({dist(x0, target.apply(x0)), Word(), target.iso()});

  auto key = [](DiskPoint p) {
    return std::make_pair(std::llround(p.re * 1e7),
                          std::llround(p.im * 1e7));
  };
  std::set<std::pair<long long, long long>> seen;

  // The identity is the only orbit point within the systole of x0, and the
  // walk spellings resolve their element to far better than that, so a
  // coarse acceptance threshold is unambiguous.
  constexpr double kAccept = 1e-2;
  constexpr int kMaxExpansions = 50000;
  constexpr int kMaxLen = 24;
  int expansions = 0;
  while (expansions < kMaxExpansions && !open.empty()) {
    Node cur = open.top();
    open.pop();
    if (!seen.insert(key(cur.rem.apply(x0))).second) continue;
    ++expansions;
    if (cur.d < kAccept) {
      if (cur.rem.near_identity(kAccept)) return cur.prefix;
      continue;
    }
    if (cur.prefix.length() >= kMaxLen) continue;
    for (const Word& l : letters) {
      Isometry rem = l.iso().inverse() * cur.rem;
      open.push({dist(x0, rem.apply(x0)), cur.prefix * l, rem});
    }
  }
  return target;
}
}  // namespace

DirichletDomain dualize(const SurfaceTriangulation& T,
                        const std::vector<Isometry>& generators,
                        const Tolerances& tol) {
  int N = T.num_halfedges();  // 12g - 6 wedges around the single vertex

  // Walk the star of the vertex lift at corner(0): state (h, w) has
  // w(corner(h)) at the center; crossing the incoming edge prev(h) moves to
  // the neighboring wedge counterclockwise.
  std::vector<int> hs;
  std::vector<Word> ws;
  hs.reserve(N);
  ws.reserve(N);
  std::vector<char> seen(N, 0);
  int h = 0;
  Word w;
  double walk_size = 1.0;  // largest entry size seen along the walk
  for (int i = 0; i < N; ++i) {
    if (seen[h]) {
      fail(ErrorKind::NonClosingStar, "vertex star revisited a wedge early");
    }
    seen[h] = 1;
    hs.push_back(h);
    ws.push_back(w);
    int b = SurfaceTriangulation::prev(h);
    w = w * T.holonomy(b);
    walk_size = std::max(walk_size, std::abs(w.iso().a()) + std::abs(w.iso().b()));
    h = T.twin(b);
  }
  // Roundoff accumulated over the walk scales with the intermediate entry
  // sizes; a wrong walk would leave a genuine deck element here (defect of
  // order one), so the conditioned cap still separates cleanly.
  double walk_cap = tol.norm * (1.0 + N * walk_size * walk_size);
  if (h != 0 || !w.iso().near_identity(walk_cap)) {
    fail(ErrorKind::NonClosingStar, "vertex star did not close up");
  }

  DiskPoint center = T.corner(0);
  double angle_sum = 0.0;
  for (int i = 0; i < N; ++i) {
    int hi = hs[i];
    angle_sum += corner_angle(T.corner(hi),
                              T.corner(SurfaceTriangulation::next(hi)),
                              T.corner(SurfaceTriangulation::prev(hi)));
  }
  if (std::abs(angle_sum - 2.0 * kPi) > tol.angle) {
    fail(ErrorKind::AngleSum,
         "angle around the vertex is " + std::to_string(angle_sum));
  }

  // Dual vertices: circumcenters of the wedges' triangles, brought into the
  // central frame. Dual side i runs from cc_i to cc_{i+1} on the bisector
  // between the center and the site across the crossed primal edge.
  std::vector<DiskPoint> tri_cc(T.num_triangles());
  for (int t = 0; t < T.num_triangles(); ++t) {
    tri_cc[t] = circumcenter(T.corner(3 * t), T.corner(3 * t + 1),
                             T.corner(3 * t + 2));
  }
  std::vector<DiskPoint> cc(N);
  std::vector<Word> gamma(N);
  Word center_word_inv = T.corner_word(0).inverse();
  // Coordinate roundoff reads as a hyperbolic residual amplified by the
  // metric factor at the point under test; a wrong site would sit a whole
  // systole away, far above these caps.
  double coord_err = tol.norm * N * walk_size * walk_size;
  auto position_cap = [&](DiskPoint at) {
    return tol.geom + coord_err * 2.0 / (1.0 - at.abs2());
  };
  for (int i = 0; i < N; ++i) {
    cc[i] = ws[i].apply(tri_cc[SurfaceTriangulation::tri(hs[i])]);
    int b = SurfaceTriangulation::prev(hs[i]);
    Word omega = ws[i] * T.corner_word(b);
    gamma[i] = respell(omega * center_word_inv, generators, center);
    DiskPoint site = ws[i].apply(T.corner(b));
    if (dist(gamma[i].apply(center), site) > position_cap(site)) {
      fail(ErrorKind::WordMismatch, "side word does not reproduce its site");
    }
  }

  // Merge runs of coincident circumcenters (more than three cocircular
  // sites); a dual side survives when its endpoints stay distinct.
  std::vector<int> kept;
  for (int i = 0; i < N; ++i) {
    if (dist(cc[i], cc[(i + 1) % N]) > tol.merge) kept.push_back(i);
  }
  int M = static_cast<int>(kept.size());
  if (M < 4 * T.genus()) {
    fail(ErrorKind::DegenerateCell,
         "dual cell kept only " + std::to_string(M) + " sides");
  }

  DirichletDomain D;
  D.genus = T.genus();
  D.center = center;
  D.vertices.resize(M);
  D.side_words.resize(M);
  for (int j = 0; j < M; ++j) {
    // Vertex j: first circumcenter after the previous surviving crossing.
    int prev_kept = kept[(j + M - 1) % M];
    D.vertices[j] = cc[(prev_kept + 1) % N];
    D.side_words[j] = gamma[kept[j]];
  }

  // Refine: each cell vertex is equidistant from the center and its two
  // adjacent sites by construction, so the circumcenter of those three
  // points re-derives it from the respelled words alone, shedding the
  // position drift the star walk accumulated.
  for (int j = 0; j < M; ++j) {
    DiskPoint s_prev = D.side_words[(j + M - 1) % M].apply(center);
    DiskPoint s_next = D.side_words[j].apply(center);
    DiskPoint refined = circumcenter(center, s_prev, s_next);
    if (dist(refined, D.vertices[j]) > position_cap(refined)) {
      fail(ErrorKind::WordMismatch,
           "dual vertex is not the circumcenter of its sites");
    }
    D.vertices[j] = refined;
  }

  // Pair the sides: the partner is the unique side whose word composes with
  // this one to (+-)identity and whose endpoints map onto this side reversed.
  D.partner.assign(M, -1);
  for (int j = 0; j < M; ++j) {
    for (int k = 0; k < M; ++k) {
      if (k == j && M > 1) {
        // a side cannot be its own partner: the word would be an involution
        continue;
      }
      const Isometry& wj = D.side_words[j].iso();
      const Isometry& wk = D.side_words[k].iso();
      Isometry prod = wj * wk;
      // roundoff in the product scales with the factor norms, so identity
      // and endpoint tests at fixed tolerance would misfire on words with
      // large entries; wrong candidates miss by order-1 distances either way
      double sj = std::abs(wj.a()) + std::abs(wj.b());
      double sk = std::abs(wk.a()) + std::abs(wk.b());
      if (!prod.near_identity(tol.norm * (1.0 + sj * sk))) continue;
      double cap = tol.geom * (1.0 + sj * sj);
      DiskPoint a2 = D.vertices[k];
      DiskPoint b2 = D.vertices[(k + 1) % M];
      if (dist(D.side_words[j].apply(a2), D.vertices[(j + 1) % M]) > cap)
        continue;
      if (dist(D.side_words[j].apply(b2), D.vertices[j]) > cap) continue;
      if (D.partner[j] >= 0) {
        fail(ErrorKind::WordMismatch, "dual side has two matching partners");
      }
      D.partner[j] = k;
    }
    if (D.partner[j] < 0) {
      fail(ErrorKind::WordMismatch, "dual side has no matching partner");
    }
  }
  for (int j = 0; j < M; ++j) {
    if (D.partner[j] == j || D.partner[D.partner[j]] != j) {
      fail(ErrorKind::WordMismatch, "dual side pairing is not an involution");
    }
  }

  // A glued pair carries one group element and its inverse. Resolving the
  // two spellings independently leaves the stored matrices inverse only up
  // to roundoff that grows with their entry sizes, so keep the shorter
  // spelling of each pair and store its exact inverse (conj(a), -b) for the
  // partner, then re-derive the vertices from the final words.
  for (int j = 0; j < M; ++j) {
    int p = D.partner[j];
    if (p < j) continue;
    if (D.side_words[p].length() < D.side_words[j].length()) {
      D.side_words[j] = D.side_words[p].inverse();
    } else {
      D.side_words[p] = D.side_words[j].inverse();
    }
  }
  for (int j = 0; j < M; ++j) {
    DiskPoint s_prev = D.side_words[(j + M - 1) % M].apply(center);
    DiskPoint s_next = D.side_words[j].apply(center);
    DiskPoint refined = circumcenter(center, s_prev, s_next);
    if (dist(refined, D.vertices[j]) > position_cap(refined)) {
      fail(ErrorKind::WordMismatch,
           "dual vertex is not the circumcenter of its sites");
    }
    D.vertices[j] = refined;
  }

  // Deterministic orientation: rotate so the lexicographically least side
  // word string comes first, whole-sequence comparison breaking ties.
  std::vector<std::string> names(M);
  for (int j = 0; j < M; ++j) names[j] = D.side_words[j].str();
  int best = 0;
  for (int r = 1; r < M; ++r) {
    for (int i = 0; i < M; ++i) {
      const std::string& a = names[(r + i) % M];
      const std::string& b = names[(best + i) % M];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  if (best != 0) {
    std::rotate(D.vertices.begin(), D.vertices.begin() + best, D.vertices.end());
    std::rotate(D.side_words.begin(), D.side_words.begin() + best,
                D.side_words.end());
    std::rotate(D.partner.begin(), D.partner.begin() + best, D.partner.end());
    for (int& p : D.partner) p = (p + M - best) % M;
  }

  Polygon poly = D.polygon();
  if (!poly.is_ccw()) {
    fail(ErrorKind::NumericFailure, "dual cell is not counterclockwise");
  }
  D.area = poly.area();
  D.perimeter = poly.perimeter();
  return D;
}

SampleCheck sample_check(const DirichletDomain& D, int samples, double tol,
                         std::uint64_t seed) {
  Polygon poly = D.polygon();

  std::vector<Isometry> cands;
  auto add = [&](const Isometry& g) {
    if (g.near_identity(1e-9)) return;
    for (const Isometry& c : cands) {
      if (Isometry::near(c, g, 1e-9)) return;
    }
    cands.push_back(g);
  };
  for (const Word& w : D.side_words) add(w.iso());
  for (const Word& u : D.side_words) {
    for (const Word& v : D.side_words) {
      add(u.iso() * v.iso());
    }
  }
  std::vector<DiskPoint> translates;
  translates.reserve(cands.size());
  for (const Isometry& g : cands) translates.push_back(g.apply(D.center));

  double min_x = 1.0, max_x = -1.0, min_y = 1.0, max_y = -1.0;
  for (const DiskPoint& v : D.vertices) {
    Complex k = poincare_to_klein(v);
    min_x = std::min(min_x, k.real());
    max_x = std::max(max_x, k.real());
    min_y = std::min(min_y, k.imag());
    max_y = std::max(max_y, k.imag());
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(min_x, max_x), uy(min_y, max_y);

  SampleCheck out;
  out.samples = samples;
  long long attempts = 0, limit = 1000LL * samples + 1000;
  int got = 0;
  while (got < samples) {
    if (++attempts > limit) {
      fail(ErrorKind::NumericFailure, "rejection sampling starved");
    }
    Complex k(ux(rng), uy(rng));
    if (std::norm(k) >= 1.0) continue;
    DiskPoint p = klein_to_poincare(k);
    if (!poly.contains(p)) continue;
    ++got;
    double dc = dist(D.center, p);
    bool violated = false;
    for (const DiskPoint& t : translates) {
      double excess = dc - dist(t, p);
      out.worst_excess = std::max(out.worst_excess, excess);
      if (excess > tol) violated = true;
    }
    if (violated) ++out.violations;
  }
  return out;
}

}  // namespace hypdom
