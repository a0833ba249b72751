#include "hypdom/loop_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypdom {

SurfaceGraph::SurfaceGraph(int num_nodes, std::vector<GraphEdge> edges)
    : n_(num_nodes),
      edges_(std::move(edges)),
      tree_(edges_.size(), 0),
      parent_edge_(static_cast<std::size_t>(n_), -1) {
  for (const GraphEdge& e : edges_) {
    if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_) {
      fail(ErrorKind::InvalidInput, "graph edge endpoint out of range");
    }
  }
}

void SurfaceGraph::build_tree() {
  std::vector<int> order(edges_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return edges_[a].weight < edges_[b].weight;
  });

  std::vector<int> uf(static_cast<std::size_t>(n_));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };

  std::fill(tree_.begin(), tree_.end(), 0);
  int joined = 0;
  for (int e : order) {
    int ra = find(edges_[e].from), rb = find(edges_[e].to);
    if (ra == rb) continue;
    uf[ra] = rb;
    tree_[e] = 1;
    ++joined;
  }
  if (joined != n_ - 1) {
    fail(ErrorKind::InvalidTopology, "quotient graph is disconnected");
  }
}

int SurfaceGraph::pick_root(int preferred) const {
  auto touches_nontree = [&](int node) {
    for (int e = 0; e < num_edges(); ++e) {
      if (!tree_[e] && (edges_[e].from == node || edges_[e].to == node)) {
        return true;
      }
    }
    return false;
  };
  if (preferred >= 0 && preferred < n_ && touches_nontree(preferred)) {
    return preferred;
  }
  for (int v = 0; v < n_; ++v) {
    if (touches_nontree(v)) return v;
  }
  fail(ErrorKind::InvalidTopology, "no non-tree edge in the quotient graph");
}

void SurfaceGraph::root_at(int node) {
  root_ = node;
  parent_edge_.assign(static_cast<std::size_t>(n_), -1);
  std::vector<char> done(static_cast<std::size_t>(n_), 0);
  done[node] = 1;
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e = 0; e < num_edges(); ++e) {
      if (!tree_[e]) continue;
      int other = -1;
      if (edges_[e].from == v) other = edges_[e].to;
      else if (edges_[e].to == v) other = edges_[e].from;
      else continue;
      if (done[other]) continue;
      done[other] = 1;
      parent_edge_[other] = e;
      stack.push_back(other);
    }
  }
}

std::vector<SurfaceGraph::Step> SurfaceGraph::tree_path_to_root(int node) const {
  std::vector<Step> path;
  int x = node;
  while (x != root_) {
    int e = parent_edge_[x];
    if (e < 0) fail(ErrorKind::InvalidTopology, "tree is not rooted");
    int dir = (edges_[e].from == x) ? +1 : -1;
    path.push_back({e, dir});
    x = (dir > 0) ? edges_[e].to : edges_[e].from;
  }
  return path;
}

std::vector<SurfaceGraph::Step> SurfaceGraph::pat(int e, int dir) const {
  if (tree_[e]) fail(ErrorKind::InvalidInput, "pat of a tree edge");
  int tail = (dir > 0) ? edges_[e].from : edges_[e].to;
  int head = (dir > 0) ? edges_[e].to : edges_[e].from;

  std::vector<Step> out;
  auto to_root = tree_path_to_root(tail);  // tail -> root; reverse and flip
  for (auto it = to_root.rbegin(); it != to_root.rend(); ++it) {
    out.push_back({it->edge, -it->dir});
  }
  out.push_back({e, dir});
  auto back = tree_path_to_root(head);
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

LoopSystem reduce_to_loops(const FundamentalPolygon& P, const Tolerances& tol) {
  int n_sides = P.num_sides();
  int m = P.num_pairings();
  int g = P.genus();

  // Quotient graph: a node per vertex orbit, an edge per pairing, canonical
  // direction along the representative side, weighted by its length.
  std::vector<int> rep_side(m, -1);
  for (int s = 0; s < n_sides; ++s) {
    if (P.side(s).is_rep) rep_side[P.side(s).pairing] = s;
  }
  std::vector<GraphEdge> gedges(m);
  for (int p = 0; p < m; ++p) {
    int s = rep_side[p];
    gedges[p] = GraphEdge{P.vertex(P.side(s).source).orbit,
                          P.vertex(P.side(s).target).orbit,
                          P.polygon().side_length(s)};
  }

  LoopSystem L;
  L.graph = SurfaceGraph(P.num_orbits(), std::move(gedges));
  L.graph.build_tree();
  int root = L.graph.pick_root(P.vertex(0).orbit);
  L.graph.root_at(root);
  L.root_orbit = root;

  // Start at the lowest-index non-tree pairing touching the root, on the
  // side whose source vertex sits in the root orbit (both do for a loop
  // edge; the representative side wins then).
  int start_side = -1;
  for (int p = 0; p < m && start_side < 0; ++p) {
    if (L.graph.in_tree(p)) continue;
    const GraphEdge& e = L.graph.edge(p);
    if (e.from != root && e.to != root) continue;
    int a = rep_side[p];
    int b = P.side(a).pair;
    if (P.vertex(P.side(a).source).orbit == root) start_side = a;
    else if (P.vertex(P.side(b).source).orbit == root) start_side = b;
  }
  if (start_side < 0) {
    fail(ErrorKind::InvalidTopology, "no usable non-tree side at the root");
  }
  L.start_side = start_side;
  L.basepoint = P.polygon().vertex(start_side);

  // Non-tree sides in boundary order starting at start_side; each one
  // contributes one loop (one side of the reduced polygon).
  std::vector<int> walk_sides;
  for (int i = 0; i < n_sides; ++i) {
    int s = (start_side + i) % n_sides;
    if (!L.graph.in_tree(P.side(s).pairing)) walk_sides.push_back(s);
  }
  if (static_cast<int>(walk_sides.size()) != 4 * g) {
    fail(ErrorKind::InvalidTopology, "non-tree side count is not 4g");
  }

  Word rebase = P.vertex(P.side(start_side).source).word.inverse();

  L.table.reserve(4 * g + 1);
  L.table.emplace_back();  // t_0 = id

  // The lifting walk. `state` is the edge-end we arrived on (inclusive
  // search start: an immediate backtrack re-traverses the same side copy),
  // `cur` the current lift of the base point's orbit vertex.
  StarState state{start_side, End::Source, Word()};
  DiskPoint cur = L.basepoint;
  const int search_cap = 4 * n_sides + 4;

  for (int s : walk_sides) {
    int p = P.side(s).pairing;
    int dir = P.side(s).is_rep ? +1 : -1;

    LoopSide side;
    side.polygon_side = s;
    side.chain.push_back(cur);

    for (const SurfaceGraph::Step& step : L.graph.pat(p, dir)) {
      StarState c = state;
      bool found = false;
      for (int it = 0; it < search_cap; ++it) {
        ++L.access_count;
        const SideRecord& rec = P.side(c.side);
        if (rec.pairing == step.edge) {
          int sigma = ((c.end == End::Source) ? +1 : -1) * (rec.is_rep ? +1 : -1);
          if (sigma == step.dir) {
            found = true;
            break;
          }
        }
        c = P.star_next(c);
      }
      if (!found) {
        fail(ErrorKind::LiftNotFound,
             "no side copy realizes quotient edge " +
                 std::to_string(step.edge) + " at the current vertex");
      }
      // Traverse the candidate side away from the current vertex.
      const SideRecord& rec = P.side(c.side);
      int to_vertex = (c.end == End::Source) ? rec.target : rec.source;
      DiskPoint next_pos = c.word.apply(P.polygon().vertex(to_vertex));
      side.chain_length += dist(cur, next_pos);
      side.chain.push_back(next_pos);
      cur = next_pos;
      state = StarState{
          c.side, c.end == End::Source ? End::Target : End::Source, c.word};
    }

    side.chord_length = dist(side.chain.front(), side.chain.back());
    L.sides.push_back(std::move(side));

    // Junction word: current copy word times the vertex word, rebased to
    // the base point.
    int v_now = (state.end == End::Source) ? P.side(state.side).source
                                           : P.side(state.side).target;
    if (P.vertex(v_now).orbit != root) {
      fail(ErrorKind::WordMismatch, "loop did not land in the root orbit");
    }
    Word t = state.word * P.vertex(v_now).word * rebase;
    if (dist(t.apply(L.basepoint), cur) > tol.geom) {
      fail(ErrorKind::WordMismatch,
           "junction word disagrees with the lifted chain endpoint");
    }
    L.table.push_back(std::move(t));
  }

  if (!L.table.back().iso().near_identity(tol.geom)) {
    fail(ErrorKind::WordMismatch, "loop walk failed to close up");
  }

  // Pairings of the reduced polygon: both sides of a non-tree pairing occur
  // exactly once in the walk; the pairing word maps chord k2 onto chord k1
  // reversed, with a second spelling as a consistency check.
  std::vector<std::array<int, 2>> pairs;
  {
    std::vector<int> first_at(m, -1);
    for (int k = 0; k < static_cast<int>(walk_sides.size()); ++k) {
      int p = P.side(walk_sides[k]).pairing;
      if (first_at[p] < 0) {
        first_at[p] = k;
      } else {
        pairs.push_back({first_at[p], k});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  if (static_cast<int>(pairs.size()) != 2 * g) {
    fail(ErrorKind::InvalidTopology, "reduced pairing count is not 2g");
  }

  L.side_words.assign(4 * g, Word());
  auto entry_size = [&](int k) {
    const Isometry& t = L.table[k].iso();
    return std::abs(t.a()) + std::abs(t.b());
  };
  for (const auto& pr : pairs) {
    int k1 = pr[0], k2 = pr[1];
    Word gamma = L.table[k1 + 1] * L.table[k2].inverse();
    Word cross = L.table[k1] * L.table[k2 + 1].inverse();
    // roundoff in each product scales with the product of its factor norms
    double scale = std::max(entry_size(k1 + 1) * entry_size(k2),
                            entry_size(k1) * entry_size(k2 + 1));
    if (!Isometry::near(gamma.iso(), cross.iso(), tol.norm * (1.0 + scale))) {
      fail(ErrorKind::WordMismatch,
           "the two spellings of a reduced pairing disagree");
    }
    L.pairings.push_back(pr);
    L.pairing_words.push_back(gamma);
    L.side_words[k1] = gamma;
    L.side_words[k2] = gamma.inverse();
  }

  return L;
}

}  // namespace hypdom
