#pragma once

// Stage 1: reduce a fundamental polygon with n vertex orbits to a system of
// 4g loops through a single base point.
//
// The quotient graph has one node per vertex orbit and one edge per side
// pairing (weighted by side length). A minimum spanning tree is chosen; each
// of the 2g non-tree edges, traversed in either direction, determines a
// based loop: tree path from the root to the edge's tail, the edge itself,
// tree path from its head back to the root. Walking the polygon boundary
// counterclockwise and lifting each non-tree side's based loop into the
// developed tiling produces a closed chain of 4g polygonal paths through
// lifts of the base point; these are the sides of the intermediate polygon,
// recorded here together with the deck words t_k placing its junctions.

#include <array>
#include <cstdint>
#include <vector>

#include "hypdom/fundamental_polygon.hpp"

namespace hypdom {

struct GraphEdge {
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

class SurfaceGraph {
 public:
  SurfaceGraph() = default;
  SurfaceGraph(int num_nodes, std::vector<GraphEdge> edges);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const GraphEdge& edge(int e) const { return edges_[e]; }

  // Kruskal by (weight, index); throws InvalidTopology if disconnected.
  void build_tree();
  bool in_tree(int e) const { return tree_[e] != 0; }

  // `preferred` if it touches some non-tree edge, otherwise the lowest node
  // that does. Requires build_tree() first.
  int pick_root(int preferred) const;
  void root_at(int node);  // orient the tree; sets parent pointers
  int root() const { return root_; }
  int parent_edge(int node) const { return parent_edge_[node]; }

  struct Step {
    int edge = 0;
    int dir = +1;  // +1 traverses from->to, -1 the reverse
  };

  std::vector<Step> tree_path_to_root(int node) const;
  // Based loop for non-tree edge e in direction dir:
  // root -> tail, (e, dir), head -> root.
  std::vector<Step> pat(int e, int dir) const;

 private:
  int n_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<char> tree_;
  std::vector<int> parent_edge_;
  int root_ = -1;
};

// One side of the reduced polygon: the lifted chain realizing one based
// loop, from one base-point lift to the next.
struct LoopSide {
  int polygon_side = 0;            // the input side that spawned this loop
  std::vector<DiskPoint> chain;    // polyline; front/back are the junctions
  double chain_length = 0.0;
  double chord_length = 0.0;       // dist(front, back)
};

struct LoopSystem {
  DiskPoint basepoint;  // lift of the common base point, a polygon vertex
  int root_orbit = 0;
  int start_side = 0;

  std::vector<Word> table;     // t_0..t_{4g}; t_0 = id, t_{4g} resolves to +-id
  std::vector<LoopSide> sides;                // 4g entries
  std::vector<std::array<int, 2>> pairings;   // 2g entries, {k1, k2}, k1 < k2
  std::vector<Word> pairing_words;            // maps chord k2 onto chord k1
  std::vector<Word> side_words;               // per side: pairing word or inverse

  SurfaceGraph graph;               // quotient graph with its spanning tree
  std::uint64_t access_count = 0;   // star states examined while lifting
};

LoopSystem reduce_to_loops(const FundamentalPolygon& P, const Tolerances& tol);

}  // namespace hypdom
