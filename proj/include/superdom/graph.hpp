#pragma once

// Immutable simple graph on dense 0-based vertex ids, plus the structural
// queries and constructions the rest of the toolkit is built on. Mutating
// constructions (subdivision, corona, pendant attachment) return fresh
// graphs, so values can be shared freely across worker threads.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "superdom/vertex_set.hpp"

namespace superdom {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  // Validates ids, self-loops and duplicates; edges are stored normalized
  // (u < v) and sorted lexicographically.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  const VertexSet& neighbor_set(int v) const { return nbr_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  // Open neighborhoods as single words; only valid when n <= 64.
  std::uint64_t neighbor_mask(int v) const { return nbr_.at(v).mask64(); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> nbr_;
};

// Convenience shapes used all over the tests and the CLI.
Graph path_graph(int n);
Graph star_graph(int leaf_count);  // K_{1,k}: vertex 0 is the center
Graph single_vertex();

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

VertexSet leaves(const Graph& g);
VertexSet supports(const Graph& g);
VertexSet strong_supports(const Graph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

// Max pairwise distance; requires a connected graph.
int diameter(const Graph& g);

// One diametral path, deterministic (double-BFS on trees, eccentricity
// sweep otherwise). Requires a connected graph.
std::vector<int> longest_path(const Graph& g);

// Splices one fresh vertex into each listed edge; new ids are appended in
// list order. Rejects duplicates and edges not present in g.
Graph subdivide(const Graph& g, const std::vector<Edge>& es);

// Attaches one new pendant leaf to every vertex of h.
Graph corona(const Graph& h);

// Attaches a single new leaf (id n) to vertex v.
Graph add_pendant(const Graph& g, int v);

// Complete isomorphism key for trees: the AHU encoding rooted at the
// centroid, taking the lexicographically smaller encoding when the
// centroid is an edge. Two trees get the same string iff isomorphic.
std::string canonical_form(const Graph& g);

// Vertices reachable from `from` when the edge (avoid_u, avoid_v) is
// treated as absent.
VertexSet side_of_edge(const Graph& g, int avoid_u, int avoid_v, int from);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_old;  // new id -> old id, ascending
};

// Subgraph induced by `keep`, with vertices renumbered in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Edge-list text format: first non-comment line "n m", then m lines "u v";
// lines whose first non-blank character is '#' are comments.
Graph parse_edge_list(const std::string& text);
Graph parse_edge_list(std::istream& in);
std::string emit_edge_list(const Graph& g);

}  // namespace superdom
