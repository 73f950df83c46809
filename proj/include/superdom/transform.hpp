#pragma once

// Rewrites a minimum super dominating set of a tree into one whose
// complement contains a chosen leaf, without changing its size. The
// rewrite walks alternating chains of complement vertices and their
// private guards down the tree rooted at the leaf.

#include <vector>

#include "superdom/graph.hpp"
#include "superdom/vertex_set.hpp"

namespace superdom {

struct RootedView {
  int root = -1;
  std::vector<int> parent;                 // parent[root] == -1
  std::vector<std::vector<int>> children;  // ascending ids

  static RootedView from(const Graph& tree, int root);
};

// Returns a set s' with |s'| == |s|, super dominating, and v outside s'.
// Preconditions: t is a tree, v is a leaf, s is a minimum super dominating
// set. Throws theorem_violation if the rewrite ever produces an invalid
// set; the harness reports that as a failed claim.
VertexSet normalize_for_leaf(const Graph& t, const VertexSet& s, int v);

// Convenience wrapper: normalizes the deterministic solver witness.
VertexSet exists_normalized(const Graph& t, int v);

}  // namespace superdom
