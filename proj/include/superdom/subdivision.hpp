#pragma once

// Subdivision number of the super domination value on trees, and the
// Class 1 / Class 2 split that comes with it. Every candidate edge (then
// every pair) is tried in lexicographic order; the first witness wins.

#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

enum class TreeClass { Class1 = 1, Class2 = 2 };

struct SubdivisionResult {
  int base_gamma_sp = 0;
  int sd = 0;  // 1 or 2
  std::vector<Edge> witness_edges;
  TreeClass class_label = TreeClass::Class1;
};

// True iff subdividing some single edge raises the super domination
// number. Class 1 trees are exactly these; Class 2 trees are the rest.
bool single_subdivision_raises(const Graph& t);

// Smallest number of edge subdivisions that raises the super domination
// number, searching singles then pairs. Throws theorem_violation when no
// pair suffices (stars K_{1,k} with k >= 3 are such trees: only
// subdividing all k edges raises the value).
SubdivisionResult sd_gamma_sp(const Graph& t);

// Subdivides the second and third edges of the deterministic longest path
// and reports whether that alone raises the value. Requires diameter >= 4.
bool thm31_pair_check(const Graph& t);

}  // namespace superdom
