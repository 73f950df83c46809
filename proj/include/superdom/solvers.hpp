#pragma once

// Exact solvers for the domination, total domination and super domination
// numbers, plus the private-neighbor structures attached to a super
// dominating set. Everything is deterministic: subsets are enumerated in
// ascending bit-set order and the first feasible witness wins.

#include <atomic>
#include <vector>

#include "superdom/graph.hpp"
#include "superdom/vertex_set.hpp"

namespace superdom {

namespace testing {
// Deliberately weakens the private-neighbor test so the verification
// harness can prove it notices broken solvers. Never enable outside tests.
inline std::atomic<bool> fault_relaxed_private_check{false};
}  // namespace testing

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_total_dominating(const Graph& g, const VertexSet& d);

// True iff every vertex u outside s has a neighbor v in s whose only
// neighbor outside s is u.
bool is_super_dominating(const Graph& g, const VertexSet& s);

int gamma(const Graph& g);
int gamma_t(const Graph& g);
int gamma_sp(const Graph& g);

VertexSet gamma_witness(const Graph& g);
VertexSet gamma_t_witness(const Graph& g);
VertexSet gamma_sp_witness(const Graph& g);

// Every minimum super dominating set, ascending by bit-set value.
// Exponential; refuses instances beyond the enumeration budget.
std::vector<VertexSet> all_gamma_sp_sets(const Graph& g);

struct SpSetAnalysis {
  VertexSet s;
  VertexSet sbar;
  // epn[u] is nonempty exactly for u outside s: the vertices of s whose
  // single neighbor outside s is u.
  std::vector<VertexSet> epn;
  VertexSet p_set;  // union of all epn[u]
  VertexSet q_set;  // vertices outside s with exactly one private guard
  VertexSet u_set;  // the guards of the q_set vertices
};

SpSetAnalysis analyze_sp_set(const Graph& g, const VertexSet& s);

}  // namespace superdom
