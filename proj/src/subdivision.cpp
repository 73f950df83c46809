#include "superdom/subdivision.hpp"

#include <stdexcept>

#include "superdom/errors.hpp"
#include "superdom/solvers.hpp"

namespace superdom {

bool single_subdivision_raises(const Graph& t) {
  if (!is_tree(t) || t.n() < 2)
    throw std::invalid_argument("subdivision number requires a tree of order at least 2");
  const int base = gamma_sp(t);
  for (const Edge& e : t.edges())
    if (gamma_sp(subdivide(t, {e})) > base) return true;
  return false;
}

SubdivisionResult sd_gamma_sp(const Graph& t) {
  if (!is_tree(t) || t.n() < 2)
    throw std::invalid_argument("subdivision number requires a tree of order at least 2");
  SubdivisionResult r;
  r.base_gamma_sp = gamma_sp(t);
  const auto& es = t.edges();
  for (const Edge& e : es) {
    if (gamma_sp(subdivide(t, {e})) > r.base_gamma_sp) {
      r.sd = 1;
      r.witness_edges = {e};
      r.class_label = TreeClass::Class1;
      return r;
    }
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (gamma_sp(subdivide(t, {es[i], es[j]})) > r.base_gamma_sp) {
        r.sd = 2;
        r.witness_edges = {es[i], es[j]};
        r.class_label = TreeClass::Class2;
        return r;
      }
    }
  }
  throw theorem_violation("no pair of edge subdivisions raises the super domination number");
}

bool thm31_pair_check(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("construction inapplicable");
  if (diameter(t) < 4) throw std::invalid_argument("construction inapplicable");
  const std::vector<int> path = longest_path(t);
  const Edge e1{path[1], path[2]};
  const Edge e2{path[2], path[3]};
  return gamma_sp(subdivide(t, {e1, e2})) > gamma_sp(t);
}

}  // namespace superdom
