#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superdom/enumeration.hpp"
#include "superdom/graph.hpp"
#include "superdom/solvers.hpp"
#include "superdom/errors.hpp"
#include "superdom/subdivision.hpp"

using namespace superdom;

TEST_CASE("fixed shapes") {
  const SubdivisionResult p2 = sd_gamma_sp(path_graph(2));
  CHECK(p2.base_gamma_sp == 1);
  CHECK(p2.sd == 1);
  CHECK(p2.class_label == TreeClass::Class1);
  CHECK(p2.witness_edges == std::vector<Edge>{{0, 1}});

  const SubdivisionResult p3 = sd_gamma_sp(path_graph(3));
  CHECK(p3.base_gamma_sp == 2);
  CHECK(p3.sd == 2);
  CHECK(p3.class_label == TreeClass::Class2);
  CHECK(p3.witness_edges == std::vector<Edge>{{0, 1}, {1, 2}});

  const SubdivisionResult p6 = sd_gamma_sp(path_graph(6));
  CHECK(p6.base_gamma_sp == 3);
  CHECK(p6.sd == 1);
  CHECK(p6.witness_edges == std::vector<Edge>{{0, 1}});
}

TEST_CASE("rejects non-trees") {
  CHECK_THROWS_AS(sd_gamma_sp(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(sd_gamma_sp(single_vertex()), std::invalid_argument);
}

TEST_CASE("stars of three or more leaves defeat the pair search") {
  // gamma_sp(K_{1,k}) = k and stays k under one or two subdivisions, so
  // the two-subdivision bound genuinely fails here; the search reports it.
  for (int k = 3; k <= 5; ++k) {
    const Graph star = star_graph(k);
    CHECK_FALSE(single_subdivision_raises(star));
    CHECK_THROWS_AS(sd_gamma_sp(star), theorem_violation);
  }
  // Subdividing every edge of K_{1,3} finally raises the value.
  const Graph all3 = subdivide(star_graph(3), {{0, 1}, {0, 2}, {0, 3}});
  CHECK(gamma_sp(all3) == 4);
}

TEST_CASE("longest-path pair construction") {
  CHECK(thm31_pair_check(path_graph(6)));
  CHECK(thm31_pair_check(corona(path_graph(3))));
  CHECK_THROWS_WITH_AS(thm31_pair_check(path_graph(4)), "construction inapplicable",
                       std::invalid_argument);
}

TEST_CASE("exhaustive consistency for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& t : all_trees(n)) {
      const int base = gamma_sp(t);
      bool raised = false;
      for (const Edge& e : t.edges()) {
        const int val = gamma_sp(subdivide(t, {e}));
        CHECK(val >= base);
        raised = raised || val > base;
      }
      CHECK(single_subdivision_raises(t) == raised);
      const bool star = diameter(t) <= 2 && t.n() >= 4;
      if (star) {
        CHECK_THROWS_AS(sd_gamma_sp(t), theorem_violation);
      } else {
        const SubdivisionResult r = sd_gamma_sp(t);
        CHECK((r.sd == 1 || r.sd == 2));
        CHECK((r.sd == 1) == raised);
        CHECK((r.class_label == TreeClass::Class2) == !raised);
        CHECK(gamma_sp(subdivide(t, r.witness_edges)) > base);
      }
      if (diameter(t) >= 4) CHECK(thm31_pair_check(t));
    }
  }
}
