#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "superdom/enumeration.hpp"
#include "superdom/graph.hpp"
#include "superdom/solvers.hpp"

using namespace superdom;

namespace {

struct FaultGuard {
  FaultGuard() { testing::fault_relaxed_private_check = true; }
  ~FaultGuard() { testing::fault_relaxed_private_check = false; }
};

Graph with_isolated() { return Graph::from_edges(3, {{0, 1}}); }

}  // namespace

TEST_CASE("domination predicates on P_4") {
  const Graph p4 = path_graph(4);
  CHECK(is_dominating(p4, VertexSet::of(4, {1, 2})));
  CHECK(is_total_dominating(p4, VertexSet::of(4, {1, 2})));
  CHECK(is_dominating(p4, VertexSet::of(4, {0, 3})));
  CHECK_FALSE(is_total_dominating(p4, VertexSet::of(4, {0, 3})));
  CHECK_FALSE(is_dominating(p4, VertexSet::of(4, {1})));
}

TEST_CASE("super domination predicate") {
  const Graph p4 = path_graph(4);
  CHECK(is_super_dominating(p4, VertexSet::of(4, {1, 2})));
  CHECK(is_super_dominating(p4, VertexSet::full(4)));
  const Graph star = star_graph(3);
  CHECK_FALSE(is_super_dominating(star, VertexSet::of(4, {0, 1})));
}

TEST_CASE("gamma and gamma_t on fixed shapes") {
  CHECK(gamma(path_graph(4)) == 2);
  CHECK(gamma_t(path_graph(4)) == 2);
  CHECK(gamma(path_graph(6)) == 2);
  CHECK(gamma_t(path_graph(6)) == 4);
  for (int k = 3; k <= 5; ++k) {
    CHECK(gamma(star_graph(k)) == 1);
    CHECK(gamma_t(star_graph(k)) == 2);
  }
  CHECK_THROWS_WITH_AS(gamma(with_isolated()), "undefined parameter", std::invalid_argument);
  CHECK_THROWS_WITH_AS(gamma_t(with_isolated()), "undefined parameter", std::invalid_argument);
}

TEST_CASE("gamma_sp on fixed shapes") {
  CHECK(gamma_sp(path_graph(2)) == 1);
  CHECK(gamma_sp(path_graph(6)) == 3);
  CHECK(gamma_sp(star_graph(3)) == 3);
  for (int n = 2; n <= 12; ++n) CHECK(gamma_sp(path_graph(n)) == (n + 1) / 2);
  CHECK(gamma(corona(path_graph(3))) == 3);
  CHECK(gamma_sp(corona(path_graph(3))) == 3);
  CHECK_THROWS_AS(gamma_sp(single_vertex()), std::invalid_argument);
  CHECK_THROWS_AS(gamma_sp(with_isolated()), std::invalid_argument);
}

TEST_CASE("witnesses are valid and deterministic") {
  const Graph p6 = path_graph(6);
  const VertexSet w = gamma_sp_witness(p6);
  CHECK(w.count() == 3);
  CHECK(is_super_dominating(p6, w));
  CHECK(gamma_sp_witness(p6) == w);
  CHECK(is_dominating(p6, gamma_witness(p6)));
  CHECK(is_total_dominating(p6, gamma_t_witness(p6)));
  // The witness is the first entry of the full ascending enumeration.
  CHECK(all_gamma_sp_sets(p6).front() == w);
}

TEST_CASE("all_gamma_sp_sets") {
  const auto p2_sets = all_gamma_sp_sets(path_graph(2));
  REQUIRE(p2_sets.size() == 2);
  CHECK(p2_sets[0] == VertexSet::of(2, {0}));
  CHECK(p2_sets[1] == VertexSet::of(2, {1}));

  CHECK(all_gamma_sp_sets(path_graph(3)).size() == 3);

  const auto p4_sets = all_gamma_sp_sets(path_graph(4));
  REQUIRE(p4_sets.size() == 2);
  CHECK(p4_sets[0] == VertexSet::of(4, {1, 2}));
  CHECK(p4_sets[1] == VertexSet::of(4, {0, 3}));

  CHECK_THROWS_WITH_AS(all_gamma_sp_sets(path_graph(17)), "instance too large",
                       std::invalid_argument);
}

TEST_CASE("analyze_sp_set") {
  const Graph p4 = path_graph(4);
  const SpSetAnalysis a = analyze_sp_set(p4, VertexSet::of(4, {1, 2}));
  CHECK(a.sbar == VertexSet::of(4, {0, 3}));
  CHECK(a.epn[0] == VertexSet::of(4, {1}));
  CHECK(a.epn[3] == VertexSet::of(4, {2}));
  CHECK(a.p_set == VertexSet::of(4, {1, 2}));
  CHECK(a.q_set == VertexSet::of(4, {0, 3}));
  CHECK(a.u_set == VertexSet::of(4, {1, 2}));

  const Graph p3 = path_graph(3);
  const SpSetAnalysis b = analyze_sp_set(p3, VertexSet::of(3, {1, 2}));
  CHECK(b.epn[0] == VertexSet::of(3, {1}));
  CHECK_FALSE(b.p_set.test(2));

  const SpSetAnalysis c = analyze_sp_set(p4, VertexSet::full(4));
  CHECK(c.p_set.empty());
  CHECK(c.q_set.empty());
  CHECK(c.u_set.empty());

  CHECK_THROWS_AS(analyze_sp_set(star_graph(3), VertexSet::of(4, {0, 1})),
                  std::invalid_argument);
}

TEST_CASE("solvers agree with the power-set oracle for n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& t : all_trees(n)) {
      CHECK(gamma(t) == oracle::gamma(t));
      CHECK(gamma_t(t) == oracle::gamma_t(t));
      CHECK(gamma_sp(t) == oracle::gamma_sp(t));
    }
  }
}

TEST_CASE("known bounds hold exhaustively for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& t : all_trees(n)) {
      const int g = gamma(t), gsp = gamma_sp(t);
      CHECK(g <= n / 2);
      CHECK(gsp >= (n + 1) / 2);
      CHECK(gsp <= n - 1);
      CHECK(g <= gsp);
    }
  }
}

TEST_CASE("pendant leaf on a support raises gamma_sp by one, keeps gamma and gamma_t") {
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& t : all_trees(n)) {
      const int g = gamma(t), gt = gamma_t(t), gsp = gamma_sp(t);
      const VertexSet sup = supports(t);
      for (int v = sup.first(); v >= 0; v = sup.next(v)) {
        const Graph ext = add_pendant(t, v);
        CHECK(gamma(ext) == g);
        CHECK(gamma_t(ext) == gt);
        CHECK(gamma_sp(ext) == gsp + 1);
      }
    }
  }
}

TEST_CASE("predicates work beyond the word-packed solver limit") {
  const Graph p70 = path_graph(70);
  VertexSet s = VertexSet::full(70);
  s.reset(0);
  CHECK(is_super_dominating(p70, s));  // vertex 1 privately covers 0
  s.reset(1);
  CHECK_FALSE(is_super_dominating(p70, s));  // 1 has no guard left
  CHECK(is_dominating(p70, VertexSet::full(70)));
  CHECK_THROWS_WITH_AS(gamma_sp(p70), "instance too large", std::invalid_argument);
  CHECK_THROWS_WITH_AS(gamma(p70), "instance too large", std::invalid_argument);
}

TEST_CASE("fault flag weakens the private check") {
  CHECK(gamma_sp(star_graph(3)) == 3);
  {
    FaultGuard guard;
    CHECK(gamma_sp(star_graph(3)) == 2);
  }
  CHECK(gamma_sp(star_graph(3)) == 3);
}
