#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superdom/enumeration.hpp"
#include "superdom/families.hpp"
#include "superdom/graph.hpp"
#include "superdom/solvers.hpp"
#include "superdom/subdivision.hpp"

using namespace superdom;

namespace {

Graph spider211() {
  // One degree-3 vertex with legs of lengths 2, 1, 1.
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
}

}  // namespace

TEST_CASE("corona recognition") {
  auto h_p4 = corona_inner(path_graph(4));
  REQUIRE(h_p4.has_value());
  CHECK(canonical_form(*h_p4) == canonical_form(path_graph(2)));

  CHECK_FALSE(is_corona(path_graph(6)));
  CHECK_FALSE(is_corona(star_graph(3)));
  CHECK_FALSE(is_corona(path_graph(3)));

  auto h_c3 = corona_inner(corona(path_graph(3)));
  REQUIRE(h_c3.has_value());
  CHECK(canonical_form(*h_c3) == canonical_form(path_graph(3)));

  auto h_p2 = corona_inner(path_graph(2));
  REQUIRE(h_p2.has_value());
  CHECK(h_p2->n() == 1);

  const auto cert = corona_certificate(path_graph(4));
  REQUIRE(cert.has_value());
  CHECK(canonical_form(replay_certificate(*cert)) == canonical_form(path_graph(4)));
}

TEST_CASE("R membership by value") {
  CHECK(is_in_R(path_graph(2)));
  CHECK(is_in_R(path_graph(4)));
  CHECK(is_in_R(path_graph(6)));
  CHECK_FALSE(is_in_R(star_graph(3)));
  CHECK_FALSE(is_in_R(path_graph(5)));  // odd order
}

TEST_CASE("R certificates replay to the input") {
  for (const Graph& t : {path_graph(2), path_graph(4), path_graph(6), corona(path_graph(3))}) {
    const auto cert = r_certificate(t);
    REQUIRE(cert.has_value());
    CHECK(canonical_form(replay_certificate(*cert)) == canonical_form(t));
  }
  CHECK_FALSE(r_certificate(star_graph(3)).has_value());
}

TEST_CASE("R closure") {
  const auto small = enumerate_family(Family::R, 4);
  CHECK(small == std::set<std::string>{canonical_form(path_graph(2)),
                                       canonical_form(path_graph(4))});
  const auto six = enumerate_family(Family::R, 6);
  CHECK(six.size() == 4);
  CHECK(six.count(canonical_form(path_graph(6))) == 1);
  CHECK(six.count(canonical_form(corona(path_graph(3)))) == 1);
  // Recognizer, closure and peel agree exhaustively at small orders.
  for (int n = 2; n <= 8; ++n) {
    const auto closure = enumerate_family(Family::R, n);
    for (const Graph& t : all_trees(n)) {
      const bool member = is_in_R(t);
      CHECK(member == (closure.count(canonical_form(t)) == 1));
      CHECK(member == r_certificate(t).has_value());
    }
  }
  CHECK_THROWS_AS(enumerate_family(Family::R, 17), std::invalid_argument);
}

TEST_CASE("labeled P_6 attachment") {
  LabeledTree base{path_graph(6),
                   {Status::C, Status::A, Status::B, Status::B, Status::A, Status::C}};
  CHECK_THROWS_AS(apply_O(base, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_O(base, 1), std::invalid_argument);
  const LabeledTree ext = apply_O(base, 2);
  CHECK(ext.tree.n() == 12);
  CHECK(ext.status == forced_labeling(ext.tree));
  CHECK(gamma_t(ext.tree) == 8);
  CHECK(gamma_sp(ext.tree) == 6);
  // Both B-vertices give isomorphic extensions.
  CHECK(canonical_form(ext.tree) == canonical_form(apply_O(base, 3).tree));
}

TEST_CASE("T recognition") {
  CHECK(recognize_T(path_graph(6)).member);
  CHECK_FALSE(recognize_T(path_graph(7)).member);
  CHECK_FALSE(recognize_T(path_graph(12)).member);
  CHECK_FALSE(recognize_T(star_graph(5)).member);

  LabeledTree base{path_graph(6),
                   {Status::C, Status::A, Status::B, Status::B, Status::A, Status::C}};
  const Graph member12 = apply_O(base, 2).tree;
  const TRecognition rec = recognize_T(member12);
  REQUIRE(rec.member);
  CHECK(rec.labeling == forced_labeling(member12));
  REQUIRE(rec.certificate.has_value());
  CHECK(canonical_form(replay_certificate(*rec.certificate)) == canonical_form(member12));

  // An 18-vertex member built by two attachments round-trips as well.
  const Graph member18 = apply_O(apply_O(base, 2), 3).tree;
  const TRecognition rec18 = recognize_T(member18);
  REQUIRE(rec18.member);
  CHECK(canonical_form(replay_certificate(*rec18.certificate)) == canonical_form(member18));
}

TEST_CASE("T closure up to 12 has exactly the two members") {
  const auto closure = enumerate_family(Family::TFamily, 12);
  LabeledTree base{path_graph(6),
                   {Status::C, Status::A, Status::B, Status::B, Status::A, Status::C}};
  CHECK(closure == std::set<std::string>{canonical_form(path_graph(6)),
                                         canonical_form(apply_O(base, 2).tree)});
  const auto labeled = t_closure_labeled(12);
  REQUIRE(labeled.size() == 2);
  for (const auto& lt : labeled) CHECK(lt.status == forced_labeling(lt.tree));
}

TEST_CASE("star attachment condition") {
  const Graph p3 = path_graph(3);
  CHECK(u1_applicable(p3, 0));
  CHECK_FALSE(u1_applicable(p3, 1));
  CHECK(u1_applicable(p3, 2));
  CHECK_FALSE(u1_applicable(path_graph(2), 0));

  CHECK(canonical_form(apply_U1(p3, 0, 2)) == canonical_form(path_graph(5)));
  CHECK_THROWS_WITH_AS(apply_U1(p3, 0, 1), "operation requires star order at least 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(apply_U1(path_graph(2), 0, 2), "operation precondition fails",
                       std::invalid_argument);
}

TEST_CASE("U recognition and certificates") {
  CHECK(recognize_U(star_graph(3)));
  CHECK_FALSE(recognize_U(path_graph(2)));
  CHECK_FALSE(recognize_U(path_graph(6)));
  CHECK(recognize_U(path_graph(5)));

  const auto cert = u_certificate(path_graph(5));
  REQUIRE(cert.has_value());
  CHECK(cert->base_star_order == 3);
  REQUIRE(cert->steps.size() == 1);
  CHECK(canonical_form(replay_certificate(*cert)) == canonical_form(path_graph(5)));
  CHECK(certificate_conditions_hold(*cert));

  CHECK_FALSE(u_certificate(spider211()).has_value());
}

TEST_CASE("U closure equals the Class 2 trees for n <= 6") {
  const auto closure = enumerate_family(Family::UFamily, 6);
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& t : all_trees(n)) {
      const bool class2 = !single_subdivision_raises(t);
      CHECK(class2 == (closure.count(canonical_form(t)) == 1));
      CHECK(recognize_U(t) == class2);
    }
  }
}

TEST_CASE("every corona of a small tree hits gamma == gamma_sp == n/2") {
  for (int h = 1; h <= 5; ++h) {
    for (const Graph& inner : all_trees(h)) {
      const Graph c = corona(inner);
      CHECK(gamma(c) == inner.n());
      CHECK(gamma_sp(c) == inner.n());
      CHECK(is_corona(c));
    }
  }
}

TEST_CASE("corona closure") {
  const auto closure = enumerate_family(Family::Corona, 6);
  CHECK(closure == std::set<std::string>{canonical_form(path_graph(2)),
                                         canonical_form(path_graph(4)),
                                         canonical_form(corona(path_graph(3)))});
}

TEST_CASE("certificate JSON round trip") {
  const auto cert = u_certificate(path_graph(5));
  REQUIRE(cert.has_value());
  const FamilyCertificate back = certificate_from_json(certificate_to_json(*cert));
  CHECK(canonical_form(replay_certificate(back)) == canonical_form(path_graph(5)));

  const auto rcert = r_certificate(path_graph(6));
  REQUIRE(rcert.has_value());
  const FamilyCertificate rback = certificate_from_json(certificate_to_json(*rcert));
  CHECK(canonical_form(replay_certificate(rback)) == canonical_form(path_graph(6)));

  // A corrupted step index is rejected with its position.
  FamilyCertificate bad = *rcert;
  bad.steps[0].attach = 99;
  CHECK_THROWS_WITH_AS(replay_certificate(bad),
                       "invalid certificate: step 0: attach vertex out of range",
                       std::invalid_argument);
}

TEST_CASE("enumerate_family_graphs is sorted and deduplicated") {
  const auto graphs = enumerate_family_graphs(Family::R, 8);
  for (std::size_t i = 1; i < graphs.size(); ++i)
    CHECK(graphs[i - 1].n() <= graphs[i].n());
  std::set<std::string> forms;
  for (const Graph& g : graphs) CHECK(forms.insert(canonical_form(g)).second);
}
