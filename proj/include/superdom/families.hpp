#pragma once

// Constructive tree families and their recognizers:
//   - coronas H∘K1 (every vertex gains one pendant leaf),
//   - R: grown from P_2 by attaching two-vertex chains,
//   - T: labeled trees grown from a labeled P_6 by attaching further
//     labeled P_6 units at B-vertices,
//   - U: grown from a star of order >= 3 by attaching star centers at
//     vertices meeting a condition on the minimum super dominating sets.
// Each recognizer can emit a replayable construction certificate.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "superdom/graph.hpp"
#include "superdom/labeled_tree.hpp"

namespace superdom {

enum class Family { R, TFamily, UFamily, Corona };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct CertificateStep {
  int attach = -1;         // replay-graph vertex the new unit hangs from
  std::vector<int> added;  // ids the step introduces, in construction order
};

// Replaying the steps from the base rebuilds a graph isomorphic to the
// certified tree. The base is implicit for R (P_2) and T (labeled P_6),
// a star order for U, and the inner tree for Corona.
struct FamilyCertificate {
  Family family = Family::R;
  int base_star_order = 0;
  int base_order = 0;
  std::vector<Edge> base_edges;
  std::vector<CertificateStep> steps;
};

Graph replay_certificate(const FamilyCertificate& cert);
nlohmann::json certificate_to_json(const FamilyCertificate& cert);
FamilyCertificate certificate_from_json(const nlohmann::json& j);

// For U certificates, re-checks the attachment condition at every step.
// Other families need no replay-time conditions beyond structure.
bool certificate_conditions_hold(const FamilyCertificate& cert);

bool is_corona(const Graph& t);
std::optional<Graph> corona_inner(const Graph& t);
std::optional<FamilyCertificate> corona_certificate(const Graph& t);

// Membership in R is equivalent to the super domination number hitting
// its floor n/2; the certificate comes from peeling pendant chains.
bool is_in_R(const Graph& t);
std::optional<FamilyCertificate> r_certificate(const Graph& t);

// Attaches a labeled P_6 unit (statuses C,A,B,B,A,C) by its third vertex
// to a B-vertex of the host.
LabeledTree apply_O(const LabeledTree& lt, int v);

struct TRecognition {
  bool member = false;
  std::vector<Status> labeling;
  std::optional<FamilyCertificate> certificate;
};

TRecognition recognize_T(const Graph& t);

// The star-attachment condition: some minimum super dominating set S of t
// has no complement vertex in N[v], or has v inside S and no guard from
// u_set in N[v].
bool u1_applicable(const Graph& t, int v);

// Attaches a star of the given order (>= 2) by its center to v; requires
// the condition above to hold.
Graph apply_U1(const Graph& t, int v, int star_order);

bool recognize_U(const Graph& t);
std::optional<FamilyCertificate> u_certificate(const Graph& t);

// Every member with at most n_max vertices, as canonical forms; the graph
// variant returns one representative per form, sorted by order then form.
std::set<std::string> enumerate_family(Family f, int n_max);
std::vector<Graph> enumerate_family_graphs(Family f, int n_max);

// T-closure members with the labels the construction assigns.
std::vector<LabeledTree> t_closure_labeled(int n_max);

}  // namespace superdom
