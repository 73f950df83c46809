#include "superdom/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "superdom/enumeration.hpp"
#include "superdom/errors.hpp"
#include "superdom/solvers.hpp"
#include "superdom/subdivision.hpp"

namespace superdom {

std::string family_name(Family f) {
  switch (f) {
    case Family::R: return "R";
    case Family::TFamily: return "T";
    case Family::UFamily: return "U";
    default: return "Corona";
  }
}

Family family_from_name(const std::string& name) {
  if (name == "R" || name == "r") return Family::R;
  if (name == "T" || name == "t" || name == "T_family") return Family::TFamily;
  if (name == "U" || name == "u" || name == "U_family") return Family::UFamily;
  if (name == "Corona" || name == "corona") return Family::Corona;
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

[[noreturn]] void bad_step(std::size_t index, const std::string& why) {
  throw std::invalid_argument("invalid certificate: step " + std::to_string(index) + ": " + why);
}

void check_added_ids(std::size_t index, const CertificateStep& step, int from, int count) {
  if (static_cast<int>(step.added.size()) != count)
    bad_step(index, "expected " + std::to_string(count) + " added vertices");
  for (int i = 0; i < count; ++i)
    if (step.added[i] != from + i) bad_step(index, "added ids must be the next fresh ids");
}

Graph attach_star(const Graph& t, int v, int star_order) {
  std::vector<Edge> es = t.edges();
  const int center = t.n();
  es.push_back({v, center});
  for (int i = 1; i < star_order; ++i) es.push_back({center, center + i});
  return Graph::from_edges(t.n() + star_order, std::move(es));
}

Graph attach_p6(const Graph& t, int v) {
  std::vector<Edge> es = t.edges();
  const int base = t.n();
  for (int i = 0; i < 5; ++i) es.push_back({base + i, base + i + 1});
  es.push_back({base + 2, v});
  return Graph::from_edges(t.n() + 6, std::move(es));
}

Graph attach_chain(const Graph& t, int v) {
  std::vector<Edge> es = t.edges();
  es.push_back({v, t.n()});
  es.push_back({t.n(), t.n() + 1});
  return Graph::from_edges(t.n() + 2, std::move(es));
}

// Applicable attachment points, computing the minimum-set enumeration once.
std::vector<int> u1_applicable_vertices(const Graph& t) {
  const auto sets = all_gamma_sp_sets(t);
  std::vector<SpSetAnalysis> analyses;
  analyses.reserve(sets.size());
  for (const auto& s : sets) analyses.push_back(analyze_sp_set(t, s));
  std::vector<int> out;
  for (int v = 0; v < t.n(); ++v) {
    VertexSet closed = t.neighbor_set(v);
    closed.set(v);
    bool ok = false;
    for (const auto& a : analyses) {
      if (!closed.intersects(a.sbar)) {
        ok = true;
        break;
      }
      if (!a.sbar.test(v) && !closed.intersects(a.u_set)) {
        ok = true;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace

Graph replay_certificate(const FamilyCertificate& cert) {
  Graph g;
  switch (cert.family) {
    case Family::R: g = path_graph(2); break;
    case Family::TFamily: g = path_graph(6); break;
    case Family::UFamily:
      if (cert.base_star_order < 3)
        throw std::invalid_argument("invalid certificate: base star order must be at least 3");
      g = star_graph(cert.base_star_order - 1);
      break;
    case Family::Corona: {
      Graph inner = Graph::from_edges(cert.base_order, cert.base_edges);
      if (!is_tree(inner))
        throw std::invalid_argument("invalid certificate: corona base is not a tree");
      return corona(inner);
    }
  }
  if (cert.family == Family::Corona) return g;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& step = cert.steps[i];
    if (step.attach < 0 || step.attach >= g.n()) bad_step(i, "attach vertex out of range");
    switch (cert.family) {
      case Family::R:
        check_added_ids(i, step, g.n(), 2);
        g = attach_chain(g, step.attach);
        break;
      case Family::TFamily: {
        check_added_ids(i, step, g.n(), 6);
        if (forced_labeling(g)[step.attach] != Status::B)
          bad_step(i, "attach vertex is not a B-vertex");
        g = attach_p6(g, step.attach);
        break;
      }
      default: {
        const int order = static_cast<int>(step.added.size());
        if (order < 2) bad_step(i, "star order must be at least 2");
        check_added_ids(i, step, g.n(), order);
        g = attach_star(g, step.attach, order);
        break;
      }
    }
  }
  return g;
}

bool certificate_conditions_hold(const FamilyCertificate& cert) {
  if (cert.family != Family::UFamily) {
    replay_certificate(cert);
    return true;
  }
  Graph g = star_graph(cert.base_star_order - 1);
  for (const CertificateStep& step : cert.steps) {
    if (!u1_applicable(g, step.attach)) return false;
    g = attach_star(g, step.attach, static_cast<int>(step.added.size()));
  }
  return true;
}

nlohmann::json certificate_to_json(const FamilyCertificate& cert) {
  nlohmann::json j;
  j["family"] = family_name(cert.family);
  switch (cert.family) {
    case Family::R: j["base"] = {{"kind", "P2"}}; break;
    case Family::TFamily: j["base"] = {{"kind", "labeled_P6"}}; break;
    case Family::UFamily:
      j["base"] = {{"kind", "star"}, {"order", cert.base_star_order}};
      break;
    case Family::Corona: {
      nlohmann::json edges = nlohmann::json::array();
      for (auto [u, v] : cert.base_edges) edges.push_back({u, v});
      j["base"] = {{"kind", "corona_inner"}, {"n", cert.base_order}, {"edges", edges}};
      break;
    }
  }
  j["steps"] = nlohmann::json::array();
  for (const auto& step : cert.steps)
    j["steps"].push_back({{"attach", step.attach}, {"added", step.added}});
  return j;
}

FamilyCertificate certificate_from_json(const nlohmann::json& j) {
  FamilyCertificate cert;
  cert.family = family_from_name(j.at("family").get<std::string>());
  if (cert.family == Family::UFamily)
    cert.base_star_order = j.at("base").at("order").get<int>();
  if (cert.family == Family::Corona) {
    cert.base_order = j.at("base").at("n").get<int>();
    for (const auto& e : j.at("base").at("edges"))
      cert.base_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  for (const auto& js : j.at("steps")) {
    CertificateStep step;
    step.attach = js.at("attach").get<int>();
    step.added = js.at("added").get<std::vector<int>>();
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

bool is_corona(const Graph& t) { return corona_inner(t).has_value(); }

std::optional<Graph> corona_inner(const Graph& t) {
  if (!is_tree(t) || t.n() < 2) return std::nullopt;
  if (t.n() % 2 != 0) return std::nullopt;
  if (t.n() == 2) return single_vertex();
  const VertexSet lf = leaves(t);
  for (int v = 0; v < t.n(); ++v)
    if (!lf.test(v) && (t.neighbor_set(v) & lf).count() != 1) return std::nullopt;
  if (2 * lf.count() != t.n()) return std::nullopt;
  return induced_subgraph(t, lf.complement()).graph;
}

std::optional<FamilyCertificate> corona_certificate(const Graph& t) {
  auto inner = corona_inner(t);
  if (!inner) return std::nullopt;
  FamilyCertificate cert;
  cert.family = Family::Corona;
  cert.base_order = inner->n();
  cert.base_edges = inner->edges();
  return cert;
}

bool is_in_R(const Graph& t) {
  if (!is_tree(t) || t.n() < 2) return false;
  if (t.n() % 2 != 0) return false;
  return 2 * gamma_sp(t) == t.n();
}

namespace {

// Peels pendant chains (a leaf plus its degree-2 support) down to P_2,
// backtracking over the choice of chain. Returns the certificate plus a
// map from the current graph's ids to replay ids.
std::optional<std::pair<FamilyCertificate, std::vector<int>>> peel_r(const Graph& cur) {
  if (cur.n() == 2) {
    FamilyCertificate cert;
    cert.family = Family::R;
    return std::make_pair(std::move(cert), std::vector<int>{0, 1});
  }
  if (cur.n() % 2 != 0 || cur.n() < 2) return std::nullopt;
  for (int y = 0; y < cur.n(); ++y) {
    if (cur.degree(y) != 1) continue;
    const int x = cur.neighbors(y)[0];
    if (cur.degree(x) != 2) continue;
    const int w = cur.neighbors(x)[0] == y ? cur.neighbors(x)[1] : cur.neighbors(x)[0];
    VertexSet keep = VertexSet::full(cur.n());
    keep.reset(x);
    keep.reset(y);
    auto [sub, to_old] = induced_subgraph(cur, keep);
    auto rec = peel_r(sub);
    if (!rec) continue;
    auto& [cert, sub_map] = *rec;
    std::vector<int> map(cur.n(), -1);
    for (std::size_t i = 0; i < to_old.size(); ++i) map[to_old[i]] = sub_map[i];
    const int fresh = sub.n();
    map[x] = fresh;
    map[y] = fresh + 1;
    cert.steps.push_back({map[w], {fresh, fresh + 1}});
    return std::make_pair(std::move(cert), std::move(map));
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyCertificate> r_certificate(const Graph& t) {
  if (!is_tree(t) || t.n() < 2) return std::nullopt;
  auto rec = peel_r(t);
  if (!rec) return std::nullopt;
  return std::move(rec->first);
}

LabeledTree apply_O(const LabeledTree& lt, int v) {
  validate_labeled_tree(lt);
  if (v < 0 || v >= lt.tree.n() || lt.status[v] != Status::B)
    throw std::invalid_argument("operation requires a B-vertex");
  LabeledTree out;
  out.tree = attach_p6(lt.tree, v);
  out.status = lt.status;
  const Status unit[6] = {Status::C, Status::A, Status::B, Status::B, Status::A, Status::C};
  out.status.insert(out.status.end(), unit, unit + 6);
  return out;
}

namespace {

bool is_bare_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

// Structural sanity shared by every member: supports have degree two with
// one leaf neighbor, and non-leaf non-support vertices see exactly one
// support among their neighbors.
bool t_labels_consistent(const Graph& t, const std::vector<Status>& st) {
  for (int v = 0; v < t.n(); ++v) {
    if (st[v] == Status::A) {
      if (t.degree(v) != 2) return false;
      int cs = 0, bs = 0;
      for (int w : t.neighbors(v)) {
        cs += st[w] == Status::C;
        bs += st[w] == Status::B;
      }
      if (cs != 1 || bs != 1) return false;
    } else if (st[v] == Status::B) {
      int as = 0;
      for (int w : t.neighbors(v)) {
        if (st[w] == Status::C) return false;
        as += st[w] == Status::A;
      }
      if (as != 1) return false;
    }
  }
  return true;
}

std::optional<std::pair<FamilyCertificate, std::vector<int>>> peel_t(const Graph& cur) {
  if (cur.n() == 6) {
    if (!is_bare_path(cur)) return std::nullopt;
    // Orient the base path from its lower-id endpoint.
    int start = -1;
    for (int v = 0; v < 6 && start < 0; ++v)
      if (cur.degree(v) == 1) start = v;
    std::vector<int> map(6, -1);
    int prev = -1, at = start;
    for (int pos = 0; pos < 6; ++pos) {
      map[at] = pos;
      for (int w : cur.neighbors(at))
        if (w != prev) {
          prev = at;
          at = w;
          break;
        }
    }
    FamilyCertificate cert;
    cert.family = Family::TFamily;
    return std::make_pair(std::move(cert), std::move(map));
  }
  if (cur.n() < 6 || cur.n() % 6 != 0) return std::nullopt;
  for (int x1 = 0; x1 < cur.n(); ++x1) {
    if (cur.degree(x1) != 1) continue;
    const int x2 = cur.neighbors(x1)[0];
    if (cur.degree(x2) != 2) continue;
    const int x3 = cur.neighbors(x2)[0] == x1 ? cur.neighbors(x2)[1] : cur.neighbors(x2)[0];
    if (cur.degree(x3) != 3) continue;
    std::vector<int> rest;
    for (int w : cur.neighbors(x3))
      if (w != x2) rest.push_back(w);
    for (int pick = 0; pick < 2; ++pick) {
      const int x4 = rest[pick], v = rest[1 - pick];
      if (cur.degree(x4) != 2) continue;
      const int x5 = cur.neighbors(x4)[0] == x3 ? cur.neighbors(x4)[1] : cur.neighbors(x4)[0];
      if (cur.degree(x5) != 2) continue;
      const int x6 = cur.neighbors(x5)[0] == x4 ? cur.neighbors(x5)[1] : cur.neighbors(x5)[0];
      if (cur.degree(x6) != 1) continue;
      VertexSet unit = VertexSet::of(cur.n(), {x1, x2, x3, x4, x5, x6});
      if (unit.count() != 6 || unit.test(v)) continue;
      auto [sub, to_old] = induced_subgraph(cur, unit.complement());
      if (!is_tree(sub)) continue;
      std::vector<int> to_new(cur.n(), -1);
      for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
      if (forced_labeling(sub)[to_new[v]] != Status::B) continue;
      auto rec = peel_t(sub);
      if (!rec) continue;
      auto& [cert, sub_map] = *rec;
      std::vector<int> map(cur.n(), -1);
      for (std::size_t i = 0; i < to_old.size(); ++i) map[to_old[i]] = sub_map[i];
      const int fresh = sub.n();
      const int unit_order[6] = {x1, x2, x3, x4, x5, x6};
      std::vector<int> added;
      for (int i = 0; i < 6; ++i) {
        map[unit_order[i]] = fresh + i;
        added.push_back(fresh + i);
      }
      cert.steps.push_back({map[v], std::move(added)});
      return std::make_pair(std::move(cert), std::move(map));
    }
  }
  return std::nullopt;
}

}  // namespace

TRecognition recognize_T(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("recognition requires a tree");
  TRecognition out;
  out.labeling = forced_labeling(t);
  if (t.n() % 6 != 0 || t.n() < 6) return out;
  if (!t_labels_consistent(t, out.labeling)) return out;
  auto rec = peel_t(t);
  if (!rec) return out;
  out.member = true;
  out.certificate = std::move(rec->first);
  return out;
}

bool u1_applicable(const Graph& t, int v) {
  if (v < 0 || v >= t.n()) throw std::invalid_argument("vertex id out of range");
  const auto verts = u1_applicable_vertices(t);
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

Graph apply_U1(const Graph& t, int v, int star_order) {
  if (star_order < 2) throw std::invalid_argument("operation requires star order at least 2");
  if (!u1_applicable(t, v)) throw std::invalid_argument("operation precondition fails");
  return attach_star(t, v, star_order);
}

bool recognize_U(const Graph& t) {
  if (!is_tree(t) || t.n() < 2)
    throw std::invalid_argument("recognition requires a nontrivial tree");
  return !single_subdivision_raises(t);
}

namespace {

std::optional<std::pair<FamilyCertificate, std::vector<int>>> peel_u(const Graph& cur) {
  if (diameter(cur) <= 2) {
    // A star; its center is the unique non-leaf when the order exceeds 2.
    if (cur.n() < 3)
      throw theorem_violation("star peel: reached a base of order below 3");
    int center = 0;
    for (int v = 0; v < cur.n(); ++v)
      if (cur.degree(v) > 1) center = v;
    FamilyCertificate cert;
    cert.family = Family::UFamily;
    cert.base_star_order = cur.n();
    std::vector<int> map(cur.n(), -1);
    map[center] = 0;
    int next = 1;
    for (int v = 0; v < cur.n(); ++v)
      if (v != center) map[v] = next++;
    return std::make_pair(std::move(cert), std::move(map));
  }
  const std::vector<int> path = longest_path(cur);
  const int v2 = path[1], v3 = path[2];
  VertexSet star(cur.n());
  star.set(v2);
  for (int w : cur.neighbors(v2)) {
    if (w == v3) continue;
    if (cur.degree(w) != 1)
      throw theorem_violation("star peel: non-leaf sibling on a longest path end");
    star.set(w);
  }
  auto [sub, to_old] = induced_subgraph(cur, star.complement());
  std::vector<int> to_new(cur.n(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
  if (single_subdivision_raises(sub))
    throw theorem_violation("star peel: remainder is not Class 2");
  if (!u1_applicable(sub, to_new[v3]))
    throw theorem_violation("star peel: attachment condition fails on the remainder");
  auto rec = peel_u(sub);
  if (!rec) return std::nullopt;
  auto& [cert, sub_map] = *rec;
  std::vector<int> map(cur.n(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) map[to_old[i]] = sub_map[i];
  const int fresh = sub.n();
  std::vector<int> added{fresh};
  map[v2] = fresh;
  int next = fresh + 1;
  for (int w = star.first(); w >= 0; w = star.next(w)) {
    if (w == v2) continue;
    map[w] = next;
    added.push_back(next++);
  }
  cert.steps.push_back({map[v3], std::move(added)});
  return std::make_pair(std::move(cert), std::move(map));
}

}  // namespace

std::optional<FamilyCertificate> u_certificate(const Graph& t) {
  if (!recognize_U(t)) return std::nullopt;
  auto rec = peel_u(t);
  if (!rec) return std::nullopt;
  return std::move(rec->first);
}

namespace {

constexpr int kClosureBudget = 16;

void require_closure_budget(int n_max) {
  if (n_max > kClosureBudget) throw std::invalid_argument("enumeration budget exceeded");
}

std::vector<Graph> closure_graphs(Family f, int n_max) {
  require_closure_budget(n_max);
  std::map<std::string, Graph> members;  // canonical form -> representative
  std::vector<Graph> frontier;

  auto admit = [&](Graph g) {
    std::string key = canonical_form(g);
    if (members.emplace(std::move(key), g).second) frontier.push_back(std::move(g));
  };

  switch (f) {
    case Family::R:
      if (n_max >= 2) admit(path_graph(2));
      break;
    case Family::TFamily:
      if (n_max >= 6) admit(path_graph(6));
      break;
    case Family::UFamily:
      for (int order = 3; order <= n_max; ++order) admit(star_graph(order - 1));
      break;
    case Family::Corona:
      for (int h = 1; 2 * h <= n_max; ++h)
        for (const Graph& inner : all_trees(h)) admit(corona(inner));
      break;
  }

  if (f != Family::Corona) {
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Graph cur = frontier[i];
      switch (f) {
        case Family::R:
          if (cur.n() + 2 <= n_max)
            for (int v = 0; v < cur.n(); ++v) admit(attach_chain(cur, v));
          break;
        case Family::TFamily:
          if (cur.n() + 6 <= n_max) {
            const auto st = forced_labeling(cur);
            for (int v = 0; v < cur.n(); ++v)
              if (st[v] == Status::B) admit(attach_p6(cur, v));
          }
          break;
        default:
          if (cur.n() + 2 <= n_max) {
            for (int v : u1_applicable_vertices(cur))
              for (int order = 2; cur.n() + order <= n_max; ++order)
                admit(attach_star(cur, v, order));
          }
          break;
      }
    }
  }

  std::vector<Graph> out;
  out.reserve(members.size());
  for (auto& [key, g] : members) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

}  // namespace

std::set<std::string> enumerate_family(Family f, int n_max) {
  std::set<std::string> out;
  for (const Graph& g : closure_graphs(f, n_max)) out.insert(canonical_form(g));
  return out;
}

std::vector<Graph> enumerate_family_graphs(Family f, int n_max) {
  return closure_graphs(f, n_max);
}

std::vector<LabeledTree> t_closure_labeled(int n_max) {
  require_closure_budget(n_max);
  std::vector<LabeledTree> out;
  if (n_max < 6) return out;
  std::set<std::string> seen;
  LabeledTree base{path_graph(6),
                   {Status::C, Status::A, Status::B, Status::B, Status::A, Status::C}};
  out.push_back(base);
  seen.insert(canonical_form(base.tree));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const LabeledTree cur = out[i];
    if (cur.tree.n() + 6 > n_max) continue;
    for (int v = 0; v < cur.tree.n(); ++v) {
      if (cur.status[v] != Status::B) continue;
      LabeledTree ext = apply_O(cur, v);
      if (seen.insert(canonical_form(ext.tree)).second) out.push_back(std::move(ext));
    }
  }
  std::sort(out.begin(), out.end(), [](const LabeledTree& a, const LabeledTree& b) {
    if (a.tree.n() != b.tree.n()) return a.tree.n() < b.tree.n();
    return canonical_form(a.tree) < canonical_form(b.tree);
  });
  return out;
}

}  // namespace superdom
