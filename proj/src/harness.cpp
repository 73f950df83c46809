#include "superdom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "superdom/enumeration.hpp"
#include "superdom/errors.hpp"
#include "superdom/families.hpp"
#include "superdom/solvers.hpp"
#include "superdom/subdivision.hpp"
#include "superdom/transform.hpp"

namespace superdom {

namespace {

int resolve_workers(int requested) {
  int w = requested;
  if (w <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    w = hw ? static_cast<int>(hw) : 1;
  }
  if (const char* env = std::getenv("SUPERDOM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) w = std::min(w, cap);
  }
  return std::max(w, 1);
}

struct KeyedViolation {
  int n;
  std::string canon;
  Violation v;
};

void finalize_violations(VerifyReport& rep, std::vector<KeyedViolation>& keyed) {
  std::sort(keyed.begin(), keyed.end(), [](const KeyedViolation& a, const KeyedViolation& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.canon != b.canon) return a.canon < b.canon;
    return a.v.detail < b.v.detail;
  });
  for (auto& kv : keyed) rep.violations.push_back(std::move(kv.v));
}

// Runs fn on every tree with n_lo..n_hi vertices. fn returns false when the
// instance does not meet the check's precondition; any detail strings it
// collects become violations. Claim failures thrown as theorem_violation
// are captured the same way.
template <typename Fn>
void run_over_trees(VerifyReport& rep, int n_lo, int n_hi, int workers, Fn fn) {
  std::vector<KeyedViolation> keyed;
  for (int n = n_lo; n <= n_hi; ++n) {
    TreeStream stream = all_trees(n);
    const auto& trees = stream.trees();
    struct Slot {
      bool checked = true;
      std::vector<std::string> details;
    };
    std::vector<Slot> slots(trees.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
      while (true) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= trees.size()) break;
        try {
          slots[i].checked = fn(trees[i], slots[i].details);
        } catch (const theorem_violation& ex) {
          slots[i].details.push_back(ex.what());
        } catch (const std::exception& ex) {
          slots[i].details.push_back(std::string("unexpected error: ") + ex.what());
        }
      }
    };
    const int w = std::max(1, std::min<int>(workers, static_cast<int>(trees.size())));
    if (w == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < w; ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (slots[i].checked)
        ++rep.instances_checked;
      else
        ++rep.skipped_precondition;
      if (!slots[i].details.empty()) {
        const std::string canon = canonical_form(trees[i]);
        const std::string text = emit_edge_list(trees[i]);
        for (auto& d : slots[i].details) keyed.push_back({n, canon, {text, std::move(d)}});
      }
    }
  }
  finalize_violations(rep, keyed);
}

// ---- individual checks ------------------------------------------------

void check_bounds(VerifyReport& rep, int n_hi, int workers) {
  run_over_trees(rep, 2, n_hi, workers, [](const Graph& t, std::vector<std::string>& out) {
    const int n = t.n();
    const int g = gamma(t), gsp = gamma_sp(t);
    if (g > n / 2) out.push_back("gamma exceeds floor(n/2)");
    if (gsp < (n + 1) / 2) out.push_back("gamma_sp below ceil(n/2)");
    if (gsp > n - 1) out.push_back("gamma_sp above n-1");
    if (g > gsp) out.push_back("gamma exceeds gamma_sp");
    return true;
  });
}

void check_thm25(VerifyReport& rep, int n_hi, int workers) {
  run_over_trees(rep, 2, n_hi, workers, [](const Graph& t, std::vector<std::string>& out) {
    const bool equality = gamma(t) == gamma_sp(t);
    const bool corona_shape = is_corona(t);
    if (equality && !corona_shape) out.push_back("gamma equals gamma_sp on a non-corona");
    if (!equality && corona_shape) out.push_back("corona without gamma == gamma_sp");
    return true;
  });
}

void check_thm26(VerifyReport& rep, int n_hi, int workers) {
  const auto closure = enumerate_family(Family::TFamily, std::max(n_hi, 6));
  run_over_trees(rep, 3, n_hi, workers, [&](const Graph& t, std::vector<std::string>& out) {
    const int gt = gamma_t(t), gsp = gamma_sp(t);
    if (3 * gt > 4 * gsp) out.push_back("3*gamma_t exceeds 4*gamma_sp");
    const bool equality = 3 * gt == 4 * gsp;
    const bool member = closure.count(canonical_form(t)) > 0;
    const bool recognized = recognize_T(t).member;
    if (equality != member) out.push_back("ratio equality disagrees with the closure");
    if (recognized != member) out.push_back("recognizer disagrees with the closure");
    return true;
  });
}

void check_thm28(VerifyReport& rep, int n_hi, int workers) {
  const auto closure = enumerate_family(Family::R, std::max(n_hi, 2));
  run_over_trees(rep, 2, n_hi, workers, [&](const Graph& t, std::vector<std::string>& out) {
    const std::string canon = canonical_form(t);
    const bool half = t.n() % 2 == 0 && 2 * gamma_sp(t) == t.n();
    const bool member = closure.count(canon) > 0;
    const bool recognized = is_in_R(t);
    if (half != member) out.push_back("gamma_sp == n/2 disagrees with the closure");
    if (recognized != half) out.push_back("recognizer disagrees with the value form");
    const auto cert = r_certificate(t);
    if (half != cert.has_value()) {
      out.push_back("certificate existence disagrees with membership");
    } else if (cert && canonical_form(replay_certificate(*cert)) != canon) {
      out.push_back("certificate replay is not isomorphic to the input");
    }
    return true;
  });
}

void check_thm31(VerifyReport& rep, int n_hi, int workers) {
  run_over_trees(rep, 2, n_hi, workers, [](const Graph& t, std::vector<std::string>& out) {
    const int base = gamma_sp(t);
    bool raised = false;
    for (const Edge& e : t.edges()) {
      const int val = gamma_sp(subdivide(t, {e}));
      if (val < base) out.push_back("single-edge subdivision decreased the value");
      if (val > base) raised = true;
    }
    try {
      const SubdivisionResult r = sd_gamma_sp(t);
      if ((r.sd == 1) != raised) out.push_back("subdivision search phases disagree");
      if ((r.class_label == TreeClass::Class2) != (r.sd == 2))
        out.push_back("class label disagrees with the subdivision number");
      if (gamma_sp(subdivide(t, r.witness_edges)) <= base)
        out.push_back("witness subdivision fails to raise the value");
    } catch (const theorem_violation& ex) {
      out.push_back(ex.what());  // no pair raises the value: the bound fails here
    }
    if (diameter(t) >= 4 && !thm31_pair_check(t))
      out.push_back("longest-path pair subdivision fails to raise the value");
    return true;
  });
}

void check_thm34(VerifyReport& rep, int n_hi, int workers) {
  const auto closure = enumerate_family(Family::UFamily, std::max(n_hi, 3));
  run_over_trees(rep, 2, n_hi, workers, [&](const Graph& t, std::vector<std::string>& out) {
    const std::string canon = canonical_form(t);
    const bool class2 = !single_subdivision_raises(t);
    const bool member = closure.count(canon) > 0;
    if (class2 != member) out.push_back("class 2 disagrees with the closure");
    if (recognize_U(t) != class2) out.push_back("recognizer disagrees with the class predicate");
    if (class2) {
      const auto cert = u_certificate(t);
      if (!cert)
        out.push_back("missing certificate for a class 2 tree");
      else if (canonical_form(replay_certificate(*cert)) != canon)
        out.push_back("certificate replay is not isomorphic to the input");
    }
    return true;
  });
}

void check_obs22(VerifyReport& rep, int n_hi, int workers) {
  run_over_trees(rep, 2, n_hi, workers, [](const Graph& t, std::vector<std::string>& out) {
    const VertexSet lf = leaves(t);
    const VertexSet sup = supports(t);
    for (const VertexSet& s : all_gamma_sp_sets(t)) {
      const VertexSet sbar = s.complement();
      for (int v = sup.first(); v >= 0; v = sup.next(v)) {
        int cnt = sbar.test(v) ? 1 : 0;
        cnt += (t.neighbor_set(v) & lf & sbar).count();
        if (cnt > 1) {
          out.push_back("support " + std::to_string(v) +
                        " and its leaves put two vertices outside the set " + s.to_string());
          return true;
        }
      }
    }
    return true;
  });
}

void check_obs23(VerifyReport& rep, int n_hi, int workers) {
  run_over_trees(rep, 2, n_hi, workers, [](const Graph& t, std::vector<std::string>& out) {
    const std::vector<int> strong = strong_supports(t).elements();
    if (strong.empty()) return false;
    const VertexSet lf = leaves(t);
    const int base = gamma_sp(t);
    std::vector<std::vector<int>> leaf_nbrs;
    std::vector<int> caps;
    for (int u : strong) {
      leaf_nbrs.push_back((t.neighbor_set(u) & lf).elements());
      const int cap = std::min(static_cast<int>(leaf_nbrs.back().size()) - 1, t.degree(u) - 2);
      caps.push_back(cap);
    }
    std::vector<int> xs(strong.size(), 0);
    while (true) {
      int total = 0;
      for (int x : xs) total += x;
      if (total > 0) {
        VertexSet keep = VertexSet::full(t.n());
        for (std::size_t i = 0; i < strong.size(); ++i)
          for (int k = 0; k < xs[i]; ++k) keep.reset(leaf_nbrs[i][k]);
        const Graph reduced = induced_subgraph(t, keep).graph;
        if (gamma_sp(reduced) != base - total) {
          out.push_back("deleting " + std::to_string(total) +
                        " strong-support leaves did not lower gamma_sp by that amount");
          return true;
        }
      }
      std::size_t pos = 0;
      while (pos < xs.size() && xs[pos] == caps[pos]) xs[pos++] = 0;
      if (pos == xs.size()) break;
      ++xs[pos];
    }
    return true;
  });
}

void check_prop24(VerifyReport& rep, int n_hi, int workers) {
  run_over_trees(rep, 2, n_hi, workers, [](const Graph& t, std::vector<std::string>& out) {
    const auto sets = all_gamma_sp_sets(t);
    const std::set<VertexSet> lookup(sets.begin(), sets.end());
    const std::vector<int> leaf_ids = leaves(t).elements();
    for (int v : leaf_ids) {
      for (const VertexSet& s : sets) {
        VertexSet res(t.n());
        try {
          res = normalize_for_leaf(t, s, v);
        } catch (const theorem_violation& ex) {
          out.push_back(std::string(ex.what()) + " [leaf " + std::to_string(v) + ", set " +
                        s.to_string() + "]");
          continue;
        }
        if (res.count() != s.count())
          out.push_back("normalization changed the cardinality");
        else if (res.test(v))
          out.push_back("normalization left leaf " + std::to_string(v) + " inside the set");
        else if (!lookup.count(res))
          out.push_back("normalization output is not a minimum super dominating set");
      }
    }
    return true;
  });
}

// ---- checks over the T-closure members ---------------------------------

template <typename Fn>
void run_over_t_closure(VerifyReport& rep, int n_hi, Fn fn) {
  std::vector<KeyedViolation> keyed;
  if (n_hi >= 6) {
    for (const LabeledTree& lt : t_closure_labeled(n_hi)) {
      std::vector<std::string> details;
      try {
        fn(lt, details);
      } catch (const theorem_violation& ex) {
        details.push_back(ex.what());
      } catch (const std::exception& ex) {
        details.push_back(std::string("unexpected error: ") + ex.what());
      }
      ++rep.instances_checked;
      const std::string canon = canonical_form(lt.tree);
      const std::string text = emit_edge_list(lt.tree);
      for (auto& d : details) keyed.push_back({lt.tree.n(), canon, {text, std::move(d)}});
    }
  }
  finalize_violations(rep, keyed);
}

void check_obs29(VerifyReport& rep, int n_hi, int) {
  run_over_t_closure(rep, n_hi, [](const LabeledTree& lt, std::vector<std::string>& out) {
    const Graph& t = lt.tree;
    const VertexSet lf = leaves(t);
    const VertexSet sup = supports(t);
    int count_a = 0, count_b = 0, count_c = 0;
    VertexSet ab(t.n());
    for (int v = 0; v < t.n(); ++v) {
      const Status st = lt.status[v];
      if ((st == Status::C) != lf.test(v)) out.push_back("status C disagrees with leaf");
      if ((st == Status::A) != sup.test(v)) out.push_back("status A disagrees with support");
      if (st == Status::A) {
        ++count_a;
        ab.set(v);
        if (t.degree(v) != 2) out.push_back("support without degree 2");
        int cs = 0, bs = 0;
        for (int w : t.neighbors(v)) {
          cs += lt.status[w] == Status::C;
          bs += lt.status[w] == Status::B;
        }
        if (cs != 1 || bs != 1) out.push_back("support neighbors are not one C and one B");
      } else if (st == Status::B) {
        ++count_b;
        ab.set(v);
        int as = 0, others = 0;
        for (int w : t.neighbors(v)) {
          if (lt.status[w] == Status::A)
            ++as;
          else if (lt.status[w] != Status::B)
            ++others;
        }
        if (as != 1 || others != 0) out.push_back("B-vertex without exactly one A-neighbor");
      } else {
        ++count_c;
      }
    }
    if (count_a != count_b || count_b != count_c) out.push_back("status classes differ in size");
    if (!is_total_dominating(t, ab)) out.push_back("A and B vertices fail to totally dominate");
    if (ab.count() != gamma_t(t)) out.push_back("A and B vertices miss the gamma_t optimum");
  });
}

void check_lem210(VerifyReport& rep, int n_hi, int) {
  run_over_t_closure(rep, n_hi, [](const LabeledTree& lt, std::vector<std::string>& out) {
    const Graph& t = lt.tree;
    const int n = t.n();
    const int want = gamma_t(t) - 1;
    const VertexSet lf = leaves(t);
    for (int v = lf.first(); v >= 0; v = lf.next(v)) {
      bool found = false;
      // All size-want subsets containing v, by mask.
      std::uint64_t mask = (std::uint64_t{1} << want) - 1;
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (; mask < limit && !found; ) {
        if ((mask >> v) & 1) {
          bool ok = true;
          for (int w = 0; w < n && ok; ++w) {
            if (w == v) continue;
            if ((t.neighbor_set(w).mask64() & mask) == 0) ok = false;
          }
          if (ok) found = true;
        }
        const std::uint64_t c = mask & -mask;
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
      if (!found)
        out.push_back("no near-total-dominating set of size gamma_t-1 through leaf " +
                      std::to_string(v));
    }
  });
}

void check_lem211(VerifyReport& rep, int n_hi, int) {
  run_over_t_closure(rep, n_hi, [](const LabeledTree& lt, std::vector<std::string>& out) {
    if (3 * gamma_t(lt.tree) != 4 * gamma_sp(lt.tree))
      out.push_back("3*gamma_t differs from 4*gamma_sp");
  });
}

struct CheckEntry {
  const char* id;
  int n_lo;
  int cap;
  void (*run)(VerifyReport&, int, int);
};

const CheckEntry kChecks[] = {
    {"bounds", 2, 12, check_bounds},
    {"thm2.5", 2, 12, check_thm25},
    {"thm2.6", 3, 12, check_thm26},
    {"thm2.8", 2, 12, check_thm28},
    {"thm3.1", 2, 10, check_thm31},
    {"thm3.4", 2, 10, check_thm34},
    {"obs2.2", 2, 10, check_obs22},
    {"obs2.3", 2, 12, check_obs23},
    {"prop2.4", 2, 10, check_prop24},
    {"obs2.9", 6, 12, check_obs29},
    {"lem2.10", 6, 12, check_lem210},
    {"lem2.11", 6, 12, check_lem211},
};

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.push_back(c.id);
    return out;
  }();
  return ids;
}

VerifyReport verify(const std::string& theorem_id, int n_max, int workers) {
  const CheckEntry* entry = nullptr;
  for (const auto& c : kChecks)
    if (theorem_id == c.id) entry = &c;
  if (!entry) {
    std::string valid;
    for (const auto& c : kChecks) {
      if (!valid.empty()) valid += ", ";
      valid += c.id;
    }
    throw std::invalid_argument("unknown theorem id \"" + theorem_id + "\"; valid ids: " + valid);
  }
  VerifyReport rep;
  rep.theorem_id = entry->id;
  rep.n_min = entry->n_lo;
  rep.n_max = std::min(n_max, entry->cap);
  const auto start = std::chrono::steady_clock::now();
  entry->run(rep, rep.n_max, resolve_workers(workers));
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

std::vector<VerifyReport> verify_all(int n_max, int workers) {
  std::vector<VerifyReport> out;
  for (const auto& c : kChecks) out.push_back(verify(c.id, n_max, workers));
  return out;
}

nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["theorem_id"] = r.theorem_id;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["instances_checked"] = r.instances_checked;
  j["skipped_precondition"] = r.skipped_precondition;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"tree", v.tree}, {"detail", v.detail}});
  j["elapsed_ms"] = r.elapsed_ms;
  j["verdict"] = r.pass() ? "pass" : "fail";
  return j;
}

}  // namespace superdom
