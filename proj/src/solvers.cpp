#include "superdom/solvers.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace superdom {

namespace {

constexpr int kMaskSolverLimit = 62;   // word-packed subset search
constexpr int kEnumerationLimit = 16;  // all_gamma_sp_sets budget

void require_no_isolated(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) throw std::invalid_argument("undefined parameter");
}

void require_mask_sized(const Graph& g) {
  if (g.n() > kMaskSolverLimit) throw std::invalid_argument("instance too large");
}

// v privately covers u within sbar when N(v) meets sbar exactly in {u}.
inline bool private_pair_ok(std::uint64_t v_nbrs, std::uint64_t sbar, int u) {
  const std::uint64_t inside = v_nbrs & sbar;
  if (testing::fault_relaxed_private_check.load(std::memory_order_relaxed))
    return ((inside >> u) & 1) != 0 && std::popcount(inside) <= 2;
  return inside == (std::uint64_t{1} << u);
}

bool complement_feasible(const Graph& g, std::uint64_t sbar) {
  for (std::uint64_t rest = sbar; rest;) {
    const int u = std::countr_zero(rest);
    rest &= rest - 1;
    bool guarded = false;
    for (std::uint64_t cands = g.neighbor_mask(u) & ~sbar; cands;) {
      const int v = std::countr_zero(cands);
      cands &= cands - 1;
      if (private_pair_ok(g.neighbor_mask(v), sbar, u)) {
        guarded = true;
        break;
      }
    }
    if (!guarded) return false;
  }
  return true;
}

// Calls fn on every n-bit mask with k set bits, in ascending value order,
// until fn returns true. Returns whether fn accepted a mask.
template <typename Fn>
bool for_each_subset(int n, int k, Fn fn) {
  if (k > n) return false;
  if (k == 0) return fn(std::uint64_t{0});
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    if (fn(mask)) return true;
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return false;
}

std::uint64_t closed_mask(const Graph& g, int v) {
  return g.neighbor_mask(v) | (std::uint64_t{1} << v);
}

std::uint64_t dominated_by(const Graph& g, std::uint64_t d, bool closed) {
  std::uint64_t cov = 0;
  for (std::uint64_t rest = d; rest;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    cov |= closed ? closed_mask(g, v) : g.neighbor_mask(v);
  }
  return cov;
}

// Greedy cover: pick the vertex covering the most uncovered vertices
// (lowest id on ties). Gives the upper bound that caps the subset search.
int greedy_cover_size(const Graph& g, bool closed) {
  const std::uint64_t full = (g.n() == 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << g.n()) - 1;
  std::uint64_t cov = 0;
  int size = 0;
  while (cov != full) {
    int best = -1, gain = -1;
    for (int v = 0; v < g.n(); ++v) {
      const std::uint64_t add = (closed ? closed_mask(g, v) : g.neighbor_mask(v)) & ~cov;
      const int c = std::popcount(add);
      if (c > gain) {
        gain = c;
        best = v;
      }
    }
    cov |= closed ? closed_mask(g, best) : g.neighbor_mask(best);
    ++size;
  }
  return size;
}

VertexSet domination_witness(const Graph& g, bool closed) {
  require_no_isolated(g);
  require_mask_sized(g);
  const int n = g.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  int max_deg = 0;
  for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  const int cover_per_vertex = closed ? max_deg + 1 : max_deg;
  int lo = (n + cover_per_vertex - 1) / cover_per_vertex;
  if (!closed) lo = std::max(lo, 2);
  const int hi = greedy_cover_size(g, closed);
  for (int k = std::min(lo, hi); k <= hi; ++k) {
    std::uint64_t found = 0;
    if (for_each_subset(n, k, [&](std::uint64_t d) {
          if (dominated_by(g, d, closed) == full) {
            found = d;
            return true;
          }
          return false;
        }))
      return VertexSet::from_mask(n, found);
  }
  throw std::logic_error("domination search failed below its greedy bound");
}

void require_sp_instance(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("undefined parameter");
  require_no_isolated(g);
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
  for (int v = 0; v < g.n(); ++v)
    if (!d.test(v) && !d.intersects(g.neighbor_set(v))) return false;
  return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
  for (int v = 0; v < g.n(); ++v)
    if (!d.intersects(g.neighbor_set(v))) return false;
  return true;
}

bool is_super_dominating(const Graph& g, const VertexSet& s) {
  if (s.capacity() != g.n()) throw std::invalid_argument("set capacity mismatch");
  if (g.n() <= kMaskSolverLimit) return complement_feasible(g, s.complement().mask64());
  const VertexSet sbar = s.complement();
  const bool fault = testing::fault_relaxed_private_check.load(std::memory_order_relaxed);
  for (int u = sbar.first(); u >= 0; u = sbar.next(u)) {
    bool guarded = false;
    for (int v : g.neighbors(u)) {
      if (!s.test(v)) continue;
      const VertexSet inside = g.neighbor_set(v) & sbar;
      if (fault ? (inside.test(u) && inside.count() <= 2)
                : inside == VertexSet::singleton(g.n(), u)) {
        guarded = true;
        break;
      }
    }
    if (!guarded) return false;
  }
  return true;
}

VertexSet gamma_witness(const Graph& g) { return domination_witness(g, true); }
VertexSet gamma_t_witness(const Graph& g) { return domination_witness(g, false); }

int gamma(const Graph& g) { return gamma_witness(g).count(); }
int gamma_t(const Graph& g) { return gamma_t_witness(g).count(); }

// The complement of a super dominating set has at most floor(n/2)
// vertices, so the search runs over complements, largest first; the set
// itself is what gets enumerated, ascending, which makes the witness the
// least bit-set among the optima.
VertexSet gamma_sp_witness(const Graph& g) {
  require_sp_instance(g);
  require_mask_sized(g);
  const int n = g.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (int k = n / 2; k >= 1; --k) {
    std::uint64_t found = 0;
    if (for_each_subset(n, n - k, [&](std::uint64_t s) {
          if (complement_feasible(g, full & ~s)) {
            found = s;
            return true;
          }
          return false;
        }))
      return VertexSet::from_mask(n, found);
  }
  // A singleton complement is always feasible when no vertex is isolated.
  throw std::logic_error("super domination search failed");
}

int gamma_sp(const Graph& g) { return gamma_sp_witness(g).count(); }

std::vector<VertexSet> all_gamma_sp_sets(const Graph& g) {
  require_sp_instance(g);
  if (g.n() > kEnumerationLimit) throw std::invalid_argument("instance too large");
  const int n = g.n();
  const int value = gamma_sp(g);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<VertexSet> out;
  for_each_subset(n, value, [&](std::uint64_t s) {
    if (complement_feasible(g, full & ~s)) out.push_back(VertexSet::from_mask(n, s));
    return false;
  });
  return out;
}

SpSetAnalysis analyze_sp_set(const Graph& g, const VertexSet& s) {
  if (!is_super_dominating(g, s)) throw std::invalid_argument("set is not super dominating");
  const int n = g.n();
  SpSetAnalysis a{s, s.complement(), std::vector<VertexSet>(n, VertexSet(n)),
                  VertexSet(n), VertexSet(n), VertexSet(n)};
  for (int u = a.sbar.first(); u >= 0; u = a.sbar.next(u)) {
    for (int v : g.neighbors(u)) {
      if (!s.test(v)) continue;
      if ((g.neighbor_set(v) & a.sbar) == VertexSet::singleton(n, u)) a.epn[u].set(v);
    }
    a.p_set |= a.epn[u];
    if (a.epn[u].count() == 1) {
      a.q_set.set(u);
      a.u_set.set(a.epn[u].first());
    }
  }
  return a;
}

}  // namespace superdom
