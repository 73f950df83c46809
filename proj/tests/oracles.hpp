#pragma once

// Test-side oracles, kept independent of the library's solver paths:
// unpruned power-set searches straight from the definitions, a
// permutation-backtracking isomorphism test, a second tree generator
// (Prufer decoding) and a second canonical form (minimum over all roots).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "superdom/graph.hpp"

namespace oracle {

using superdom::Edge;
using superdom::Graph;

inline bool mask_dominating(const Graph& g, std::uint64_t d) {
  for (int v = 0; v < g.n(); ++v) {
    if ((d >> v) & 1) continue;
    bool hit = false;
    for (int w : g.neighbors(v))
      if ((d >> w) & 1) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline bool mask_total_dominating(const Graph& g, std::uint64_t d) {
  for (int v = 0; v < g.n(); ++v) {
    bool hit = false;
    for (int w : g.neighbors(v))
      if ((d >> w) & 1) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline bool mask_super_dominating(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.n(); ++u) {
    if ((s >> u) & 1) continue;
    bool guarded = false;
    for (int v : g.neighbors(u)) {
      if (!((s >> v) & 1)) continue;
      int outside = 0;
      bool only_u = true;
      for (int w : g.neighbors(v)) {
        if (!((s >> w) & 1)) {
          ++outside;
          if (w != u) only_u = false;
        }
      }
      if (outside == 1 && only_u) {
        guarded = true;
        break;
      }
    }
    if (!guarded) return false;
  }
  return true;
}

template <typename Pred>
int smallest_feasible(const Graph& g, Pred pred) {
  const int n = g.n();
  int best = n + 1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const int c = __builtin_popcountll(m);
    if (c < best && pred(g, m)) best = c;
  }
  return best;
}

inline int gamma(const Graph& g) { return smallest_feasible(g, mask_dominating); }
inline int gamma_t(const Graph& g) { return smallest_feasible(g, mask_total_dominating); }
inline int gamma_sp(const Graph& g) { return smallest_feasible(g, mask_super_dominating); }

// Permutation backtracking with degree pruning.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  const int n = a.n();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int x : a.neighbors(v)) {
        if (x < v && !b.has_edge(map[x], w)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        int mapped_nbrs = 0;
        for (int x : a.neighbors(v))
          if (x < v) ++mapped_nbrs;
        int back_nbrs = 0;
        for (int x : b.neighbors(w))
          if (used[x]) ++back_nbrs;
        if (mapped_nbrs != back_nbrs) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (place(v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return place(0);
}

// Standard Prufer decoding; sequences over 0..n-1 of length n-2.
inline Graph prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n, 1);
  for (int v : seq) ++deg[v];
  std::vector<Edge> es;
  std::set<int> leaves_now;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves_now.insert(v);
  for (int v : seq) {
    const int leaf = *leaves_now.begin();
    leaves_now.erase(leaves_now.begin());
    es.push_back({leaf, v});
    if (--deg[v] == 1) leaves_now.insert(v);
  }
  const int a = *leaves_now.begin();
  const int b = *std::next(leaves_now.begin());
  es.push_back({a, b});
  return Graph::from_edges(n, std::move(es));
}

// A different canonical form: minimum AHU encoding over every root.
inline std::string min_root_encoding(const Graph& g) {
  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
      if (w != parent) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
  };
  std::string best;
  for (int r = 0; r < g.n(); ++r) {
    std::string e = enc(r, -1);
    if (best.empty() || e < best) best = e;
  }
  return best;
}

// Count isomorphism classes of trees on n vertices by decoding every
// Prufer sequence and deduplicating with the min-root encoding.
inline int tree_count_by_prufer(int n) {
  if (n == 1 || n == 2) return 1;
  std::set<std::string> forms;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    forms.insert(min_root_encoding(prufer_decode(n, seq)));
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return static_cast<int>(forms.size());
}

}  // namespace oracle
