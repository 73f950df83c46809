#include "superdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "superdom/errors.hpp"

namespace superdom {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("vertex id out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  g.nbr_.assign(n, VertexSet(n));
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.nbr_[u].set(v);
    g.nbr_[v].set(u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return nbr_[u].test(v);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(es));
}

Graph star_graph(int leaf_count) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaf_count; ++i) es.push_back({0, i});
  return Graph::from_edges(leaf_count + 1, std::move(es));
}

Graph single_vertex() { return Graph::from_edges(1, {}); }

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
  return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g);
}

VertexSet leaves(const Graph& g) {
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) out.set(v);
  return out;
}

VertexSet supports(const Graph& g) {
  VertexSet lf = leaves(g);
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (lf.intersects(g.neighbor_set(v))) out.set(v);
  return out;
}

VertexSet strong_supports(const Graph& g) {
  VertexSet lf = leaves(g);
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v)
    if ((g.neighbor_set(v) & lf).count() >= 2) out.set(v);
  return out;
}

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph not connected");
}

// Farthest vertex from src, lowest id among ties.
std::pair<int, int> farthest(const Graph& g, int src) {
  auto dist = bfs_distances(g, src);
  int best = src, bd = 0;
  for (int v = 0; v < g.n(); ++v)
    if (dist[v] > bd) {
      bd = dist[v];
      best = v;
    }
  return {best, bd};
}

std::vector<int> shortest_path(const Graph& g, int from, int to) {
  std::vector<int> parent(g.n(), -1);
  std::deque<int> queue{from};
  std::vector<char> seen(g.n(), 0);
  seen[from] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

int diameter(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  require_connected(g);
  if (is_tree(g)) {
    int a = farthest(g, 0).first;
    return farthest(g, a).second;
  }
  int best = 0;
  for (int v = 0; v < g.n(); ++v) {
    auto dist = bfs_distances(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::vector<int> longest_path(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  require_connected(g);
  std::vector<int> path;
  if (is_tree(g)) {
    int a = farthest(g, 0).first;
    int b = farthest(g, a).first;
    path = shortest_path(g, a, b);
  } else {
    const int diam = diameter(g);
    for (int u = 0; u < g.n() && path.empty(); ++u) {
      auto dist = bfs_distances(g, u);
      for (int v = 0; v < g.n(); ++v)
        if (dist[v] == diam) {
          path = shortest_path(g, u, v);
          break;
        }
    }
  }
  if (path.size() > 1 && path.back() < path.front()) std::reverse(path.begin(), path.end());
  return path;
}

Graph subdivide(const Graph& g, const std::vector<Edge>& es) {
  std::set<Edge> seen;
  for (auto [u, v] : es) {
    if (u > v) std::swap(u, v);
    if (!g.has_edge(u, v) || !seen.insert({u, v}).second)
      throw std::invalid_argument("invalid subdivision set");
  }
  std::vector<Edge> out;
  out.reserve(g.m() + es.size());
  for (auto e : g.edges()) {
    Edge key = e;
    if (!seen.count(key)) out.push_back(e);
  }
  int next = g.n();
  for (auto [u, v] : es) {
    if (u > v) std::swap(u, v);
    out.push_back({u, next});
    out.push_back({next, v});
    ++next;
  }
  return Graph::from_edges(next, std::move(out));
}

Graph corona(const Graph& h) {
  if (h.n() == 0) throw std::invalid_argument("empty graph");
  std::vector<Edge> es = h.edges();
  for (int v = 0; v < h.n(); ++v) es.push_back({v, h.n() + v});
  return Graph::from_edges(2 * h.n(), std::move(es));
}

Graph add_pendant(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex id out of range");
  std::vector<Edge> es = g.edges();
  es.push_back({v, g.n()});
  return Graph::from_edges(g.n() + 1, std::move(es));
}

namespace {

// Subtree sizes from an arbitrary root; iterative to keep deep paths safe.
std::vector<int> subtree_sizes(const Graph& g, int root, std::vector<int>& parent) {
  int n = g.n();
  parent.assign(n, -1);
  std::vector<int> order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : g.neighbors(v))
      if (parent[w] < 0) {
        parent[w] = v;
        order.push_back(w);
      }
  }
  std::vector<int> size(n, 1);
  for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  parent[root] = -1;
  return size;
}

std::vector<int> centroids(const Graph& g) {
  int n = g.n();
  std::vector<int> parent;
  auto size = subtree_sizes(g, 0, parent);
  int best = n + 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int widest = n - size[v];
    for (int w : g.neighbors(v))
      if (parent[w] == v) widest = std::max(widest, size[w]);
    if (widest < best) {
      best = widest;
      out.assign(1, v);
    } else if (widest == best) {
      out.push_back(v);
    }
  }
  return out;
}

std::string rooted_encoding(const Graph& g, int root) {
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
  return enc(root, -1);
}

}  // namespace

std::string canonical_form(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("canonical form requires a tree");
  auto cs = centroids(g);
  std::string best = rooted_encoding(g, cs[0]);
  for (std::size_t i = 1; i < cs.size(); ++i) best = std::min(best, rooted_encoding(g, cs[i]));
  return best;
}

VertexSet side_of_edge(const Graph& g, int avoid_u, int avoid_v, int from) {
  VertexSet out(g.n());
  std::deque<int> queue{from};
  out.set(from);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if ((v == avoid_u && w == avoid_v) || (v == avoid_v && w == avoid_u)) continue;
      if (!out.test(w)) {
        out.set(w);
        queue.push_back(w);
      }
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> to_old = keep.elements();
  std::vector<int> to_new(g.n(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (to_new[u] >= 0 && to_new[v] >= 0) es.push_back({to_new[u], to_new[v]});
  return {Graph::from_edges(static_cast<int>(to_old.size()), std::move(es)), std::move(to_old)};
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw parse_error(lineno, "expected header \"n m\"");
      std::string extra;
      if (ls >> extra) throw parse_error(lineno, "trailing tokens after header");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) throw parse_error(lineno, "expected edge \"u v\"");
    std::string extra;
    if (ls >> extra) throw parse_error(lineno, "trailing tokens after edge");
    if (static_cast<int>(edges.size()) >= m) throw parse_error(lineno, "more edges than declared");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error(lineno, "vertex id out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
    if (u == v) throw parse_error(lineno, "self-loop at vertex " + std::to_string(u));
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw parse_error(lineno, "duplicate edge " + std::to_string(key.first) + " " +
                                    std::to_string(key.second));
    edges.push_back(key);
  }
  if (n < 0) throw parse_error(lineno, "missing header \"n m\"");
  if (static_cast<int>(edges.size()) != m)
    throw parse_error(lineno, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  return Graph::from_edges(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace superdom
