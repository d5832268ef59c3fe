#include "monoconn/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace monoconn {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
  g.nbrs_.assign(n, {});
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("vertex out of range in pair " + pair_text(a, b));
    }
    if (a == b) throw GraphError("self-loop " + pair_text(a, b));
    auto u = std::min(a, b);
    auto v = std::max(a, b);
    if (g.edge_id_[static_cast<std::size_t>(u) * n + v] >= 0) {
      throw GraphError("duplicate edge " + pair_text(a, b));
    }
    g.edge_id_[static_cast<std::size_t>(u) * n + v] = 0;
    g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (int i = 0; i < g.size(); ++i) {
    auto [u, v] = g.edges_[i];
    g.edge_id_[static_cast<std::size_t>(u) * n + v] = i;
    g.edge_id_[static_cast<std::size_t>(v) * n + u] = i;
    g.nbrs_[u].push_back(v);
    g.nbrs_[v].push_back(u);
  }
  for (auto& list : g.nbrs_) std::sort(list.begin(), list.end());
  if (n <= kMaxMaskVertices) {
    g.masks_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
      g.masks_[u] |= VertexMask{1} << v;
      g.masks_[v] |= VertexMask{1} << u;
    }
  }
  return g;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop();
    for (auto y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d < 0) throw GraphError("disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(g.order(), pairs);
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, s and t
// non-adjacent. Each vertex x is split into x_in = 2x and x_out = 2x+1 joined
// by a unit arc; unit capacities everywhere, augmenting paths by BFS.
int local_connectivity(const Graph& g, Vertex s, Vertex t) {
  const int nodes = 2 * g.order();
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(nodes);
  auto add_arc = [&](int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = g.order();
  for (Vertex x = 0; x < g.order(); ++x) {
    add_arc(2 * x, 2 * x + 1, (x == s || x == t) ? big : 1);
  }
  for (auto [u, v] : g.edges()) {
    add_arc(2 * u + 1, 2 * v, big);
    add_arc(2 * v + 1, 2 * u, big);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> via(nodes);
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      int x = queue.front();
      queue.pop();
      for (int id : out[x]) {
        if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
          via[arcs[id].to] = id;
          queue.push(arcs[id].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      int id = via[x];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      x = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

bool has_cut_vertex(const Graph& g) {
  const int n = g.order();
  if (n <= 2) return false;
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  int timer = 0;
  bool found = false;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex x, Vertex parent) {
    disc[x] = low[x] = timer++;
    int children = 0;
    for (auto y : g.neighbors(x)) {
      if (y == parent) continue;
      if (disc[y] >= 0) {
        low[x] = std::min(low[x], disc[y]);
        continue;
      }
      ++children;
      dfs(y, x);
      low[x] = std::min(low[x], low[y]);
      if (parent >= 0 && low[y] >= disc[x]) found = true;
    }
    if (parent < 0 && children > 1) found = true;
  };
  dfs(0, -1);
  return found;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    for (auto w : g.neighbors(u)) {
      if (w > v && g.adjacent(v, w)) return false;
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  if (n == 2) return true;
  int hubs = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      ++hubs;
    } else if (g.degree(v) != 1) {
      return false;
    }
  }
  return hubs == 1;
}

int dominating_vertex_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == g.order() - 1;
  return count;
}

bool degree_bound_holds(int n, int m, int max_deg) {
  if (n <= 3) throw GraphError("theorem hypothesis requires n > 3");
  // max_deg < n - (2m - 3(n-1)) / (n-3)  <=>  max_deg (n-3) < n (n-3) - (2m - 3(n-1))
  const long long lhs = 1LL * max_deg * (n - 3);
  const long long rhs = 1LL * n * (n - 3) - (2LL * m - 3LL * (n - 1));
  return lhs < rhs;
}

GraphConditionSet theorem2_conditions(const Graph& g) {
  if (g.order() <= 3) throw GraphError("theorem hypothesis requires n > 3");
  if (!is_connected(g)) throw GraphError("disconnected");
  GraphConditionSet c;
  c.diameter = diameter(g);
  c.max_degree = max_degree(g);
  c.complement_connectivity = vertex_connectivity(complement(g));
  c.complement_4_connected = c.complement_connectivity >= 4;
  c.triangle_free = is_triangle_free(g);
  c.degree_bound_holds = degree_bound_holds(g.order(), g.size(), c.max_degree);
  c.diameter_ge_3 = c.diameter >= 3;
  c.has_cut_vertex = has_cut_vertex(g);
  return c;
}

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw GraphError("edge list: malformed header, expected \"n m\"");
  }
  std::vector<std::pair<int, int>> pairs;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    }
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw GraphError("edge list: trailing content \"" + rest + "\"");
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace monoconn
