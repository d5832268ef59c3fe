#include "monoconn/constructions.hpp"

#include <algorithm>

#include "monoconn/generators.hpp"

namespace monoconn {

namespace {

/// Shared color 0 on `edges` and `centers`; consecutive fresh colors on
/// everything else, vertices before edges.
TotalColoring shared_plus_fresh(const Graph& g, const std::vector<int>& edges,
                                const std::vector<Vertex>& centers) {
  TotalColoring c;
  c.vertex_color.assign(g.order(), -1);
  c.edge_color.assign(g.size(), -1);
  for (int id : edges) c.edge_color[id] = 0;
  for (Vertex v : centers) c.vertex_color[v] = 0;
  Color next = 1;
  for (auto& color : c.vertex_color) {
    if (color < 0) color = next++;
  }
  for (auto& color : c.edge_color) {
    if (color < 0) color = next++;
  }
  return c;
}

TotalColoring all_distinct(const Graph& g) {
  auto c = shared_plus_fresh(g, {}, {});
  for (auto& color : c.vertex_color) --color;
  for (auto& color : c.edge_color) --color;
  return c;
}

}  // namespace

TotalColoring tree_based_tmc_coloring(const Graph& g, const SpanningTreeResult& tree) {
  const int n = g.order();
  if (n == 1) {
    if (!tree.tree.empty()) throw GraphError("tree has edges on a single vertex");
    return TotalColoring{{0}, {}};
  }
  // Validates: spanning, acyclic, subgraph.
  describe_spanning_tree(g, tree.tree);
  std::vector<int> degree(n, 0);
  std::vector<int> edges;
  for (auto [u, v] : tree.tree) {
    ++degree[u];
    ++degree[v];
    edges.push_back(g.edge_index(u, v));
  }
  std::vector<Vertex> internal;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] >= 2) internal.push_back(v);
  }
  return shared_plus_fresh(g, edges, internal);
}

ConstructedColoring multipartite_tmc_coloring(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw GraphError("complete multipartite needs r >= 2 classes");
  if (!std::is_sorted(sizes.begin(), sizes.end(), std::greater<>())) {
    throw GraphError("class sizes must be non-increasing");
  }
  auto graph = complete_multipartite_graph(sizes);
  const int r = static_cast<int>(sizes.size());
  const int t = static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](int s) { return s >= 2; }));
  if (t == r) {
    return {graph, tree_based_tmc_coloring(graph, max_leaf_exact(graph))};
  }
  // Star from the first singleton-class vertex to every vertex of the
  // classes of size >= 2, which occupy the leading block 0..big-1.
  int big = 0;
  for (int i = 0; i < t; ++i) big += sizes[i];
  const Vertex center = big;
  std::vector<int> edges;
  for (Vertex v = 0; v < big; ++v) edges.push_back(graph.edge_index(center, v));
  if (edges.empty()) return {graph, all_distinct(graph)};  // t = 0: K_r
  return {graph, shared_plus_fresh(graph, edges, {center})};
}

ConstructedColoring wheel_tmc_coloring(int n) {
  if (n < 5) throw GraphError("wheel construction needs n >= 5");
  auto graph = wheel_graph(n);
  std::vector<Edge> star;
  for (Vertex v = 1; v < n; ++v) star.push_back({0, v});
  return {graph, tree_based_tmc_coloring(graph, describe_spanning_tree(graph, star))};
}

ConstructedColoring complete_tmc_coloring(int n) {
  auto graph = complete_graph(n);
  return {graph, all_distinct(graph)};
}

}  // namespace monoconn
