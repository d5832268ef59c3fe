#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monoconn {

using Vertex = int;

/// Bitmask over vertices; only meaningful for graphs with at most 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored in lexicographic order; every edge has a stable index in
/// 0..m-1 which colorings use as their key.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from explicit vertex pairs. Rejects self-loops, duplicate
  /// edges and out-of-range endpoints with a GraphError naming the pair.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs));
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return u != v && edge_id_[static_cast<std::size_t>(u) * n_ + v] >= 0;
  }

  /// Index of edge {u,v} or -1.
  int edge_index(Vertex u, Vertex v) const {
    return u == v ? -1 : edge_id_[static_cast<std::size_t>(u) * n_ + v];
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

  /// Neighborhood as a bitmask. Requires order() <= 64.
  VertexMask neighbor_mask(Vertex v) const { return masks_[v]; }
  bool has_masks() const { return !masks_.empty() || n_ == 0; }

  bool is_complete() const { return 2LL * size() == 1LL * n_ * (n_ - 1); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<int> edge_id_;
  std::vector<VertexMask> masks_;
};

bool is_connected(const Graph& g);

/// Eccentricity-maximum over all pairs. Throws GraphError("disconnected").
int diameter(const Graph& g);

int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

Graph complement(const Graph& g);

/// Minimum number of vertices whose removal disconnects g or leaves a single
/// vertex. 0 for disconnected graphs, n-1 for K_n. Uses unit vertex-capacity
/// max-flow between non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// Requires a connected graph.
bool has_cut_vertex(const Graph& g);
bool is_triangle_free(const Graph& g);

/// True when g is a tree (connected, m = n-1).
bool is_tree(const Graph& g);

/// One vertex of degree n-1 and all others of degree 1 (n >= 3), or K_2.
bool is_star(const Graph& g);

/// Vertices with degree n-1.
int dominating_vertex_count(const Graph& g);

/// Sufficient conditions under which tmc(G) = m - n + 2 + l(G).
struct GraphConditionSet {
  bool complement_4_connected = false;
  bool triangle_free = false;
  bool degree_bound_holds = false;
  bool diameter_ge_3 = false;
  bool has_cut_vertex = false;

  int diameter = 0;
  int max_degree = 0;
  int complement_connectivity = 0;

  bool any() const {
    return complement_4_connected || triangle_free || degree_bound_holds || diameter_ge_3 ||
           has_cut_vertex;
  }
};

/// Exact test of max_degree < n - (2m - 3(n-1)) / (n-3), n > 3.
bool degree_bound_holds(int n, int m, int max_deg);

/// Requires n > 3 and a connected graph.
GraphConditionSet theorem2_conditions(const Graph& g);

/// Plain text "n m" header followed by m lines "u v".
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

}  // namespace monoconn
