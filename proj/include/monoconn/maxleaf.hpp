#pragma once

#include <vector>

#include "monoconn/graph.hpp"

namespace monoconn {

/// A spanning tree of a graph together with its leaf statistics.
struct SpanningTreeResult {
  std::vector<Edge> tree;
  int leaf_count = 0;
  int internal_count = 0;
  /// True when leaf_count is the proven optimum l(G).
  bool exact = false;
};

/// Maximum-leaf spanning tree.
///
/// For n >= 3 the optimum is n - gamma_c(G) where gamma_c is the size of a
/// minimum connected dominating set; the set is found by include/exclude
/// branch-and-bound and the tree is grown with all internal vertices inside
/// it. For n = 2 both endpoints count as leaves. Throws GraphError on
/// disconnected input or n < 2. Requires n <= 64.
SpanningTreeResult max_leaf_exact(const Graph& g);

/// Greedy lower bound: start from the smallest vertex of maximum degree and
/// repeatedly expand the tree vertex with the most neighbors outside the tree
/// (ties by smallest index), attaching all of them.
SpanningTreeResult max_leaf_greedy(const Graph& g);

/// A minimum connected dominating set as a vertex mask (n >= 1, connected).
VertexMask min_connected_dominating_set(const Graph& g);

/// Leaf/internal counts for an arbitrary edge set forming a spanning tree.
/// Throws GraphError unless `tree` is a spanning tree of g.
SpanningTreeResult describe_spanning_tree(const Graph& g, const std::vector<Edge>& tree);

/// l(G) shortcut; q(G) = n - l(G).
inline int leaf_number(const Graph& g) { return max_leaf_exact(g).leaf_count; }

}  // namespace monoconn
