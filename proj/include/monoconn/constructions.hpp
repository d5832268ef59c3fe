#pragma once

#include <vector>

#include "monoconn/coloring.hpp"
#include "monoconn/graph.hpp"
#include "monoconn/maxleaf.hpp"

namespace monoconn {

struct ConstructedColoring {
  Graph graph;
  TotalColoring coloring;
};

/// Color 0 on the tree's edges and internal vertices; every leaf and every
/// non-tree edge gets its own color 1, 2, ... (vertices first, then edges,
/// each in index order). Uses m - n + 2 + l(T) colors.
TotalColoring tree_based_tmc_coloring(const Graph& g, const SpanningTreeResult& tree);

/// Complete multipartite K_{n_1,...,n_r} with n_1 >= ... >= n_r and its
/// extremal coloring with m + r - t colors, t = #classes of size >= 2.
ConstructedColoring multipartite_tmc_coloring(const std::vector<int>& sizes);

/// Wheel W_{n-1}, n >= 5, colored through the spanning star at the hub
/// (m + 1 colors).
ConstructedColoring wheel_tmc_coloring(int n);

/// K_n with all m + n items distinct.
ConstructedColoring complete_tmc_coloring(int n);

}  // namespace monoconn
