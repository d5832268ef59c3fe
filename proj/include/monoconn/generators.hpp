#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "monoconn/graph.hpp"

namespace monoconn {

Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,n-1} centered at vertex 0.
Graph star_graph(int n);
Graph complete_graph(int n);
/// W_{n-1}: hub 0 joined to every vertex of the rim cycle 1..n-1. Requires n >= 4.
Graph wheel_graph(int n);
/// Class i occupies a consecutive block of vertices, in the given order.
Graph complete_multipartite_graph(const std::vector<int>& sizes);
Graph petersen_graph();

/// G(n, p) with a fixed 64-bit Mersenne Twister stream; identical output for
/// identical (n, p, seed) on every platform.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Uniform random labeled tree via a Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

struct FamilyParams {
  int n = 0;
  std::vector<int> sizes;
  double p = 0.5;
  std::uint64_t seed = 1;
};

/// Dispatches on a family name: path, cycle, star, complete, wheel,
/// complete_multipartite, random_gnp, random_tree, petersen.
Graph generate(std::string_view kind, const FamilyParams& params);

/// Every labeled graph on n vertices (n <= 7), in adjacency-mask order,
/// filtered to connected ones.
std::vector<Graph> all_connected_labeled(int n);

}  // namespace monoconn
