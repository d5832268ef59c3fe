#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monoconn/coloring.hpp"
#include "monoconn/graph.hpp"

namespace monoconn {

/// One subtree of a tree system.
struct SystemTree {
  std::vector<int> edges;        // edge indices into the host graph
  std::vector<Vertex> vertices;  // ascending
  std::vector<Vertex> internal;  // tree-degree >= 2, ascending

  int edge_count() const { return static_cast<int>(edges.size()); }
  int internal_count() const { return static_cast<int>(internal.size()); }
  /// Colors forgone by giving edges and internal vertices one color.
  int total_waste() const { return edge_count() - 1 + internal_count(); }
  /// Colors forgone when only the edges share a color.
  int edge_waste() const { return edge_count() - 1; }
};

/// A family of subtrees, each with at least two edges, that together cover
/// every non-adjacent vertex pair.
///
/// A system with pairwise disjoint edge sets and pairwise disjoint internal
/// sets induces a total coloring with m + n - total_waste() colors in which
/// every pair is joined by a total monochromatic path. Conversely a simple
/// extremal coloring (any two nontrivial color trees share at most one
/// vertex) always exists, and its color trees form such a system. The exact
/// tmc solver therefore minimizes total_waste() over systems whose trees
/// pairwise share at most one vertex.
struct TreeSystem {
  std::vector<SystemTree> trees;

  int total_waste() const;
  int edge_waste() const;
  int internal_sum() const;
};

enum class SystemKind {
  total,  // edge-disjoint and internal-disjoint
  edge,   // edge-disjoint only
};

/// Checks the tree-system invariants; returns an empty string when valid,
/// otherwise a description of the first violation.
std::string validate_tree_system(const Graph& g, const TreeSystem& system, SystemKind kind);

/// Colors tree i with color i on its edges (and internal vertices for
/// SystemKind::total); everything else receives fresh consecutive colors,
/// vertices first.
TotalColoring coloring_from_system(const Graph& g, const TreeSystem& system);
EdgeColoring edge_coloring_from_system(const Graph& g, const TreeSystem& system);

enum class Method { tree_system, naive_partition, shortcut };

std::string to_string(Method method);

using Witness = std::variant<TotalColoring, EdgeColoring, VertexColoring>;

struct SolverReport {
  int value = 0;
  Witness witness;
  std::optional<TreeSystem> system;
  std::uint64_t nodes_explored = 0;
  Method method = Method::shortcut;
  /// Bounds that framed the search: the value the search started from and
  /// the admissible lower bound at the root.
  int lower_bound = 0;
  int upper_bound = 0;
};

/// Size guards. Exceeding one raises SolverRangeError; nothing degrades
/// silently to a heuristic.
struct SolverLimits {
  int max_exact_n = 12;
  int max_naive_items = 12;
  int max_naive_edges = 10;
  int max_mvc_n = 10;
  /// Node budget for the tree-system search; 0 means unlimited.
  std::uint64_t max_nodes = 0;

  /// Defaults, with max_exact_n taken from MONO_MAX_EXACT_N when set.
  static SolverLimits from_env();
};

class SolverRangeError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// tmc(G) = m + n - min total waste over tree systems.
SolverReport tmc_exact(const Graph& g, const SolverLimits& limits = SolverLimits::from_env());

/// Definition-level oracle: tries every partition of the m + n items into
/// color classes, from m + n classes downwards, and returns the first class
/// count with a verified coloring. Requires m + n <= max_naive_items.
SolverReport tmc_naive(const Graph& g, const SolverLimits& limits = SolverLimits::from_env());

/// mc(G) = m - min edge waste over edge-disjoint tree systems.
SolverReport mc_exact(const Graph& g, const SolverLimits& limits = SolverLimits::from_env());

/// Partition oracle over edge colorings; requires m <= max_naive_edges.
SolverReport mc_naive(const Graph& g, const SolverLimits& limits = SolverLimits::from_env());

/// n when diam(G) <= 2; otherwise vertex partitions with at most n - d + 2
/// classes, largest class count first.
SolverReport mvc_exact(const Graph& g, const SolverLimits& limits = SolverLimits::from_env());

struct NamedBounds {
  int leaf_number = 0;
  int tmc_lower = 0;                // m - n + 2 + l(G)
  std::optional<int> tmc_upper;     // m + n when complete, else mc + l(G)
  int mvc_lower = 0;                // l(G) + 1
  int mvc_upper = 0;                // n - d + 2
  std::optional<int> sum_bound;     // mc + mvc
};

/// Requires a connected graph with n >= 2.
NamedBounds bounds(const Graph& g, std::optional<int> mc = std::nullopt,
                   std::optional<int> mvc = std::nullopt);

}  // namespace monoconn
