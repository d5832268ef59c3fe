#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monoconn/graph.hpp"

namespace monoconn {

using Color = int;

/// Colors for every vertex (by vertex id) and every edge (by Graph edge
/// index). Color ids are arbitrary non-negative integers.
struct TotalColoring {
  std::vector<Color> vertex_color;
  std::vector<Color> edge_color;

  friend bool operator==(const TotalColoring&, const TotalColoring&) = default;
};

struct EdgeColoring {
  std::vector<Color> color;
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

struct VertexColoring {
  std::vector<Color> color;
  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

int color_count(const TotalColoring& c);
int color_count(const EdgeColoring& c);
int color_count(const VertexColoring& c);

/// Outcome of a connectivity check; `uncovered` names one failing pair.
struct VerifyResult {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> uncovered;

  explicit operator bool() const { return ok; }
};

class ColoringError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Every pair joined by a path whose edges and internal vertices share a
/// color. Adjacent pairs always pass. Throws ColoringError on a domain
/// mismatch.
VerifyResult verify_tmc(const Graph& g, const TotalColoring& coloring);

/// Every pair joined by a path whose edges share a color.
VerifyResult verify_mc(const Graph& g, const EdgeColoring& coloring);

/// Every pair joined by a path whose internal vertices share a color.
VerifyResult verify_mvc(const Graph& g, const VertexColoring& coloring);

/// Structure of one color class: the edges of that color plus the vertices
/// of that color, with edge endpoints included as vertices.
struct ColorClass {
  Color color = 0;
  std::vector<int> edges;          // edge indices
  std::vector<Vertex> vertices;    // vertices of the class subgraph
  std::vector<Vertex> colored;     // vertices carrying this color
  std::vector<Vertex> internal;    // class-subgraph degree >= 2
  std::vector<Vertex> leaves;      // class-subgraph degree == 1
  bool is_tree = false;
  bool internal_vertices_all_colored_c = false;
  bool is_nontrivial = false;
  /// m' - 1 + q' for nontrivial tree classes, 0 otherwise.
  int waste = 0;
};

struct ColorClassReport {
  std::vector<ColorClass> classes;  // ascending color
  int color_count = 0;
  int total_waste = 0;
  /// Any two nontrivial tree classes share at most one vertex.
  bool is_simple = true;
  /// Leaves of every nontrivial tree carry pairwise distinct colors, none
  /// equal to the tree's color.
  bool leaves_distinctly_colored = true;
  /// Every class is a single item or a nontrivial tree colored exactly on
  /// its edges and internal vertices. When set,
  /// color_count + total_waste = m + n.
  bool bookkeeping_exact = true;
  bool tmc_verified = false;
};

ColorClassReport analyze_color_classes(const Graph& g, const TotalColoring& coloring);

}  // namespace monoconn
