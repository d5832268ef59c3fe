#include "monoconn/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace monoconn {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// Symmetric pair table seeded with adjacency.
class PairCover {
 public:
  explicit PairCover(const Graph& g) : n_(g.order()), cell_(static_cast<std::size_t>(n_) * n_, 0) {
    for (auto [u, v] : g.edges()) mark(u, v);
  }
  void mark(int u, int v) {
    cell_[static_cast<std::size_t>(u) * n_ + v] = 1;
    cell_[static_cast<std::size_t>(v) * n_ + u] = 1;
  }
  void mark_all(const std::vector<int>& group) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) mark(group[i], group[j]);
    }
  }
  VerifyResult result() const {
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (!cell_[static_cast<std::size_t>(u) * n_ + v]) return {false, std::pair{u, v}};
      }
    }
    return {true, std::nullopt};
  }

 private:
  int n_;
  std::vector<char> cell_;
};

void check_domain(const Graph& g, std::size_t vertices, std::size_t edges, bool need_v,
                  bool need_e) {
  if (need_v && vertices != static_cast<std::size_t>(g.order())) {
    throw ColoringError("coloring has " + std::to_string(vertices) + " vertex colors, graph has " +
                        std::to_string(g.order()) + " vertices");
  }
  if (need_e && edges != static_cast<std::size_t>(g.size())) {
    throw ColoringError("coloring has " + std::to_string(edges) + " edge colors, graph has " +
                        std::to_string(g.size()) + " edges");
  }
}

template <typename Range>
int distinct(const Range& a, const Range& b) {
  std::set<Color> seen(a.begin(), a.end());
  seen.insert(b.begin(), b.end());
  return static_cast<int>(seen.size());
}

std::map<Color, std::vector<int>> edges_by_color(const std::vector<Color>& edge_color) {
  std::map<Color, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(edge_color.size()); ++i) out[edge_color[i]].push_back(i);
  return out;
}

}  // namespace

int color_count(const TotalColoring& c) { return distinct(c.vertex_color, c.edge_color); }
int color_count(const EdgeColoring& c) { return distinct(c.color, std::vector<Color>{}); }
int color_count(const VertexColoring& c) { return distinct(c.color, std::vector<Color>{}); }

VerifyResult verify_tmc(const Graph& g, const TotalColoring& coloring) {
  check_domain(g, coloring.vertex_color.size(), coloring.edge_color.size(), true, true);
  const int n = g.order();
  PairCover cover(g);
  for (const auto& [color, ids] : edges_by_color(coloring.edge_color)) {
    auto inside = [&](int v) { return coloring.vertex_color[v] == color; };
    DisjointSets sets(n);
    for (int id : ids) {
      const auto [u, v] = g.edge(id);
      if (inside(u) && inside(v)) sets.unite(u, v);
    }
    // touching[root] = endpoints with a color-c edge into that component.
    std::map<int, std::set<int>> touching;
    for (int id : ids) {
      const auto [u, v] = g.edge(id);
      if (inside(v)) touching[sets.find(v)].insert(u);
      if (inside(u)) touching[sets.find(u)].insert(v);
    }
    for (const auto& [root, group] : touching) {
      cover.mark_all(std::vector<int>(group.begin(), group.end()));
    }
  }
  return cover.result();
}

VerifyResult verify_mc(const Graph& g, const EdgeColoring& coloring) {
  check_domain(g, 0, coloring.color.size(), false, true);
  const int n = g.order();
  PairCover cover(g);
  for (const auto& [color, ids] : edges_by_color(coloring.color)) {
    DisjointSets sets(n);
    std::set<int> touched;
    for (int id : ids) {
      sets.unite(g.edge(id).u, g.edge(id).v);
      touched.insert(g.edge(id).u);
      touched.insert(g.edge(id).v);
    }
    std::map<int, std::vector<int>> groups;
    for (int v : touched) groups[sets.find(v)].push_back(v);
    for (const auto& [root, group] : groups) cover.mark_all(group);
  }
  return cover.result();
}

VerifyResult verify_mvc(const Graph& g, const VertexColoring& coloring) {
  check_domain(g, coloring.color.size(), 0, true, false);
  const int n = g.order();
  PairCover cover(g);
  std::map<Color, std::vector<int>> by_color;
  for (int v = 0; v < n; ++v) by_color[coloring.color[v]].push_back(v);
  for (const auto& [color, members] : by_color) {
    DisjointSets sets(n);
    for (int v : members) {
      for (int w : g.neighbors(v)) {
        if (coloring.color[w] == color) sets.unite(v, w);
      }
    }
    std::map<int, std::set<int>> touching;
    for (int v : members) {
      for (int w : g.neighbors(v)) touching[sets.find(v)].insert(w);
    }
    for (const auto& [root, group] : touching) {
      cover.mark_all(std::vector<int>(group.begin(), group.end()));
    }
  }
  return cover.result();
}

ColorClassReport analyze_color_classes(const Graph& g, const TotalColoring& coloring) {
  check_domain(g, coloring.vertex_color.size(), coloring.edge_color.size(), true, true);
  const int n = g.order();
  ColorClassReport report;
  report.tmc_verified = verify_tmc(g, coloring).ok;
  report.color_count = color_count(coloring);

  std::map<Color, ColorClass> classes;
  for (int v = 0; v < n; ++v) {
    auto& cls = classes[coloring.vertex_color[v]];
    cls.colored.push_back(v);
  }
  for (int id = 0; id < g.size(); ++id) classes[coloring.edge_color[id]].edges.push_back(id);

  for (auto& [color, cls] : classes) {
    cls.color = color;
    std::map<int, int> deg;
    for (int v : cls.colored) deg[v] += 0;
    DisjointSets sets(n);
    int merges = 0;
    for (int id : cls.edges) {
      const auto [u, v] = g.edge(id);
      ++deg[u];
      ++deg[v];
      merges += sets.unite(u, v);
    }
    for (const auto& [v, d] : deg) {
      cls.vertices.push_back(v);
      if (d >= 2) cls.internal.push_back(v);
      if (d == 1) cls.leaves.push_back(v);
    }
    const int vcount = static_cast<int>(cls.vertices.size());
    const int ecount = static_cast<int>(cls.edges.size());
    // Connected and acyclic: every edge merged two components and exactly
    // one component remains.
    cls.is_tree = merges == ecount && vcount == ecount + 1;
    cls.internal_vertices_all_colored_c = std::all_of(
        cls.internal.begin(), cls.internal.end(),
        [&](int v) { return coloring.vertex_color[v] == color; });
    cls.is_nontrivial = ecount >= 2;
    if (cls.is_nontrivial && cls.is_tree) {
      cls.waste = ecount - 1 + static_cast<int>(cls.internal.size());
    }
    report.total_waste += cls.waste;

    const int items = ecount + static_cast<int>(cls.colored.size());
    const bool exact_tree = cls.is_nontrivial && cls.is_tree && cls.colored == cls.internal;
    if (!(items == 1 || exact_tree)) report.bookkeeping_exact = false;

    if (cls.is_nontrivial && cls.is_tree) {
      std::set<Color> leaf_colors;
      for (int v : cls.leaves) {
        const Color c = coloring.vertex_color[v];
        if (c == color || !leaf_colors.insert(c).second) report.leaves_distinctly_colored = false;
      }
    }
  }

  for (auto& [color, cls] : classes) report.classes.push_back(std::move(cls));

  std::vector<const ColorClass*> trees;
  for (const auto& cls : report.classes) {
    if (cls.is_nontrivial && cls.is_tree) trees.push_back(&cls);
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(trees[i]->vertices.begin(), trees[i]->vertices.end(),
                            trees[j]->vertices.begin(), trees[j]->vertices.end(),
                            std::back_inserter(common));
      if (common.size() > 1) report.is_simple = false;
    }
  }
  return report;
}

}  // namespace monoconn
