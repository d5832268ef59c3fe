#include "monoconn/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_map>

#include "monoconn/maxleaf.hpp"
#include "monoconn/partitions.hpp"

namespace monoconn {

int TreeSystem::total_waste() const {
  int sum = 0;
  for (const auto& t : trees) sum += t.total_waste();
  return sum;
}

int TreeSystem::edge_waste() const {
  int sum = 0;
  for (const auto& t : trees) sum += t.edge_waste();
  return sum;
}

int TreeSystem::internal_sum() const {
  int sum = 0;
  for (const auto& t : trees) sum += t.internal_count();
  return sum;
}

std::string to_string(Method method) {
  switch (method) {
    case Method::tree_system:
      return "tree_system";
    case Method::naive_partition:
      return "naive_partition";
    case Method::shortcut:
      return "shortcut";
  }
  return "unknown";
}

SolverLimits SolverLimits::from_env() {
  SolverLimits limits;
  if (const char* raw = std::getenv("MONO_MAX_EXACT_N")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0 && value <= kMaxMaskVertices) {
      limits.max_exact_n = static_cast<int>(value);
    }
  }
  return limits;
}

std::string validate_tree_system(const Graph& g, const TreeSystem& system, SystemKind kind) {
  const int n = g.order();
  std::vector<int> edge_owner(g.size(), -1);
  std::vector<int> internal_owner(n, -1);
  std::vector<std::vector<char>> together(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < system.trees.size(); ++i) {
    const auto& tree = system.trees[i];
    const std::string label = "tree " + std::to_string(i) + ": ";
    if (tree.edge_count() < 2) return label + "fewer than two edges";
    std::vector<int> deg(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int id : tree.edges) {
      if (id < 0 || id >= g.size()) return label + "edge index out of range";
      if (edge_owner[id] >= 0) return label + "shares an edge with tree " + std::to_string(edge_owner[id]);
      edge_owner[id] = static_cast<int>(i);
      const auto [u, v] = g.edge(id);
      ++deg[u];
      ++deg[v];
      if (find(u) == find(v)) return label + "contains a cycle";
      parent[find(u)] = find(v);
    }
    std::vector<Vertex> vertices;
    std::vector<Vertex> internal;
    for (int v = 0; v < n; ++v) {
      if (deg[v] > 0) vertices.push_back(v);
      if (deg[v] >= 2) internal.push_back(v);
    }
    if (vertices != tree.vertices) return label + "vertex list does not match its edges";
    if (internal != tree.internal) return label + "internal set differs from tree-degree >= 2 vertices";
    if (static_cast<int>(vertices.size()) != tree.edge_count() + 1) return label + "not connected";
    if (kind == SystemKind::total) {
      for (int v : internal) {
        if (internal_owner[v] >= 0) {
          return label + "vertex " + std::to_string(v) + " internal in two trees";
        }
        internal_owner[v] = static_cast<int>(i);
      }
    }
    for (int a : vertices) {
      for (int b : vertices) together[a][b] = 1;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && !together[u][v]) {
        return "pair (" + std::to_string(u) + "," + std::to_string(v) + ") not covered";
      }
    }
  }
  return {};
}

TotalColoring coloring_from_system(const Graph& g, const TreeSystem& system) {
  TotalColoring c;
  c.vertex_color.assign(g.order(), -1);
  c.edge_color.assign(g.size(), -1);
  Color next = 0;
  for (const auto& tree : system.trees) {
    for (int id : tree.edges) c.edge_color[id] = next;
    for (int v : tree.internal) c.vertex_color[v] = next;
    ++next;
  }
  for (auto& color : c.vertex_color) {
    if (color < 0) color = next++;
  }
  for (auto& color : c.edge_color) {
    if (color < 0) color = next++;
  }
  return c;
}

EdgeColoring edge_coloring_from_system(const Graph& g, const TreeSystem& system) {
  EdgeColoring c;
  c.color.assign(g.size(), -1);
  Color next = 0;
  for (const auto& tree : system.trees) {
    for (int id : tree.edges) c.color[id] = next;
    ++next;
  }
  for (auto& color : c.color) {
    if (color < 0) color = next++;
  }
  return c;
}

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }
int lowest(VertexMask mask) { return std::countr_zero(mask); }
int count(VertexMask mask) { return std::popcount(mask); }

struct Block {
  VertexMask set = 0;
  VertexMask core = 0;  // internal vertices; unused for edge systems
};

/// Exact minimum-waste search over families of vertex sets that pairwise
/// share at most one vertex, each inducing a connected subgraph and jointly
/// containing every non-adjacent pair.
///
/// Cost of a set S is |S| - 2 for edge systems, and |S| - 2 + |I| for total
/// systems where I is an inclusion-minimal connected dominating set of G[S]
/// avoiding every vertex already used as a core. Branching covers the
/// lexicographically least uncovered non-adjacent pair; candidates are tried
/// by increasing cost.
///
/// Lower bound: in the final family, let D be the union of its sets and c
/// its number of connected components (as a hypergraph). Then
///   sum (|S| - 1) = |D| - c + excess,
/// where excess >= 0 never decreases as sets are added. Every vertex in a
/// non-adjacent pair lies in D, and every non-adjacent pair lies in one
/// component, so |D| - c >= N0 - c0 with N0, c0 measured on the partial
/// family joined with the complement edges.
class SetSystemSearch {
 public:
  SetSystemSearch(const Graph& g, SystemKind kind, std::uint64_t max_nodes)
      : g_(g), kind_(kind), n_(g.order()), max_nodes_(max_nodes) {
    all_ = n_ == 64 ? ~VertexMask{0} : bit(n_) - 1;
    for (int v = 0; v < n_; ++v) {
      adj_[v] = g.neighbor_mask(v);
      nonadj_[v] = all_ & ~adj_[v] & ~bit(v);
      if (nonadj_[v]) needy_ |= bit(v);
    }
  }

  void run(int incumbent_cost, std::vector<Block> incumbent) {
    best_cost_ = incumbent_cost;
    best_ = std::move(incumbent);
    Cover cov{};
    root_bound_ = lower_bound(cov, 0, 0);
    chosen_.clear();
    if (root_bound_ < best_cost_) search(cov, 0, 0, 0);
  }

  int best_cost() const { return best_cost_; }
  const std::vector<Block>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  int root_bound() const { return root_bound_; }

 private:
  using Cover = std::array<VertexMask, kMaxMaskVertices>;

  struct Candidate {
    int cost;
    VertexMask set;
    VertexMask core;
    friend bool operator<(const Candidate& a, const Candidate& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      if (a.set != b.set) return a.set < b.set;
      return a.core < b.core;
    }
  };

  // Admissible bound on the final cost given the chosen family.
  // `cost` is the chosen cost, `core_extra` = sum over chosen of (|I| - 1).
  int lower_bound(const Cover& cov, int cost, int core_extra) const {
    VertexMask in_union = 0;
    int sum_minus_one = 0;
    for (const auto& b : chosen_) {
      in_union |= b.set;
      sum_minus_one += count(b.set) - 1;
    }
    const int chosen_components = components(in_union, false);
    const int excess = sum_minus_one - (count(in_union) - chosen_components);
    const VertexMask domain = in_union | needy_;
    const int joined_components = components(domain, true);
    const int spanning = count(domain) - joined_components + excess;

    bool uncovered = false;
    for (int v = 0; v < n_ && !uncovered; ++v) uncovered = (nonadj_[v] & ~cov[v]) != 0;
    const int step = kind_ == SystemKind::total ? 2 : 1;
    int bound = cost + (uncovered ? step : 0);
    if (kind_ == SystemKind::total) {
      bound = std::max(bound, core_extra + spanning);
    } else {
      const int future = std::max(0, spanning - sum_minus_one);
      bound = std::max(bound, cost + (future + 1) / 2);
    }
    return bound;
  }

  // Components of `domain` under chosen-set membership, plus complement
  // edges when `with_complement` is set.
  int components(VertexMask domain, bool with_complement) const {
    int comps = 0;
    VertexMask left = domain;
    while (left) {
      VertexMask seen = bit(lowest(left));
      VertexMask frontier = seen;
      while (frontier) {
        const int x = lowest(frontier);
        frontier &= frontier - 1;
        VertexMask next = with_complement ? nonadj_[x] : 0;
        for (const auto& b : chosen_) {
          if (b.set >> x & 1) next |= b.set;
        }
        next &= domain & ~seen;
        seen |= next;
        frontier |= next;
      }
      left &= ~seen;
      ++comps;
    }
    return comps;
  }

  bool connected_within(VertexMask set) const {
    VertexMask seen = bit(lowest(set));
    VertexMask frontier = seen;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[lowest(f)];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  }

  bool dominates_within(VertexMask core, VertexMask set) const {
    VertexMask reach = core;
    for (VertexMask c = core; c; c &= c - 1) reach |= adj_[lowest(c)];
    return (set & ~reach) == 0;
  }

  // Inclusion-minimal connected dominating sets of G[set], by size.
  const std::vector<VertexMask>& minimal_cores(VertexMask set) {
    auto it = cores_.find(set);
    if (it != cores_.end()) return it->second;
    std::vector<VertexMask> found;
    std::vector<int> members;
    for (VertexMask s = set; s; s &= s - 1) members.push_back(lowest(s));
    const int k = static_cast<int>(members.size());
    std::vector<std::vector<VertexMask>> by_size(k + 1);
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
      VertexMask core = 0;
      for (int i = 0; i < k; ++i) {
        if (pick >> i & 1) core |= bit(members[i]);
      }
      by_size[count(core)].push_back(core);
    }
    for (int size = 1; size <= k; ++size) {
      for (VertexMask core : by_size[size]) {
        if (!dominates_within(core, set) || !connected_within(core)) continue;
        const bool minimal = std::none_of(found.begin(), found.end(),
                                          [&](VertexMask f) { return (f & core) == f; });
        if (minimal) found.push_back(core);
      }
    }
    return cores_.emplace(set, std::move(found)).first->second;
  }

  void search(const Cover& cov, VertexMask used_cores, int cost, int core_extra) {
    if (max_nodes_ != 0 && nodes_ >= max_nodes_) {
      throw SolverRangeError("exact solver out of range: node budget exhausted");
    }
    ++nodes_;
    int u = -1;
    int v = -1;
    for (int x = 0; x < n_; ++x) {
      const VertexMask open = nonadj_[x] & ~cov[x] & ~(bit(x + 1) - 1);
      if (open) {
        u = x;
        v = lowest(open);
        break;
      }
    }
    if (u < 0) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = chosen_;
      }
      return;
    }
    if (lower_bound(cov, cost, core_extra) >= best_cost_) return;

    std::vector<Candidate> candidates;
    const VertexMask pool = all_ & ~bit(u) & ~bit(v) & ~cov[u] & ~cov[v];
    enumerate_sets(cov, bit(u) | bit(v), pool, used_cores, cost, candidates);
    std::sort(candidates.begin(), candidates.end());

    for (const auto& cand : candidates) {
      if (cost + cand.cost >= best_cost_) break;
      Cover next = cov;
      for (VertexMask s = cand.set; s; s &= s - 1) next[lowest(s)] |= cand.set & ~bit(lowest(s));
      const int extra = kind_ == SystemKind::total ? count(cand.core) - 1 : 0;
      chosen_.push_back({cand.set, cand.core});
      if (lower_bound(next, cost + cand.cost, core_extra + extra) < best_cost_) {
        search(next, used_cores | cand.core, cost + cand.cost, core_extra + extra);
      }
      chosen_.pop_back();
    }
  }

  // Grows `set` with vertices of `pool` (ascending) that are pairwise
  // uncovered with every member; emits each connected result.
  void enumerate_sets(const Cover& cov, VertexMask set, VertexMask pool, VertexMask used_cores,
                      int cost, std::vector<Candidate>& out) {
    // Set cost only grows with the set.
    if (cost + count(set) - 2 >= best_cost_) return;
    emit(set, used_cores, cost, out);
    for (VertexMask p = pool; p; p &= p - 1) {
      const int w = lowest(p);
      const VertexMask rest = (p & ~bit(w)) & ~cov[w];
      enumerate_sets(cov, set | bit(w), rest, used_cores, cost, out);
    }
  }

  void emit(VertexMask set, VertexMask used_cores, int cost, std::vector<Candidate>& out) {
    const int base = count(set) - 2;
    if (cost + base >= best_cost_ || !connected_within(set)) return;
    if (kind_ == SystemKind::edge) {
      out.push_back({base, set, 0});
      return;
    }
    for (VertexMask core : minimal_cores(set)) {
      if (core & used_cores) continue;
      const int total = base + count(core);
      if (cost + total >= best_cost_) break;  // cores are sorted by size
      out.push_back({total, set, core});
    }
  }

  const Graph& g_;
  SystemKind kind_;
  int n_;
  std::uint64_t max_nodes_;
  VertexMask all_ = 0;
  VertexMask needy_ = 0;
  std::array<VertexMask, kMaxMaskVertices> adj_{};
  std::array<VertexMask, kMaxMaskVertices> nonadj_{};
  std::unordered_map<VertexMask, std::vector<VertexMask>> cores_;
  std::vector<Block> chosen_;
  std::vector<Block> best_;
  int best_cost_ = 0;
  int root_bound_ = 0;
  std::uint64_t nodes_ = 0;
};

/// Spanning tree of G[set]: BFS inside `core` (or inside `set` when core is
/// empty), then remaining vertices hang from their smallest core neighbor.
SystemTree build_tree(const Graph& g, VertexMask set, VertexMask core) {
  const VertexMask hub = core ? core : set;
  std::vector<Edge> edges;
  VertexMask placed = bit(lowest(hub));
  std::vector<int> queue{lowest(hub)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (VertexMask nb = g.neighbor_mask(x) & hub & ~placed; nb; nb &= nb - 1) {
      const int y = lowest(nb);
      placed |= bit(y);
      edges.push_back({std::min(x, y), std::max(x, y)});
      queue.push_back(y);
    }
  }
  for (VertexMask rest = set & ~placed; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    const int parent = lowest(g.neighbor_mask(v) & hub);
    edges.push_back({std::min(v, parent), std::max(v, parent)});
  }
  SystemTree tree;
  std::vector<int> deg(g.order(), 0);
  for (const auto& e : edges) {
    tree.edges.push_back(g.edge_index(e.u, e.v));
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  for (int v = 0; v < g.order(); ++v) {
    if (deg[v] > 0) tree.vertices.push_back(v);
    if (deg[v] >= 2) tree.internal.push_back(v);
  }
  return tree;
}

void require_solver_input(const Graph& g, int limit, const char* what) {
  if (g.order() < 1) throw GraphError("empty graph");
  if (!is_connected(g)) throw GraphError("disconnected");
  if (g.order() > limit || g.order() > kMaxMaskVertices) {
    throw SolverRangeError(std::string("exact solver out of range: ") + what + " with n = " +
                           std::to_string(g.order()) + " exceeds limit " + std::to_string(limit));
  }
}

TotalColoring distinct_total(const Graph& g) {
  TotalColoring c;
  c.vertex_color.resize(g.order());
  c.edge_color.resize(g.size());
  std::iota(c.vertex_color.begin(), c.vertex_color.end(), 0);
  std::iota(c.edge_color.begin(), c.edge_color.end(), g.order());
  return c;
}

SolverReport system_search(const Graph& g, SystemKind kind, const SolverLimits& limits) {
  const int n = g.order();
  const int m = g.size();
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  SolverReport report;
  report.method = Method::tree_system;

  // Incumbent: one spanning tree (a max-leaf tree for total systems).
  Block spanning{all, 0};
  int incumbent = n - 2;
  if (kind == SystemKind::total) {
    const auto ml = max_leaf_exact(g);
    std::vector<int> deg(n, 0);
    for (auto [a, b] : ml.tree) {
      ++deg[a];
      ++deg[b];
    }
    for (int v = 0; v < n; ++v) {
      if (deg[v] >= 2) spanning.core |= bit(v);
    }
    incumbent = n - 2 + ml.internal_count;
  }

  SetSystemSearch search(g, kind, limits.max_nodes);
  search.run(incumbent, {spanning});

  TreeSystem system;
  for (const auto& block : search.best()) system.trees.push_back(build_tree(g, block.set, block.core));
  const int base = kind == SystemKind::total ? m + n : m;
  report.value = base - search.best_cost();
  report.lower_bound = base - incumbent;
  report.upper_bound = base - search.root_bound();
  report.nodes_explored = search.nodes();
  if (kind == SystemKind::total) {
    report.witness = coloring_from_system(g, system);
  } else {
    report.witness = edge_coloring_from_system(g, system);
  }
  report.system = std::move(system);
  return report;
}

}  // namespace

SolverReport tmc_exact(const Graph& g, const SolverLimits& limits) {
  require_solver_input(g, limits.max_exact_n, "tmc_exact");
  if (g.is_complete()) {
    SolverReport report;
    report.value = g.size() + g.order();
    report.witness = distinct_total(g);
    report.system = TreeSystem{};
    report.lower_bound = report.upper_bound = report.value;
    return report;
  }
  return system_search(g, SystemKind::total, limits);
}

SolverReport mc_exact(const Graph& g, const SolverLimits& limits) {
  require_solver_input(g, limits.max_exact_n, "mc_exact");
  if (g.is_complete()) {
    SolverReport report;
    report.value = g.size();
    EdgeColoring c;
    c.color.resize(g.size());
    std::iota(c.color.begin(), c.color.end(), 0);
    report.witness = c;
    report.system = TreeSystem{};
    report.lower_bound = report.upper_bound = report.value;
    return report;
  }
  return system_search(g, SystemKind::edge, limits);
}

SolverReport tmc_naive(const Graph& g, const SolverLimits& limits) {
  if (!is_connected(g) || g.order() < 1) throw GraphError("disconnected");
  const int n = g.order();
  const int items = n + g.size();
  if (items > limits.max_naive_items) {
    throw SolverRangeError("naive oracle out of range: m + n = " + std::to_string(items) +
                           " exceeds " + std::to_string(limits.max_naive_items));
  }
  SolverReport report;
  report.method = Method::naive_partition;
  TotalColoring coloring;
  coloring.vertex_color.resize(n);
  coloring.edge_color.resize(g.size());
  for (int k = items; k >= 1; --k) {
    const bool found = for_each_partition(items, k, [&](const std::vector<int>& rgs) {
      ++report.nodes_explored;
      std::copy(rgs.begin(), rgs.begin() + n, coloring.vertex_color.begin());
      std::copy(rgs.begin() + n, rgs.end(), coloring.edge_color.begin());
      return verify_tmc(g, coloring).ok;
    });
    if (found) {
      report.value = k;
      report.witness = coloring;
      break;
    }
  }
  report.lower_bound = report.upper_bound = report.value;
  return report;
}

SolverReport mc_naive(const Graph& g, const SolverLimits& limits) {
  if (!is_connected(g) || g.order() < 1) throw GraphError("disconnected");
  const int m = g.size();
  if (m > limits.max_naive_edges) {
    throw SolverRangeError("naive oracle out of range: m = " + std::to_string(m) + " exceeds " +
                           std::to_string(limits.max_naive_edges));
  }
  SolverReport report;
  report.method = Method::naive_partition;
  EdgeColoring coloring;
  coloring.color.resize(m);
  report.witness = coloring;
  for (int k = m; k >= 1; --k) {
    const bool found = for_each_partition(m, k, [&](const std::vector<int>& rgs) {
      ++report.nodes_explored;
      coloring.color = rgs;
      return verify_mc(g, coloring).ok;
    });
    if (found) {
      report.value = k;
      report.witness = coloring;
      break;
    }
  }
  report.lower_bound = report.upper_bound = report.value;
  return report;
}

SolverReport mvc_exact(const Graph& g, const SolverLimits& limits) {
  if (g.order() < 1) throw GraphError("empty graph");
  if (!is_connected(g)) throw GraphError("disconnected");
  const int n = g.order();
  const int d = diameter(g);
  SolverReport report;
  VertexColoring coloring;
  coloring.color.resize(n);
  if (d <= 2) {
    std::iota(coloring.color.begin(), coloring.color.end(), 0);
    report.value = n;
    report.witness = coloring;
    report.lower_bound = report.upper_bound = n;
    return report;
  }
  if (n > limits.max_mvc_n) {
    throw SolverRangeError("exact solver out of range: mvc_exact with n = " + std::to_string(n) +
                           " exceeds limit " + std::to_string(limits.max_mvc_n));
  }
  report.method = Method::naive_partition;
  report.upper_bound = n - d + 2;
  for (int k = report.upper_bound; k >= 1; --k) {
    const bool found = for_each_partition(n, k, [&](const std::vector<int>& rgs) {
      ++report.nodes_explored;
      coloring.color = rgs;
      return verify_mvc(g, coloring).ok;
    });
    if (found) {
      report.value = k;
      report.witness = coloring;
      break;
    }
  }
  report.lower_bound = report.value;
  return report;
}

NamedBounds bounds(const Graph& g, std::optional<int> mc, std::optional<int> mvc) {
  if (g.order() < 2) throw GraphError("bounds need n >= 2");
  if (!is_connected(g)) throw GraphError("disconnected");
  const int n = g.order();
  const int m = g.size();
  NamedBounds b;
  b.leaf_number = max_leaf_exact(g).leaf_count;
  b.tmc_lower = m - n + 2 + b.leaf_number;
  if (g.is_complete()) {
    b.tmc_upper = m + n;
  } else if (mc) {
    b.tmc_upper = *mc + b.leaf_number;
  }
  // K_2 carries l = 2 by convention while mvc(K_2) = 2.
  b.mvc_lower = n == 2 ? 2 : b.leaf_number + 1;
  b.mvc_upper = n - diameter(g) + 2;
  if (mc && mvc) b.sum_bound = *mc + *mvc;
  return b;
}

}  // namespace monoconn
