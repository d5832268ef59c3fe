#include "monoconn/maxleaf.hpp"

#include <bit>
#include <numeric>

namespace monoconn {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

int lowest(VertexMask mask) { return std::countr_zero(mask); }

void require_tree_input(const Graph& g) {
  if (g.order() < 2) throw GraphError("max-leaf spanning tree needs n >= 2");
  if (g.order() > kMaxMaskVertices) throw GraphError("max-leaf solver supports n <= 64");
  if (!is_connected(g)) throw GraphError("disconnected");
}

/// Vertices reachable from `start` inside `allowed`.
VertexMask reach(const Graph& g, VertexMask allowed, int start) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(lowest(f));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool connected_within(const Graph& g, VertexMask set) {
  return set == 0 || reach(g, set, lowest(set)) == set;
}

VertexMask closed_neighborhood_union(const Graph& g, VertexMask set) {
  VertexMask out = set;
  for (VertexMask s = set; s; s &= s - 1) out |= g.neighbor_mask(lowest(s));
  return out;
}

class CdsSearch {
 public:
  explicit CdsSearch(const Graph& g)
      : g_(g), all_(g.order() == 64 ? ~VertexMask{0} : bit(g.order()) - 1) {}

  VertexMask solve(VertexMask initial_upper) {
    best_ = initial_upper;
    best_size_ = std::popcount(initial_upper);
    branch(0, 0);
    return best_;
  }

 private:
  void branch(VertexMask in, VertexMask out) {
    const int size = std::popcount(in);
    const VertexMask dominated = closed_neighborhood_union(g_, in);
    const bool dominating = dominated == all_;
    const bool connected = connected_within(g_, in);
    if (in != 0 && dominating && connected) {
      if (size < best_size_) {
        best_ = in;
        best_size_ = size;
      }
      return;
    }
    if (size + 1 >= best_size_) return;

    const VertexMask free = all_ & ~in & ~out;
    // Every vertex must keep a potential dominator.
    if (closed_neighborhood_union(g_, all_ & ~out) != all_) return;
    // The chosen vertices must stay connectable through non-excluded ones.
    if (in != 0) {
      const VertexMask component = reach(g_, all_ & ~out, lowest(in));
      if ((component & in) != in) return;
    }

    int pick = -1;
    if (!dominating) {
      const int target = lowest(all_ & ~dominated);
      const VertexMask options = (g_.neighbor_mask(target) | bit(target)) & free;
      if (options == 0) return;
      pick = lowest(options);
    } else {
      VertexMask touching = 0;
      for (VertexMask s = in; s; s &= s - 1) touching |= g_.neighbor_mask(lowest(s));
      touching &= free;
      if (touching == 0) return;
      pick = lowest(touching);
    }
    branch(in | bit(pick), out);
    branch(in, out | bit(pick));
  }

  const Graph& g_;
  VertexMask all_;
  VertexMask best_ = 0;
  int best_size_ = 0;
};

/// Spanning tree whose internal vertices lie in the connected dominating set
/// `core`: BFS inside the core, then each remaining vertex hangs from its
/// smallest-index core neighbor.
std::vector<Edge> grow_tree(const Graph& g, VertexMask core) {
  std::vector<Edge> tree;
  const int n = g.order();
  std::vector<bool> placed(n, false);
  const int root = lowest(core);
  std::vector<int> queue{root};
  placed[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int y : g.neighbors(x)) {
      if (!placed[y] && (core >> y & 1)) {
        placed[y] = true;
        tree.push_back({std::min(x, y), std::max(x, y)});
        queue.push_back(y);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (placed[v]) continue;
    const int parent = lowest(g.neighbor_mask(v) & core);
    tree.push_back({std::min(v, parent), std::max(v, parent)});
  }
  return tree;
}

}  // namespace

VertexMask min_connected_dominating_set(const Graph& g) {
  if (g.order() < 1) throw GraphError("empty graph");
  if (g.order() > kMaxMaskVertices) throw GraphError("connected domination supports n <= 64");
  if (!is_connected(g)) throw GraphError("disconnected");
  if (g.order() == 1) return 1;
  // Upper bound: internal vertices of the greedy tree.
  auto greedy = max_leaf_greedy(g);
  std::vector<int> deg(g.order(), 0);
  for (auto [u, v] : greedy.tree) {
    ++deg[u];
    ++deg[v];
  }
  VertexMask upper = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (deg[v] >= 2) upper |= bit(v);
  }
  if (upper == 0) upper = 1;  // n = 2
  CdsSearch search(g);
  return search.solve(upper);
}

SpanningTreeResult describe_spanning_tree(const Graph& g, const std::vector<Edge>& tree) {
  const int n = g.order();
  if (static_cast<int>(tree.size()) != n - 1) throw GraphError("tree must have n-1 edges");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> deg(n, 0);
  for (auto [u, v] : tree) {
    if (u < 0 || v < 0 || u >= n || v >= n || !g.adjacent(u, v)) {
      throw GraphError("tree edge is not an edge of the graph");
    }
    const int a = find(u);
    const int b = find(v);
    if (a == b) throw GraphError("tree edges contain a cycle");
    parent[a] = b;
    ++deg[u];
    ++deg[v];
  }
  SpanningTreeResult result;
  result.tree = tree;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) ++result.leaf_count;
  }
  result.internal_count = n - result.leaf_count;
  return result;
}

SpanningTreeResult max_leaf_exact(const Graph& g) {
  require_tree_input(g);
  SpanningTreeResult result;
  if (g.order() == 2) {
    result = describe_spanning_tree(g, g.edges());
  } else {
    result = describe_spanning_tree(g, grow_tree(g, min_connected_dominating_set(g)));
  }
  result.exact = true;
  return result;
}

SpanningTreeResult max_leaf_greedy(const Graph& g) {
  if (g.order() < 2) throw GraphError("max-leaf spanning tree needs n >= 2");
  if (!is_connected(g)) throw GraphError("disconnected");
  const int n = g.order();
  std::vector<bool> in_tree(n, false);
  std::vector<Edge> tree;
  int start = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(start)) start = v;
  }
  in_tree[start] = true;
  std::vector<int> members{start};
  int placed = 1;
  while (placed < n) {
    int best = -1;
    int best_gain = 0;
    for (int x = 0; x < n; ++x) {
      if (!in_tree[x]) continue;
      int gain = 0;
      for (int y : g.neighbors(x)) gain += !in_tree[y];
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    for (int y : g.neighbors(best)) {
      if (!in_tree[y]) {
        in_tree[y] = true;
        ++placed;
        tree.push_back({std::min(best, y), std::max(best, y)});
      }
    }
  }
  auto result = describe_spanning_tree(g, tree);
  result.exact = false;
  return result;
}

}  // namespace monoconn
