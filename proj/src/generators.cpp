#include "monoconn/generators.hpp"

#include <random>
#include <set>

namespace monoconn {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw GraphError(message);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, pairs);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, pairs);
}

Graph star_graph(int n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
  return Graph::from_edge_list(n, pairs);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, pairs);
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel needs n >= 4");
  std::vector<std::pair<int, int>> pairs;
  const int rim = n - 1;
  for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
  for (int i = 0; i < rim; ++i) pairs.emplace_back(1 + i, 1 + (i + 1) % rim);
  return Graph::from_edge_list(n, pairs);
}

Graph complete_multipartite_graph(const std::vector<int>& sizes) {
  require(sizes.size() >= 2, "complete multipartite needs r >= 2 classes");
  std::vector<int> part;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    require(sizes[c] >= 1, "complete multipartite class sizes must be positive");
    part.insert(part.end(), sizes[c], static_cast<int>(c));
  }
  const int n = static_cast<int>(part.size());
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part[u] != part[v]) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, pairs);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "random_gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "random_gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // 53-bit uniform in [0,1), independent of the library's distributions.
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    pairs.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  pairs.emplace_back(a, b);
  return Graph::from_edge_list(n, pairs);
}

Graph generate(std::string_view kind, const FamilyParams& params) {
  if (kind == "path") return path_graph(params.n);
  if (kind == "cycle") return cycle_graph(params.n);
  if (kind == "star") return star_graph(params.n);
  if (kind == "complete") return complete_graph(params.n);
  if (kind == "wheel") return wheel_graph(params.n);
  if (kind == "complete_multipartite" || kind == "multipartite") {
    return complete_multipartite_graph(params.sizes);
  }
  if (kind == "random_gnp") return random_gnp(params.n, params.p, params.seed);
  if (kind == "random_tree") return random_tree(params.n, params.seed);
  if (kind == "petersen") return petersen_graph();
  throw GraphError("unknown graph family \"" + std::string(kind) + "\"");
}

std::vector<Graph> all_connected_labeled(int n) {
  require(n >= 1 && n <= 7, "labeled enumeration supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::pair<int, int>> pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Cheap reject: every vertex needs an incident edge when n > 1.
    pairs.clear();
    VertexMask touched = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) {
        pairs.push_back(slots[i]);
        touched |= (VertexMask{1} << slots[i].first) | (VertexMask{1} << slots[i].second);
      }
    }
    if (n > 1 && touched != (VertexMask{1} << n) - 1) continue;
    auto g = Graph::from_edge_list(n, pairs);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace monoconn
