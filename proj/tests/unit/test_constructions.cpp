#include <doctest.h>

#include "monoconn/coloring.hpp"
#include "monoconn/constructions.hpp"
#include "monoconn/generators.hpp"
#include "monoconn/maxleaf.hpp"

using namespace monoconn;

TEST_CASE("tree-based coloring") {
  auto c5 = cycle_graph(5);
  auto path = describe_spanning_tree(c5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto col = tree_based_tmc_coloring(c5, path);
  CHECK(verify_tmc(c5, col).ok);
  CHECK(color_count(col) == 4);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_tree(10, seed);
    auto best = max_leaf_exact(t);
    auto tc = tree_based_tmc_coloring(t, best);
    CHECK(verify_tmc(t, tc).ok);
    CHECK(color_count(tc) == best.leaf_count + 1);
  }

  auto k4 = complete_graph(4);
  auto star = describe_spanning_tree(k4, {{0, 1}, {0, 2}, {0, 3}});
  auto kc = tree_based_tmc_coloring(k4, star);
  CHECK(verify_tmc(k4, kc).ok);
  CHECK(color_count(kc) == 7);

  CHECK(color_count(tree_based_tmc_coloring(complete_graph(1), {})) == 1);
}

TEST_CASE("tree-based coloring rejects foreign trees") {
  auto c5 = cycle_graph(5);
  SpanningTreeResult bogus;
  bogus.tree = {{0, 2}, {2, 3}, {3, 4}, {0, 1}};
  CHECK_THROWS_AS(tree_based_tmc_coloring(c5, bogus), GraphError);
  bogus.tree = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(tree_based_tmc_coloring(c5, bogus), GraphError);
}

TEST_CASE("multipartite closed form") {
  auto c4 = multipartite_tmc_coloring({2, 2});
  CHECK(verify_tmc(c4.graph, c4.coloring).ok);
  CHECK(color_count(c4.coloring) == 4);

  auto k112 = multipartite_tmc_coloring({2, 1, 1});
  CHECK(k112.graph.size() == 5);
  CHECK(verify_tmc(k112.graph, k112.coloring).ok);
  CHECK(color_count(k112.coloring) == 7);

  for (int n = 4; n <= 9; ++n) {
    auto built = multipartite_tmc_coloring({n - 2, 1, 1});
    const int m = built.graph.size();
    CHECK(verify_tmc(built.graph, built.coloring).ok);
    CHECK(color_count(built.coloring) == m - n + 3 + (n - 1));
  }

  CHECK_THROWS_AS(multipartite_tmc_coloring({1, 2}), GraphError);
  CHECK_THROWS_AS(multipartite_tmc_coloring({3}), GraphError);
}

TEST_CASE("wheel and complete closed forms") {
  for (int n = 5; n <= 12; ++n) {
    auto w = wheel_tmc_coloring(n);
    CHECK(verify_tmc(w.graph, w.coloring).ok);
    CHECK(color_count(w.coloring) == w.graph.size() + 1);
  }
  CHECK(color_count(wheel_tmc_coloring(5).coloring) == 9);
  CHECK(color_count(wheel_tmc_coloring(6).coloring) == 11);
  CHECK_THROWS_AS(wheel_tmc_coloring(4), GraphError);

  CHECK(color_count(complete_tmc_coloring(1).coloring) == 1);
  CHECK(color_count(complete_tmc_coloring(3).coloring) == 6);
  CHECK(color_count(complete_tmc_coloring(4).coloring) == 10);
  auto k6 = complete_tmc_coloring(6);
  CHECK(verify_tmc(k6.graph, k6.coloring).ok);
}
