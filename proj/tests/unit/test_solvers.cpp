#include <doctest.h>

#include <cstdlib>

#include "monoconn/coloring.hpp"
#include "monoconn/generators.hpp"
#include "monoconn/maxleaf.hpp"
#include "monoconn/graph6.hpp"
#include "monoconn/solvers.hpp"
#include "support/oracles.hpp"

using namespace monoconn;

TEST_CASE("tmc named values") {
  CHECK(tmc_exact(cycle_graph(5)).value == 4);
  CHECK(tmc_exact(wheel_graph(5)).value == 9);
  CHECK(tmc_exact(complete_graph(4)).value == 10);
  CHECK(tmc_exact(complete_multipartite_graph({2, 1, 1})).value == 7);
  CHECK(tmc_exact(complete_multipartite_graph({2, 2})).value == 4);
  CHECK(tmc_exact(path_graph(4)).value == 3);
  CHECK(tmc_exact(wheel_graph(6)).value == 11);
  CHECK(tmc_exact(complete_graph(1)).value == 1);
  CHECK(tmc_exact(complete_graph(2)).value == 3);
}

TEST_CASE("naive oracle") {
  CHECK(tmc_naive(path_graph(3)).value == 3);
  CHECK(tmc_naive(complete_graph(3)).value == 6);
  CHECK(tmc_naive(cycle_graph(4)).value == 4);
  CHECK(mc_naive(cycle_graph(5)).value == 2);
  CHECK_THROWS_AS(tmc_naive(complete_graph(5)), SolverRangeError);
}

TEST_CASE("mc and mvc named values") {
  CHECK(mc_exact(complete_graph(4)).value == 6);
  CHECK(mc_exact(cycle_graph(5)).value == 2);
  CHECK(mc_exact(wheel_graph(6)).value == 7);
  CHECK(mvc_exact(cycle_graph(5)).value == 5);
  CHECK(mvc_exact(path_graph(4)).value == 3);
  for (int n = 1; n <= 7; ++n) CHECK(mvc_exact(complete_graph(n)).value == n);
}

TEST_CASE("witnesses verify with the reported count") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = random_gnp(8, 0.4, seed);
    if (!is_connected(g)) continue;
    auto t = tmc_exact(g);
    const auto& tc = std::get<TotalColoring>(t.witness);
    CHECK(verify_tmc(g, tc).ok);
    CHECK(color_count(tc) == t.value);
    REQUIRE(t.system);
    CHECK(validate_tree_system(g, *t.system, SystemKind::total).empty());

    auto mc = mc_exact(g);
    const auto& ec = std::get<EdgeColoring>(mc.witness);
    CHECK(verify_mc(g, ec).ok);
    CHECK(color_count(ec) == mc.value);

    auto mv = mvc_exact(g);
    const auto& vc = std::get<VertexColoring>(mv.witness);
    CHECK(verify_mvc(g, vc).ok);
    CHECK(color_count(vc) == mv.value);
  }
}

TEST_CASE("exact agrees with naive on small random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = random_gnp(5, 0.5, seed);
    if (!is_connected(g) || g.size() + g.order() > 12) continue;
    CHECK(tmc_exact(g).value == tmc_naive(g).value);
    if (g.size() <= 8) CHECK(mc_exact(g).value == mc_naive(g).value);
  }
}

TEST_CASE("tree-system validation catches shared internals") {
  auto c4 = cycle_graph(4);
  SystemTree a{{c4.edge_index(0, 1), c4.edge_index(1, 2)}, {0, 1, 2}, {1}};
  SystemTree path{{c4.edge_index(0, 1), c4.edge_index(1, 2), c4.edge_index(2, 3)},
                  {0, 1, 2, 3},
                  {1, 2}};
  TreeSystem sys{{path}};
  CHECK(validate_tree_system(c4, sys, SystemKind::total).empty());
  CHECK(sys.total_waste() == 4);
  sys.trees = {a};
  CHECK(validate_tree_system(c4, sys, SystemKind::total).find("not covered") != std::string::npos);

  auto k5 = complete_graph(5);
  SystemTree left{{k5.edge_index(0, 1), k5.edge_index(0, 2)}, {0, 1, 2}, {0}};
  SystemTree right{{k5.edge_index(0, 3), k5.edge_index(0, 4)}, {0, 3, 4}, {0}};
  TreeSystem shared{{left, right}};
  CHECK(validate_tree_system(k5, shared, SystemKind::edge).empty());
  CHECK(validate_tree_system(k5, shared, SystemKind::total).find("internal in two trees") !=
        std::string::npos);
}

TEST_CASE("size guard") {
  SolverLimits tight;
  tight.max_exact_n = 5;
  CHECK_THROWS_WITH_AS(tmc_exact(path_graph(6), tight),
                       doctest::Contains("exact solver out of range"), SolverRangeError);
  CHECK_THROWS_AS(mc_exact(cycle_graph(6), tight), SolverRangeError);
  CHECK_THROWS_AS(tmc_exact(Graph::from_edge_list(3, {{0, 1}})), GraphError);

  setenv("MONO_MAX_EXACT_N", "7", 1);
  CHECK(SolverLimits::from_env().max_exact_n == 7);
  unsetenv("MONO_MAX_EXACT_N");
  CHECK(SolverLimits::from_env().max_exact_n == SolverLimits{}.max_exact_n);
}

TEST_CASE("named bounds") {
  auto c5 = bounds(cycle_graph(5));
  CHECK(c5.tmc_lower == 4);
  CHECK(c5.mvc_upper == 5);
  auto k4 = bounds(complete_graph(4));
  CHECK(k4.tmc_lower == 7);
  auto star = bounds(star_graph(6));
  CHECK(star.tmc_lower == 6);
  CHECK(star.mvc_lower == 6);
  CHECK(tmc_exact(star_graph(6)).value == 6);
  auto with_mc = bounds(cycle_graph(5), 2, 5);
  REQUIRE(with_mc.sum_bound);
  CHECK(*with_mc.sum_bound == 7);
  REQUIRE(with_mc.tmc_upper);
  CHECK(*with_mc.tmc_upper == 4);
}

TEST_CASE("mc exact agrees with the partition oracle on every small class") {
  int compared = 0;
  for (const auto& g : oracle::atlas_corpus(6)) {
    if (g.size() > 8) continue;
    ++compared;
    CHECK_MESSAGE(mc_exact(g).value == mc_naive(g).value, to_graph6(g));
  }
  CHECK(compared > 50);
}
