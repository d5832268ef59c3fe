#include <doctest.h>

#include <numeric>

#include "monoconn/coloring.hpp"
#include "monoconn/generators.hpp"

using namespace monoconn;

namespace {

std::vector<Color> iota_colors(int count, int first = 0) {
  std::vector<Color> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

TotalColoring all_distinct(const Graph& g) {
  return {iota_colors(g.order()), iota_colors(g.size(), g.order())};
}

}  // namespace

TEST_CASE("total colorings") {
  // Tree: edges and internal vertices share color 0, leaves distinct.
  auto t = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
  TotalColoring tree_col{{1, 0, 0, 2, 3, 4}, std::vector<Color>(5, 0)};
  CHECK(verify_tmc(t, tree_col).ok);
  CHECK(color_count(tree_col) == 5);

  CHECK(verify_tmc(complete_graph(5), all_distinct(complete_graph(5))).ok);

  auto res = verify_tmc(path_graph(3), all_distinct(path_graph(3)));
  CHECK_FALSE(res.ok);
  REQUIRE(res.uncovered);
  CHECK(*res.uncovered == std::pair<Vertex, Vertex>{0, 2});
}

TEST_CASE("endpoint colors are unconstrained") {
  auto p3 = path_graph(3);
  CHECK(verify_tmc(p3, {{7, 0, 7}, {0, 0}}).ok);
  CHECK_FALSE(verify_tmc(p3, {{0, 1, 0}, {0, 0}}).ok);  // internal vertex off-color
}

TEST_CASE("edge colorings") {
  CHECK(verify_mc(complete_graph(4), {iota_colors(6)}).ok);
  CHECK_FALSE(verify_mc(path_graph(3), {{0, 1}}).ok);
  // Spanning tree in one color, other edges distinct.
  auto c5 = cycle_graph(5);
  EdgeColoring ec{std::vector<Color>(c5.size(), 0)};
  ec.color[c5.edge_index(0, 4)] = 9;
  CHECK(verify_mc(c5, ec).ok);
  CHECK(color_count(ec) == 2);
}

TEST_CASE("vertex colorings") {
  auto c5 = cycle_graph(5);
  CHECK(verify_mvc(c5, {iota_colors(5)}).ok);
  CHECK(verify_mvc(petersen_graph(), {iota_colors(10)}).ok);
  auto p4 = path_graph(4);
  auto res = verify_mvc(p4, {iota_colors(4)});
  CHECK_FALSE(res.ok);
  CHECK(*res.uncovered == std::pair<Vertex, Vertex>{0, 3});
  CHECK(verify_mvc(p4, {{0, 1, 1, 2}}).ok);
}

TEST_CASE("domain mismatch") {
  CHECK_THROWS_AS(verify_tmc(path_graph(3), {{0, 1}, {0, 0}}), ColoringError);
  CHECK_THROWS_AS(verify_tmc(path_graph(3), {{0, 1, 2}, {0}}), ColoringError);
  CHECK_THROWS_AS(verify_mc(path_graph(3), {{0, 1, 2}}), ColoringError);
  CHECK_THROWS_AS(verify_mvc(path_graph(3), {{0}}), ColoringError);
}

TEST_CASE("color class analysis") {
  // C_5 with the path 0-1-2-3-4 in color 0.
  auto c5 = cycle_graph(5);
  TotalColoring col{{1, 0, 0, 0, 2}, std::vector<Color>(5, 0)};
  col.edge_color[c5.edge_index(0, 4)] = 3;
  auto report = analyze_color_classes(c5, col);
  CHECK(report.color_count == 4);
  CHECK(report.total_waste == 6);
  CHECK(report.tmc_verified);
  CHECK(report.is_simple);
  CHECK(report.leaves_distinctly_colored);
  CHECK(report.bookkeeping_exact);
  int nontrivial = 0;
  for (const auto& cls : report.classes) nontrivial += cls.is_nontrivial;
  CHECK(nontrivial == 1);

  auto k4 = complete_graph(4);
  auto distinct = analyze_color_classes(k4, all_distinct(k4));
  CHECK(distinct.total_waste == 0);
  CHECK(distinct.color_count == 10);
  for (const auto& cls : distinct.classes) CHECK_FALSE(cls.is_nontrivial);
}

TEST_CASE("trees sharing two vertices are not simple") {
  // K_4: color 0 on path 0-1-2, color 1 on path 0-3-2.
  auto k4 = complete_graph(4);
  TotalColoring col{{5, 0, 6, 1}, std::vector<Color>(6, 0)};
  col.edge_color[k4.edge_index(0, 1)] = 0;
  col.edge_color[k4.edge_index(1, 2)] = 0;
  col.edge_color[k4.edge_index(0, 3)] = 1;
  col.edge_color[k4.edge_index(2, 3)] = 1;
  col.edge_color[k4.edge_index(0, 2)] = 7;
  col.edge_color[k4.edge_index(1, 3)] = 8;
  auto report = analyze_color_classes(k4, col);
  CHECK_FALSE(report.is_simple);
}
