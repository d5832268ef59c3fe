#include <doctest.h>

#include "monoconn/generators.hpp"
#include "monoconn/graph.hpp"
#include "support/oracles.hpp"

using namespace monoconn;

TEST_CASE("from_edge_list builds simple graphs") {
  auto p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.adjacent(1, 0));
  CHECK_FALSE(p3.adjacent(0, 2));

  auto k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.size() == 6);
  CHECK(k4.is_complete());
}

TEST_CASE("from_edge_list names the offending pair") {
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{0, 1}, {0, 1}}), "duplicate edge (0,1)",
                       GraphError);
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), "duplicate edge (1,0)",
                       GraphError);
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{2, 2}}), "self-loop (2,2)", GraphError);
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{0, 3}}), "vertex out of range in pair (0,3)",
                       GraphError);
}

TEST_CASE("edges are sorted and indexed") {
  auto g = Graph::from_edge_list(4, {{3, 2}, {1, 0}, {0, 2}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{2, 3});
  CHECK(g.edge_index(3, 2) == 2);
  CHECK(g.edge_index(1, 3) == -1);
}

TEST_CASE("diameter and degrees") {
  CHECK(diameter(path_graph(4)) == 3);
  CHECK(diameter(cycle_graph(5)) == 2);
  CHECK(diameter(complete_graph(6)) == 1);
  CHECK(diameter(complete_graph(1)) == 0);
  CHECK_THROWS_WITH_AS(diameter(Graph::from_edge_list(3, {{0, 1}})), "disconnected", GraphError);
  CHECK(max_degree(star_graph(6)) == 5);
  CHECK(min_degree(star_graph(6)) == 1);
  CHECK(is_connected(Graph::from_edge_list(1, std::vector<std::pair<int, int>>{})));
  CHECK_FALSE(is_connected(Graph::from_edge_list(2, std::vector<std::pair<int, int>>{})));
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).size() == 0);
  CHECK(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_gnp(9, 0.4, seed);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(complete_graph(5)) == 4);
  CHECK(vertex_connectivity(cycle_graph(5)) == 2);
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  CHECK(vertex_connectivity(petersen_graph()) == 3);
  CHECK(vertex_connectivity(Graph::from_edge_list(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(vertex_connectivity(complete_multipartite_graph({3, 3})) == 3);
  CHECK(vertex_connectivity(wheel_graph(6)) == 3);
}

TEST_CASE("cut vertices and triangles") {
  CHECK(has_cut_vertex(path_graph(3)));
  CHECK_FALSE(has_cut_vertex(cycle_graph(6)));
  CHECK_FALSE(has_cut_vertex(path_graph(2)));
  CHECK(has_cut_vertex(Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})));
  CHECK(is_triangle_free(cycle_graph(4)));
  CHECK_FALSE(is_triangle_free(complete_graph(3)));
  CHECK(is_triangle_free(petersen_graph()));
}

TEST_CASE("trees and stars") {
  CHECK(is_tree(path_graph(5)));
  CHECK_FALSE(is_tree(cycle_graph(5)));
  CHECK(is_star(star_graph(6)));
  CHECK(is_star(path_graph(3)));
  CHECK(is_star(path_graph(2)));
  CHECK_FALSE(is_star(path_graph(4)));
}

TEST_CASE("sufficient condition flags") {
  auto p5 = theorem2_conditions(path_graph(5));
  CHECK(p5.triangle_free);
  CHECK(p5.diameter_ge_3);
  CHECK(p5.has_cut_vertex);
  CHECK(p5.any());

  auto k5 = theorem2_conditions(complete_graph(5));
  CHECK_FALSE(k5.complement_4_connected);
  CHECK_FALSE(k5.triangle_free);
  CHECK_FALSE(k5.degree_bound_holds);
  CHECK_FALSE(k5.diameter_ge_3);
  CHECK_FALSE(k5.has_cut_vertex);
  CHECK_FALSE(k5.any());

  CHECK(theorem2_conditions(complete_multipartite_graph({2, 3})).triangle_free);
  CHECK_THROWS_WITH_AS(theorem2_conditions(path_graph(3)), "theorem hypothesis requires n > 3",
                       GraphError);
}

TEST_CASE("degree bound uses exact integer arithmetic") {
  // n=6, m=7: 7*... threshold n - (2m - 3(n-1))/(n-3) = 6 - (14-15)/3 = 6.333
  CHECK(degree_bound_holds(6, 7, 5));
  CHECK(degree_bound_holds(6, 7, 6));
  // n=5, m=6: 5 - (12-12)/2 = 5, so 5 fails and 4 passes.
  CHECK_FALSE(degree_bound_holds(5, 6, 5));
  CHECK(degree_bound_holds(5, 6, 4));
}

TEST_CASE("edge list text") {
  auto g = parse_edge_list_text("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_edge_list_text(to_edge_list_text(petersen_graph())) == petersen_graph());
  CHECK_THROWS_AS(parse_edge_list_text("4 3\n0 1\n"), GraphError);
  CHECK_THROWS_AS(parse_edge_list_text("x"), GraphError);
  CHECK_THROWS_AS(parse_edge_list_text("2 1\n0 1\n5"), GraphError);
  CHECK_THROWS_AS(parse_edge_list_text("2 1\n0 0\n"), GraphError);
}
