#include <doctest.h>

#include "monoconn/generators.hpp"
#include "monoconn/graph6.hpp"

using namespace monoconn;

TEST_CASE("hand-encoded small graphs") {
  auto k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);

  auto empty2 = parse_graph6("A?");
  CHECK(empty2.order() == 2);
  CHECK(empty2.size() == 0);
  CHECK_FALSE(is_connected(empty2));

  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6("@").order() == 1);
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
}

TEST_CASE("nonzero padding bits are rejected") {
  // For n = 2 only the top bit of the data byte is meaningful.
  CHECK_THROWS_WITH_AS(parse_graph6("A@"), "graph6: trailing bits nonzero", GraphError);
}

TEST_CASE("malformed graph6 input") {
  CHECK_THROWS_AS(parse_graph6(""), GraphError);
  CHECK_THROWS_AS(parse_graph6("A"), GraphError);       // missing data byte
  CHECK_THROWS_AS(parse_graph6("A__"), GraphError);     // extra byte
  CHECK_THROWS_AS(parse_graph6("B\x01"), GraphError);   // character below 63
  CHECK_THROWS_AS(parse_graph6("~?"), GraphError);      // truncated long header
}

TEST_CASE("header and whitespace tolerated") {
  CHECK(parse_graph6(">>graph6<<A_\n").size() == 1);
  CHECK(parse_graph6("A_\r\n").size() == 1);
}

TEST_CASE("round trips") {
  CHECK(parse_graph6(to_graph6(path_graph(3))) == path_graph(3));
  CHECK(parse_graph6(to_graph6(petersen_graph())) == petersen_graph());
  for (int n : {1, 2, 5, 13, 62, 63, 64, 100}) {
    auto g = random_gnp(n, 0.3, static_cast<std::uint64_t>(n) + 11);
    auto text = to_graph6(g);
    CHECK(parse_graph6(text) == g);
  }
  // n = 63 switches to the four-byte size header.
  CHECK(to_graph6(Graph::from_edge_list(63, std::vector<std::pair<int, int>>{})).substr(0, 4) == "~??~");
}

TEST_CASE("corpus parsing") {
  auto graphs = parse_graph6_lines("A_\n\nC~\n");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1].size() == 6);
  auto from_edges = parse_graph_input("3 2\n0 1\n1 2\n");
  REQUIRE(from_edges.size() == 1);
  CHECK(from_edges[0] == path_graph(3));
  CHECK_THROWS_AS(parse_graph_input("  \n"), GraphError);
}
