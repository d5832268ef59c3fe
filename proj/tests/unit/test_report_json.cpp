#include <doctest.h>

#include "monoconn/constructions.hpp"
#include "monoconn/generators.hpp"
#include "monoconn/report_json.hpp"

using namespace monoconn;

TEST_CASE("coloring schema round trip") {
  auto built = wheel_tmc_coloring(6);
  auto j = coloring_to_json(built.graph, built.coloring);
  CHECK(j["vertex_colors"].size() == 6);
  CHECK(j["edge_colors"].size() == 10);
  CHECK(j["edge_colors"][0].size() == 3);
  auto parsed = coloring_from_json(built.graph, j);
  REQUIRE(parsed.vertex_colors);
  REQUIRE(parsed.edge_colors);
  CHECK(*parsed.vertex_colors == built.coloring.vertex_color);
  CHECK(*parsed.edge_colors == built.coloring.edge_color);
}

TEST_CASE("edge triples may come in any order and orientation") {
  auto p3 = path_graph(3);
  auto parsed = coloring_from_json(p3, Json::parse(R"({"edge_colors":[[2,1,5],[1,0,4]]})"));
  CHECK_FALSE(parsed.vertex_colors);
  CHECK(*parsed.edge_colors == std::vector<Color>{4, 5});
}

TEST_CASE("malformed colorings") {
  auto p3 = path_graph(3);
  CHECK_THROWS_AS(coloring_from_json(p3, Json::parse(R"({"edge_colors":[[0,2,1],[0,1,1]]})")),
                  ColoringError);
  CHECK_THROWS_AS(coloring_from_json(p3, Json::parse(R"({"edge_colors":[[0,1,1]]})")),
                  ColoringError);
  CHECK_THROWS_AS(coloring_from_json(p3, Json::parse(R"({"edge_colors":[[0,1,1],[1,0,2]]})")),
                  ColoringError);
  CHECK_THROWS_AS(coloring_from_json(p3, Json::parse(R"({"vertex_colors":[0,1]})")),
                  ColoringError);
  CHECK_THROWS_AS(coloring_from_json(p3, Json::parse(R"({})")), ColoringError);
  CHECK_THROWS_AS(coloring_from_json(p3, Json::parse("[1,2]")), ColoringError);
}

TEST_CASE("check records round trip losslessly") {
  for (const auto& g : {cycle_graph(5), complete_graph(4), path_graph(2), complete_graph(1),
                        wheel_graph(6), star_graph(5)}) {
    auto rec = check_all(g);
    auto j = to_json(rec);
    auto back = check_record_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.verdicts == rec.verdicts);
    CHECK(back.tmc == rec.tmc);
    CHECK(back.seconds == rec.seconds);
  }
  CheckOptions skip;
  skip.limits.max_exact_n = 3;
  auto skipped = check_all(cycle_graph(5), skip);
  CHECK(to_json(check_record_from_json(to_json(skipped))) == to_json(skipped));
}

TEST_CASE("survey records round trip losslessly") {
  auto rec = survey_random(7, 0.5, 15, 9);
  auto back = survey_record_from_json(Json::parse(to_json(rec).dump()));
  CHECK(back == rec);
}

TEST_CASE("solver report json") {
  auto g = cycle_graph(5);
  auto j = to_json(g, tmc_exact(g));
  CHECK(j["value"] == 4);
  CHECK(j["method"] == "tree_system");
  CHECK(j["witness"].contains("vertex_colors"));
}

TEST_CASE("csv rows") {
  auto rec = check_all(cycle_graph(5));
  auto row = to_csv_row(rec);
  CHECK(row.rfind("\"Dhc\",5,5,2,2,2,4,2,5,0,", 0) == 0);
  CHECK(check_csv_header().rfind("graph6,n,m,", 0) == 0);
}
