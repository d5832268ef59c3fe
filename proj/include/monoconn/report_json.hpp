#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monoconn/coloring.hpp"
#include "monoconn/harness.hpp"
#include "monoconn/maxleaf.hpp"
#include "monoconn/solvers.hpp"

namespace monoconn {

using Json = nlohmann::json;

/// {"vertex_colors":[...], "edge_colors":[[u,v,c],...]}
Json coloring_to_json(const Graph& g, const TotalColoring& c);
Json coloring_to_json(const Graph& g, const EdgeColoring& c);
Json coloring_to_json(const Graph& g, const VertexColoring& c);

/// Either half of the coloring schema may be absent.
struct ParsedColoring {
  std::optional<std::vector<Color>> vertex_colors;
  std::optional<std::vector<Color>> edge_colors;  // by edge index
};

/// Throws ColoringError for edges absent from g, repeated edges, missing
/// edges, or a vertex list of the wrong length.
ParsedColoring coloring_from_json(const Graph& g, const Json& j);

Json to_json(const Graph& g, const SolverReport& report);
Json to_json(const SpanningTreeResult& tree);
Json to_json(const NamedBounds& b);
Json to_json(const GraphConditionSet& c);
Json to_json(const TheoremCheckRecord& rec);
Json to_json(const SurveyRecord& rec);
Json to_json(const HuntReport& report);

TheoremCheckRecord check_record_from_json(const Json& j);
SurveyRecord survey_record_from_json(const Json& j);

std::string check_csv_header();
std::string to_csv_row(const TheoremCheckRecord& rec);

}  // namespace monoconn
