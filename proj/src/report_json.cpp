#include "monoconn/report_json.hpp"

#include <sstream>

namespace monoconn {

namespace {

Json edge_triples(const Graph& g, const std::vector<Color>& colors) {
  Json arr = Json::array();
  for (int id = 0; id < g.size(); ++id) {
    arr.push_back({g.edge(id).u, g.edge(id).v, colors[id]});
  }
  return arr;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

Json coloring_to_json(const Graph& g, const TotalColoring& c) {
  return {{"vertex_colors", c.vertex_color}, {"edge_colors", edge_triples(g, c.edge_color)}};
}

Json coloring_to_json(const Graph& g, const EdgeColoring& c) {
  return {{"edge_colors", edge_triples(g, c.color)}};
}

Json coloring_to_json(const Graph&, const VertexColoring& c) {
  return {{"vertex_colors", c.color}};
}

ParsedColoring coloring_from_json(const Graph& g, const Json& j) {
  if (!j.is_object()) throw ColoringError("coloring JSON must be an object");
  ParsedColoring out;
  if (j.contains("vertex_colors")) {
    auto colors = j.at("vertex_colors").get<std::vector<Color>>();
    if (static_cast<int>(colors.size()) != g.order()) {
      throw ColoringError("vertex_colors has " + std::to_string(colors.size()) +
                          " entries, graph has " + std::to_string(g.order()) + " vertices");
    }
    out.vertex_colors = std::move(colors);
  }
  if (j.contains("edge_colors")) {
    std::vector<Color> colors(g.size(), -1);
    for (const auto& triple : j.at("edge_colors")) {
      if (!triple.is_array() || triple.size() != 3) {
        throw ColoringError("edge_colors entries must be [u, v, color]");
      }
      const int u = triple[0].get<int>();
      const int v = triple[1].get<int>();
      const int id = (u >= 0 && v >= 0 && u < g.order() && v < g.order()) ? g.edge_index(u, v) : -1;
      if (id < 0) {
        throw ColoringError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") is not in the graph");
      }
      if (colors[id] >= 0) {
        throw ColoringError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") colored twice");
      }
      const int c = triple[2].get<int>();
      if (c < 0) throw ColoringError("color ids must be non-negative");
      colors[id] = c;
    }
    for (int id = 0; id < g.size(); ++id) {
      if (colors[id] < 0) {
        throw ColoringError("edge (" + std::to_string(g.edge(id).u) + "," +
                            std::to_string(g.edge(id).v) + ") has no color");
      }
    }
    out.edge_colors = std::move(colors);
  }
  if (!out.vertex_colors && !out.edge_colors) {
    throw ColoringError("coloring JSON needs vertex_colors and/or edge_colors");
  }
  return out;
}

Json to_json(const Graph& g, const SolverReport& report) {
  Json j = {{"value", report.value},
            {"method", to_string(report.method)},
            {"nodes_explored", report.nodes_explored},
            {"lower_bound", report.lower_bound},
            {"upper_bound", report.upper_bound}};
  j["witness"] = std::visit([&](const auto& c) { return coloring_to_json(g, c); }, report.witness);
  if (report.system) {
    Json trees = Json::array();
    for (const auto& t : report.system->trees) {
      Json edges = Json::array();
      for (int id : t.edges) edges.push_back({g.edge(id).u, g.edge(id).v});
      trees.push_back({{"edges", edges},
                       {"vertices", t.vertices},
                       {"internal", t.internal},
                       {"waste", t.total_waste()}});
    }
    j["tree_system"] = trees;
  }
  return j;
}

Json to_json(const SpanningTreeResult& tree) {
  Json edges = Json::array();
  for (auto [u, v] : tree.tree) edges.push_back({u, v});
  return {{"tree", edges},
          {"leaf_count", tree.leaf_count},
          {"internal_count", tree.internal_count},
          {"exact", tree.exact}};
}

Json to_json(const NamedBounds& b) {
  return {{"leaf_number", b.leaf_number},     {"tmc_lower", b.tmc_lower},
          {"tmc_upper", optional_json(b.tmc_upper)}, {"mvc_lower", b.mvc_lower},
          {"mvc_upper", b.mvc_upper},         {"sum_bound", optional_json(b.sum_bound)}};
}

Json to_json(const GraphConditionSet& c) {
  return {{"complement_4_connected", c.complement_4_connected},
          {"triangle_free", c.triangle_free},
          {"degree_bound_holds", c.degree_bound_holds},
          {"diameter_ge_3", c.diameter_ge_3},
          {"has_cut_vertex", c.has_cut_vertex},
          {"diameter", c.diameter},
          {"max_degree", c.max_degree},
          {"complement_connectivity", c.complement_connectivity}};
}

namespace {

GraphConditionSet conditions_from_json(const Json& j) {
  GraphConditionSet c;
  c.complement_4_connected = j.at("complement_4_connected").get<bool>();
  c.triangle_free = j.at("triangle_free").get<bool>();
  c.degree_bound_holds = j.at("degree_bound_holds").get<bool>();
  c.diameter_ge_3 = j.at("diameter_ge_3").get<bool>();
  c.has_cut_vertex = j.at("has_cut_vertex").get<bool>();
  c.diameter = j.at("diameter").get<int>();
  c.max_degree = j.at("max_degree").get<int>();
  c.complement_connectivity = j.at("complement_connectivity").get<int>();
  return c;
}

}  // namespace

Json to_json(const TheoremCheckRecord& rec) {
  Json verdicts = Json::array();
  for (const auto& v : rec.verdicts) {
    verdicts.push_back({{"name", v.name}, {"verdict", to_string(v.verdict)}, {"note", v.note}});
  }
  return {{"graph6", rec.graph6},
          {"n", rec.n},
          {"m", rec.m},
          {"l", optional_json(rec.leaf_number)},
          {"d", optional_json(rec.diameter)},
          {"max_degree", optional_json(rec.max_degree)},
          {"tmc", optional_json(rec.tmc)},
          {"mc", optional_json(rec.mc)},
          {"mvc", optional_json(rec.mvc)},
          {"sufficient_conditions", rec.conditions ? to_json(*rec.conditions) : Json(nullptr)},
          {"verdicts", verdicts},
          {"violated", rec.violated()},
          {"seconds", rec.seconds},
          {"skip_reason", rec.skip_reason}};
}

TheoremCheckRecord check_record_from_json(const Json& j) {
  TheoremCheckRecord rec;
  rec.graph6 = j.at("graph6").get<std::string>();
  rec.n = j.at("n").get<int>();
  rec.m = j.at("m").get<int>();
  rec.leaf_number = optional_from<int>(j, "l");
  rec.diameter = optional_from<int>(j, "d");
  rec.max_degree = optional_from<int>(j, "max_degree");
  rec.tmc = optional_from<int>(j, "tmc");
  rec.mc = optional_from<int>(j, "mc");
  rec.mvc = optional_from<int>(j, "mvc");
  if (j.contains("sufficient_conditions") && !j.at("sufficient_conditions").is_null()) {
    rec.conditions = conditions_from_json(j.at("sufficient_conditions"));
  }
  for (const auto& v : j.at("verdicts")) {
    rec.verdicts.push_back({v.at("name").get<std::string>(),
                            verdict_from_string(v.at("verdict").get<std::string>()),
                            v.at("note").get<std::string>()});
  }
  rec.seconds = j.at("seconds").get<double>();
  rec.skip_reason = j.at("skip_reason").get<std::string>();
  return rec;
}

Json to_json(const SurveyRecord& rec) {
  return {{"n", rec.n},
          {"p", rec.p},
          {"seed", rec.seed},
          {"trials", rec.trials},
          {"connected", rec.connected},
          {"discarded", rec.discarded},
          {"identity", rec.identity},
          {"identity_by_exact", rec.identity_by_exact},
          {"identity_by_certificate", rec.identity_by_certificate},
          {"identity_undecided", rec.identity_undecided},
          {"complement_4_connected", rec.complement_4_connected},
          {"mc_identity", rec.mc_identity},
          {"mc_undecided", rec.mc_undecided},
          {"fraction_identity", rec.fraction_identity},
          {"fraction_complement_4_connected", rec.fraction_complement_4_connected},
          {"fraction_mc_identity", rec.fraction_mc_identity}};
}

SurveyRecord survey_record_from_json(const Json& j) {
  SurveyRecord rec;
  rec.n = j.at("n").get<int>();
  rec.p = j.at("p").get<double>();
  rec.seed = j.at("seed").get<std::uint64_t>();
  rec.trials = j.at("trials").get<int>();
  rec.connected = j.at("connected").get<int>();
  rec.discarded = j.at("discarded").get<int>();
  rec.identity = j.at("identity").get<int>();
  rec.identity_by_exact = j.at("identity_by_exact").get<int>();
  rec.identity_by_certificate = j.at("identity_by_certificate").get<int>();
  rec.identity_undecided = j.at("identity_undecided").get<int>();
  rec.complement_4_connected = j.at("complement_4_connected").get<int>();
  rec.mc_identity = j.at("mc_identity").get<int>();
  rec.mc_undecided = j.at("mc_undecided").get<int>();
  rec.fraction_identity = j.at("fraction_identity").get<double>();
  rec.fraction_complement_4_connected = j.at("fraction_complement_4_connected").get<double>();
  rec.fraction_mc_identity = j.at("fraction_mc_identity").get<double>();
  return rec;
}

Json to_json(const HuntReport& report) {
  Json findings = Json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"graph6", f.graph6},
                        {"n", f.n},
                        {"m", f.m},
                        {"tmc", f.tmc},
                        {report.target == "problem1" ? "mvc" : "mc", f.other},
                        {"note", f.note}});
  }
  return {{"target", report.target},
          {"examined", report.examined},
          {"filtered", report.filtered},
          {"skipped", report.skipped},
          {"findings", findings}};
}

std::string check_csv_header() { return "graph6,n,m,l,d,max_degree,tmc,mc,mvc,violated,seconds"; }

std::string to_csv_row(const TheoremCheckRecord& rec) {
  auto field = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream out;
  // graph6 never contains commas or quotes except '"' (34 < 63), so quoting
  // is only needed for safety against '\'.
  out << '"' << rec.graph6 << '"' << ',' << rec.n << ',' << rec.m << ',' << field(rec.leaf_number)
      << ',' << field(rec.diameter) << ',' << field(rec.max_degree) << ',' << field(rec.tmc) << ','
      << field(rec.mc) << ',' << field(rec.mvc) << ',' << (rec.violated() ? 1 : 0) << ','
      << rec.seconds;
  return out.str();
}

}  // namespace monoconn
