// Command-line front end. Every subcommand prints JSON lines on stdout.
// Exit status: 0 ok, 1 a verdict was violated, 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monoconn/constructions.hpp"
#include "monoconn/generators.hpp"
#include "monoconn/graph6.hpp"
#include "monoconn/harness.hpp"
#include "monoconn/maxleaf.hpp"
#include "monoconn/report_json.hpp"
#include "monoconn/solvers.hpp"

using namespace monoconn;

namespace {

constexpr int kExitViolated = 1;
constexpr int kExitMalformed = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A path, "-" for stdin, or a literal graph6 string.
std::vector<Graph> load_graphs(const std::string& arg) {
  std::ifstream probe(arg);
  const std::string text = (arg == "-" || probe.good()) ? slurp(arg) : arg;
  return parse_graph_input(text);
}

std::vector<Graph> load_corpus(const std::string& arg) {
  static const std::regex builtin(R"(builtin:(?:n<=)?(\d+))");
  std::smatch match;
  if (std::regex_match(arg, match, builtin)) {
    const int max_n = std::stoi(match[1]);
    if (max_n < 1 || max_n > 7) throw InputError("builtin corpus supports 1 <= n <= 7");
    return builtin_corpus(max_n);
  }
  return load_graphs(arg);
}

Graph single_graph(const std::string& arg) {
  auto graphs = load_graphs(arg);
  if (graphs.size() != 1) {
    throw InputError("expected one graph, got " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Json graph_header(const Graph& g) {
  return {{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
}

int run_compute(const std::string& input, const std::string& invariant) {
  const auto limits = SolverLimits::from_env();
  for (const auto& g : load_graphs(input)) {
    if (!is_connected(g)) throw GraphError("disconnected graph " + to_graph6(g));
    Json rec = graph_header(g);
    const bool all = invariant == "all";
    try {
      if (all || invariant == "l") {
        rec["l"] = g.order() >= 2 ? to_json(max_leaf_exact(g)) : Json(nullptr);
      }
      if (all || invariant == "tmc") rec["tmc"] = to_json(g, tmc_exact(g, limits));
      if (all || invariant == "mc") rec["mc"] = to_json(g, mc_exact(g, limits));
      if (all || invariant == "mvc") rec["mvc"] = to_json(g, mvc_exact(g, limits));
    } catch (const SolverRangeError& e) {
      rec["skipped"] = e.what();
    }
    emit(rec);
  }
  return 0;
}

int run_verify(const std::string& coloring_path, const std::string& input, std::string kind) {
  const Graph g = single_graph(input);
  Json raw;
  try {
    raw = Json::parse(slurp(coloring_path));
  } catch (const Json::exception& e) {
    throw InputError(std::string("coloring JSON: ") + e.what());
  }
  const auto parsed = coloring_from_json(g, raw);
  if (kind == "auto") {
    kind = parsed.vertex_colors && parsed.edge_colors ? "tmc" : parsed.edge_colors ? "mc" : "mvc";
  }
  VerifyResult result;
  int colors = 0;
  if (kind == "tmc") {
    if (!parsed.vertex_colors || !parsed.edge_colors) {
      throw InputError("tmc verification needs vertex_colors and edge_colors");
    }
    TotalColoring c{*parsed.vertex_colors, *parsed.edge_colors};
    result = verify_tmc(g, c);
    colors = color_count(c);
  } else if (kind == "mc") {
    if (!parsed.edge_colors) throw InputError("mc verification needs edge_colors");
    EdgeColoring c{*parsed.edge_colors};
    result = verify_mc(g, c);
    colors = color_count(c);
  } else {
    if (!parsed.vertex_colors) throw InputError("mvc verification needs vertex_colors");
    VertexColoring c{*parsed.vertex_colors};
    result = verify_mvc(g, c);
    colors = color_count(c);
  }
  Json rec = graph_header(g);
  rec["kind"] = kind;
  rec["colors"] = colors;
  rec["verdict"] = result.ok ? "holds" : "violated";
  rec["uncovered"] = result.uncovered
                         ? Json::array({result.uncovered->first, result.uncovered->second})
                         : Json(nullptr);
  emit(rec);
  return result.ok ? 0 : kExitViolated;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      sizes.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("bad class size \"" + item + "\"");
    }
  }
  return sizes;
}

int run_construct(const std::string& family, int n, const std::string& sizes_text,
                  const std::string& input) {
  Graph g;
  TotalColoring coloring;
  int expected = 0;
  if (family == "wheel") {
    auto built = wheel_tmc_coloring(n);
    g = built.graph;
    coloring = built.coloring;
    expected = g.size() + 1;
  } else if (family == "complete") {
    auto built = complete_tmc_coloring(n);
    g = built.graph;
    coloring = built.coloring;
    expected = g.size() + g.order();
  } else if (family == "multipartite") {
    const auto sizes = parse_sizes(sizes_text);
    auto built = multipartite_tmc_coloring(sizes);
    g = built.graph;
    coloring = built.coloring;
    int t = 0;
    for (int s : sizes) t += s >= 2;
    expected = g.size() + static_cast<int>(sizes.size()) - t;
  } else {
    g = input.empty() ? random_tree(n, 1) : single_graph(input);
    if (!is_connected(g)) throw GraphError("disconnected graph");
    const auto tree = max_leaf_exact(g);
    coloring = tree_based_tmc_coloring(g, tree);
    expected = g.size() - g.order() + 2 + tree.leaf_count;
  }
  const auto check = verify_tmc(g, coloring);
  const int colors = color_count(coloring);
  Json rec = graph_header(g);
  rec["family"] = family;
  rec["colors"] = colors;
  rec["expected"] = expected;
  rec["verdict"] = check.ok && colors == expected ? "holds" : "violated";
  rec["coloring"] = coloring_to_json(g, coloring);
  emit(rec);
  return check.ok && colors == expected ? 0 : kExitViolated;
}

int run_check(const std::string& corpus, const std::string& csv_path, int samples,
              std::uint64_t seed) {
  CheckOptions options;
  options.subgraph_samples = samples;
  options.seed = seed;
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw InputError("cannot write " + csv_path);
    csv << check_csv_header() << '\n';
  }
  bool violated = false;
  for (const auto& g : load_corpus(corpus)) {
    const auto rec = check_all(g, options);
    violated = violated || rec.violated();
    emit(to_json(rec));
    if (csv.is_open()) csv << to_csv_row(rec) << '\n';
  }
  return violated ? kExitViolated : 0;
}

int run_survey(int n, double p, int trials, std::uint64_t seed, int exact_n) {
  if (trials < 1) throw InputError("trials must be >= 1");
  if (n < 1 || n > kMaxMaskVertices) throw InputError("n out of range");
  if (p < 0.0 || p > 1.0) throw InputError("p must lie in [0, 1]");
  SurveyOptions options;
  if (exact_n >= 0) options.exact_tmc_n = exact_n;
  emit(to_json(survey_random(n, p, trials, seed, options)));
  return 0;
}

int run_hunt(const std::string& target, const std::string& corpus) {
  const auto graphs = load_corpus(corpus);
  const auto report = target == "problem1" ? hunt_problem1(graphs) : hunt_conjecture1(graphs);
  emit(to_json(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic connectivity invariants of small graphs"};
  app.require_subcommand(1);

  std::string input;
  std::string invariant = "all";
  auto* compute = app.add_subcommand("compute", "exact tmc, mc, mvc and leaf number");
  compute->add_option("graph", input, "graph6 string, or a file of graph6 lines or an edge list")
      ->required();
  compute->add_option("--invariant", invariant)
      ->check(CLI::IsMember({"tmc", "mc", "mvc", "l", "all"}));

  std::string coloring_path;
  std::string kind = "auto";
  auto* verify = app.add_subcommand("verify", "check a coloring JSON against a graph");
  verify->add_option("--coloring", coloring_path, "coloring JSON file")->required();
  verify->add_option("--kind", kind)->check(CLI::IsMember({"auto", "tmc", "mc", "mvc"}));
  verify->add_option("graph", input)->required();

  std::string family;
  int order = 5;
  std::string sizes;
  auto* construct = app.add_subcommand("construct", "build a family coloring");
  construct->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"wheel", "multipartite", "tree", "complete"}));
  construct->add_option("--n", order, "order for wheel/complete, or random tree order");
  construct->add_option("--sizes", sizes, "class sizes, e.g. 3,2,1");
  construct->add_option("--graph", input, "host graph for the tree family");

  std::string corpus;
  std::string csv_path;
  int samples = 1;
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check", "run every statement on a corpus");
  check->add_option("--corpus", corpus, "file, or builtin:n<=K")->required();
  check->add_option("--csv", csv_path, "also write CSV rows here");
  check->add_option("--subgraph-samples", samples)->check(CLI::NonNegativeNumber);
  check->add_option("--seed", seed);

  int survey_n = 8;
  double p = 0.5;
  int trials = 200;
  int exact_n = -1;
  auto* survey = app.add_subcommand("survey", "G(n,p) identity frequencies");
  survey->add_option("--n", survey_n)->required();
  survey->add_option("--p", p);
  survey->add_option("--trials", trials);
  survey->add_option("--seed", seed);
  survey->add_option("--exact-n", exact_n, "largest n solved exactly");

  std::string target;
  auto* hunt = app.add_subcommand("hunt", "search a corpus for open-question findings");
  hunt->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember({"problem1", "conjecture1"}));
  hunt->add_option("--corpus", corpus)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*compute) return run_compute(input, invariant);
    if (*verify) return run_verify(coloring_path, input, kind);
    if (*construct) return run_construct(family, order, sizes, input);
    if (*check) return run_check(corpus, csv_path, samples, seed);
    if (*survey) return run_survey(survey_n, p, trials, seed, exact_n);
    if (*hunt) return run_hunt(target, corpus);
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << '\n';
    return kExitMalformed;
  }
  return 0;
}
