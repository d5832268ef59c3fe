#include "monoconn/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "monoconn/generators.hpp"
#include "monoconn/graph6.hpp"
#include "monoconn/maxleaf.hpp"

namespace monoconn {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::not_applicable:
      return "not-applicable";
    case Verdict::skipped:
      return "skipped";
  }
  return "unknown";
}

Verdict verdict_from_string(const std::string& text) {
  if (text == "holds") return Verdict::holds;
  if (text == "violated") return Verdict::violated;
  if (text == "not-applicable") return Verdict::not_applicable;
  if (text == "skipped") return Verdict::skipped;
  throw GraphError("unknown verdict \"" + text + "\"");
}

bool TheoremCheckRecord::violated() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const TheoremVerdict& v) { return v.verdict == Verdict::violated; });
}

const TheoremVerdict* TheoremCheckRecord::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

namespace {

TheoremVerdict judge(std::string name, bool applicable, bool holds, std::string note = {}) {
  if (!applicable) return {std::move(name), Verdict::not_applicable, std::move(note)};
  return {std::move(name), holds ? Verdict::holds : Verdict::violated, std::move(note)};
}

std::string relation(const char* lhs, int a, const char* op, const char* rhs, int b) {
  return std::string(lhs) + "=" + std::to_string(a) + " " + op + " " + rhs + "=" +
         std::to_string(b);
}

const std::vector<std::string>& verdict_names() {
  static const std::vector<std::string> names = {
      "leaf_lower_bound",      "identity_conditions", "dense_tmc_exceeds_mvc",
      "diameter2_tmc_exceeds_mvc",       "sum_upper_bound",             "mc_plus_leaves",
      "spanning_subgraph_monotone", "tree_formula",               "wheel_formula",
      "multipartite_formula", "complete_tmc",               "complete_mc",
      "mvc_diameter2",         "mvc_bounds",                 "diameter2_edge_table",
      "internal_sum_audit",   "witness_integrity"};
  return names;
}

/// Deletes random non-bridge edges (one to three) to obtain a connected
/// spanning subgraph; nullopt for trees.
std::optional<Graph> sample_spanning_subgraph(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(u, v);
  const int deletions = 1 + static_cast<int>(rng() % 3);
  bool removed_any = false;
  for (int step = 0; step < deletions; ++step) {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    bool removed = false;
    for (std::size_t idx : order) {
      auto trial = edges;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(idx));
      if (is_connected(Graph::from_edge_list(g.order(), trial))) {
        edges = std::move(trial);
        removed = removed_any = true;
        break;
      }
    }
    if (!removed) break;
  }
  if (!removed_any) return std::nullopt;
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace

std::optional<int> lemma4_bound(int n, int max_deg) {
  const int d = max_deg;
  if (2 * d < n + 1 || d > n - 2) return std::nullopt;
  if (d == n - 2 || d == n - 3) return n + d - 2;
  if (d == n - 4) return 2 * n - 5;
  if (3 * d >= 2 * n - 2 && d <= n - 5) return 2 * n - 4;
  if (5 * d >= 3 * n - 3 && 3 * d < 2 * n - 2) return 3 * n - d - 6;
  if (9 * d >= 5 * n - 3 && 5 * d < 3 * n - 3) return 5 * n - 4 * d - 10;
  if (9 * d < 5 * n - 3) return 4 * n - 2 * d - 11;
  return std::nullopt;
}

TheoremVerdict check_lemma4(const Graph& g) {
  const std::string name = "diameter2_edge_table";
  if (g.order() < 2 || !is_connected(g)) return {name, Verdict::not_applicable, "disconnected"};
  const int d = diameter(g);
  if (d != 2) return {name, Verdict::not_applicable, "diameter " + std::to_string(d)};
  const auto required = lemma4_bound(g.order(), max_degree(g));
  if (!required) return {name, Verdict::not_applicable, "max degree outside table"};
  return judge(name, true, g.size() >= *required, relation("m", g.size(), ">=", "bound", *required));
}

bool is_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4 || g.size() != 2 * (n - 1)) return false;
  for (int hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    // Rim: every other vertex has degree 3 and the rim is one cycle.
    std::vector<std::pair<int, int>> rim;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (v != hub && g.degree(v) != 3) ok = false;
    }
    if (!ok) continue;
    std::vector<int> index(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
      if (v != hub) index[v] = next++;
    }
    for (auto [u, v] : g.edges()) {
      if (u != hub && v != hub) rim.emplace_back(index[u], index[v]);
    }
    if (is_connected(Graph::from_edge_list(n - 1, rim))) return true;
  }
  return false;
}

std::optional<std::vector<int>> multipartite_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (int w = v; w < n; ++w) {
      if (w == v || (cls[w] < 0 && !g.adjacent(v, w))) {
        cls[w] = id;
        ++sizes[id];
      }
    }
  }
  if (sizes.size() < 2) return std::nullopt;
  // Complete multipartite: adjacent exactly across classes.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != (cls[u] != cls[v])) return std::nullopt;
    }
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

TheoremCheckRecord check_all(const Graph& g, const CheckOptions& options) {
  if (g.order() < 1) throw GraphError("empty graph");
  if (!is_connected(g)) throw GraphError("disconnected");
  const auto start = std::chrono::steady_clock::now();
  TheoremCheckRecord rec;
  rec.graph6 = to_graph6(g);
  rec.n = g.order();
  rec.m = g.size();
  const int n = rec.n;
  const int m = rec.m;
  rec.diameter = diameter(g);
  rec.max_degree = max_degree(g);
  const int d = *rec.diameter;
  const int delta = *rec.max_degree;
  const bool complete = g.is_complete();

  auto finish = [&]() {
    rec.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
  };

  SolverReport tmc_report;
  SolverReport mc_report;
  SolverReport mvc_report;
  try {
    tmc_report = tmc_exact(g, options.limits);
    mc_report = mc_exact(g, options.limits);
    mvc_report = mvc_exact(g, options.limits);
  } catch (const SolverRangeError& e) {
    rec.skip_reason = e.what();
    for (const auto& name : verdict_names()) {
      rec.verdicts.push_back({name, Verdict::skipped, rec.skip_reason});
    }
    return finish();
  }
  const int tmc = rec.tmc.emplace(tmc_report.value);
  const int mc = rec.mc.emplace(mc_report.value);
  const int mvc = rec.mvc.emplace(mvc_report.value);
  const bool nontrivial = n >= 2;
  int l = 0;
  if (nontrivial) l = rec.leaf_number.emplace(max_leaf_exact(g).leaf_count);
  const int identity = m - n + 2 + l;

  auto& out = rec.verdicts;
  out.push_back(judge("leaf_lower_bound", nontrivial, tmc >= identity,
                      relation("tmc", tmc, ">=", "m-n+2+l", identity)));

  if (n > 3) {
    rec.conditions = theorem2_conditions(g);
    out.push_back(judge("identity_conditions", rec.conditions->any(), tmc == identity,
                        relation("tmc", tmc, "==", "m-n+2+l", identity)));
  } else {
    out.push_back(judge("identity_conditions", false, true, "n <= 3"));
  }

  {
    const char* cmp = tmc > mvc ? ">" : tmc == mvc ? "==" : "<";
    const bool dense = nontrivial && m >= 2 * n - d - 2;
    out.push_back(judge("dense_tmc_exceeds_mvc", dense, tmc > mvc,
                        (dense ? std::string() : relation("m", m, "<", "2n-d-2", 2 * n - d - 2) + "; ") +
                            relation("tmc", tmc, cmp, "mvc", mvc)));
    const bool hub = d == 2 && 2 * delta >= n + 1;
    out.push_back(judge("diameter2_tmc_exceeds_mvc", hub, tmc > mvc,
                        (hub ? std::string() : "hypothesis fails; ") +
                            relation("tmc", tmc, cmp, "mvc", mvc)));
  }

  {
    const bool equal = tmc == mc + mvc;
    std::string note = relation("tmc", tmc, equal ? "==" : "vs", "mc+mvc", mc + mvc);
    if (complete && equal) note = "equality & complete: consistent";
    out.push_back(judge("sum_upper_bound", true,
                        tmc <= mc + mvc && (equal == complete), note));
  }
  out.push_back(judge("mc_plus_leaves", nontrivial && !complete, tmc <= mc + l,
                      relation("tmc", tmc, "<=", "mc+l", mc + l)));

  {
    std::mt19937_64 rng(options.seed ^ std::hash<std::string>{}(rec.graph6));
    bool applicable = false;
    bool holds = true;
    std::string note = "graph is a tree";
    for (int s = 0; s < options.subgraph_samples; ++s) {
      auto sub = sample_spanning_subgraph(g, rng);
      if (!sub) break;
      applicable = true;
      const int sub_tmc = tmc_exact(*sub, options.limits).value;
      const int rhs = (m - sub->size()) + sub_tmc;
      if (tmc < rhs) holds = false;
      note = relation("tmc", tmc, ">=", "e(G)-e(H)+tmc(H)", rhs);
    }
    out.push_back(judge("spanning_subgraph_monotone", applicable, holds, note));
  }

  out.push_back(judge("tree_formula", nontrivial && is_tree(g), tmc == l + 1,
                      relation("tmc", tmc, "==", "l+1", l + 1)));
  out.push_back(judge("wheel_formula", n >= 5 && is_wheel(g), tmc == m + 1,
                      relation("tmc", tmc, "==", "m+1", m + 1)));
  {
    const auto classes = multipartite_classes(g);
    int expected = 0;
    if (classes) {
      const int r = static_cast<int>(classes->size());
      const int t = static_cast<int>(
          std::count_if(classes->begin(), classes->end(), [](int s) { return s >= 2; }));
      expected = m + r - t;
    }
    out.push_back(judge("multipartite_formula", classes.has_value(), tmc == expected,
                        relation("tmc", tmc, "==", "m+r-t", expected)));
  }

  out.push_back(judge("complete_tmc", true, (tmc == m + n) == complete,
                      relation("tmc", tmc, "vs", "m+n", m + n)));
  out.push_back(judge("complete_mc", true, (mc == m) == complete, relation("mc", mc, "vs", "m", m)));
  out.push_back(judge("mvc_diameter2", true, (mvc == n) == (d <= 2),
                      relation("mvc", mvc, "vs", "n", n)));
  if (nontrivial) {
    const auto b = bounds(g, mc, mvc);
    out.push_back(judge("mvc_bounds", true, b.mvc_lower <= mvc && mvc <= b.mvc_upper,
                        std::to_string(b.mvc_lower) + " <= mvc=" + std::to_string(mvc) +
                            " <= " + std::to_string(b.mvc_upper)));
  } else {
    out.push_back(judge("mvc_bounds", false, true, "n = 1"));
  }

  out.push_back(check_lemma4(g));

  {
    const int q = n - l;
    const int sum_q = tmc_report.system ? tmc_report.system->internal_sum() : 0;
    out.push_back(judge("internal_sum_audit", nontrivial && !complete, sum_q >= q,
                        relation("sum q_i", sum_q, ">=", "q(G)", q)));
  }

  {
    std::string problem;
    const auto& tc = std::get<TotalColoring>(tmc_report.witness);
    const auto& ec = std::get<EdgeColoring>(mc_report.witness);
    const auto& vc = std::get<VertexColoring>(mvc_report.witness);
    if (!verify_tmc(g, tc) || color_count(tc) != tmc) problem = "tmc witness";
    if (!verify_mc(g, ec) || color_count(ec) != mc) problem = "mc witness";
    if (!verify_mvc(g, vc) || color_count(vc) != mvc) problem = "mvc witness";
    if (tmc_report.system) {
      auto why = validate_tree_system(g, *tmc_report.system, SystemKind::total);
      if (!why.empty()) problem = "tmc tree system: " + why;
      if (m + n - tmc_report.system->total_waste() != tmc) problem = "tmc waste accounting";
    }
    if (mc_report.system) {
      auto why = validate_tree_system(g, *mc_report.system, SystemKind::edge);
      if (!why.empty()) problem = "mc tree system: " + why;
    }
    out.push_back(judge("witness_integrity", true, problem.empty(),
                        problem.empty() ? "all witnesses re-verified" : problem));
  }
  return finish();
}

SurveyRecord survey_random(int n, double p, int trials, std::uint64_t seed,
                           const SurveyOptions& options) {
  if (trials < 1) throw GraphError("survey needs trials >= 1");
  SurveyRecord rec;
  rec.n = n;
  rec.p = p;
  rec.seed = seed;
  rec.trials = trials;
  std::mt19937_64 stream(seed);
  const auto& limits = options.limits;
  const int exact_tmc_n = std::min(options.exact_tmc_n, limits.max_exact_n);
  const int exact_mc_n = std::min(options.exact_mc_n, limits.max_exact_n);
  for (int t = 0; t < trials; ++t) {
    const auto g = random_gnp(n, p, stream());
    if (!is_connected(g)) {
      ++rec.discarded;
      continue;
    }
    ++rec.connected;
    const int m = g.size();
    const bool comp4 = vertex_connectivity(complement(g)) >= 4;
    rec.complement_4_connected += comp4;
    const bool certified = n > 3 && theorem2_conditions(g).any();

    if (n == 1) {
      ++rec.identity_undecided;
      ++rec.mc_undecided;
      continue;
    }
    const int l = max_leaf_exact(g).leaf_count;
    if (n <= exact_tmc_n) {
      const bool holds = tmc_exact(g, limits).value == m - n + 2 + l;
      rec.identity += holds;
      rec.identity_by_exact += holds;
    } else if (certified) {
      ++rec.identity;
      ++rec.identity_by_certificate;
    } else {
      ++rec.identity_undecided;
    }
    if (n <= exact_mc_n) {
      rec.mc_identity += mc_exact(g, limits).value == m - n + 2;
    } else if (certified) {
      ++rec.mc_identity;
    } else {
      ++rec.mc_undecided;
    }
  }
  if (rec.connected > 0) {
    rec.fraction_identity = static_cast<double>(rec.identity) / rec.connected;
    rec.fraction_complement_4_connected =
        static_cast<double>(rec.complement_4_connected) / rec.connected;
    rec.fraction_mc_identity = static_cast<double>(rec.mc_identity) / rec.connected;
  }
  return rec;
}

namespace {

template <typename Probe>
HuntReport hunt(std::string target, std::span<const Graph> corpus, Probe probe) {
  HuntReport report;
  report.target = std::move(target);
  for (const auto& g : corpus) {
    if (!is_connected(g)) {
      ++report.filtered;
      continue;
    }
    try {
      if (auto finding = probe(g)) {
        report.findings.push_back(std::move(*finding));
      }
      ++report.examined;
    } catch (const SolverRangeError&) {
      ++report.skipped;
    }
  }
  return report;
}

}  // namespace

HuntReport hunt_problem1(std::span<const Graph> corpus, const SolverLimits& limits) {
  int filtered = 0;
  auto report = hunt("problem1", corpus, [&](const Graph& g) -> std::optional<Finding> {
    if (g.order() < 6 || is_star(g)) {
      ++filtered;
      return std::nullopt;
    }
    const int tmc = tmc_exact(g, limits).value;
    const int mvc = mvc_exact(g, limits).value;
    if (tmc > mvc) return std::nullopt;
    return Finding{to_graph6(g), g.order(), g.size(), tmc, mvc, "tmc <= mvc"};
  });
  report.filtered += filtered;
  report.examined -= filtered;
  return report;
}

HuntReport hunt_conjecture1(std::span<const Graph> corpus, const SolverLimits& limits) {
  return hunt("conjecture1", corpus, [&](const Graph& g) -> std::optional<Finding> {
    const int tmc = tmc_exact(g, limits).value;
    const int mc = mc_exact(g, limits).value;
    if (tmc > mc) return std::nullopt;
    return Finding{to_graph6(g), g.order(), g.size(), tmc, mc, "tmc <= mc"};
  });
}

std::vector<Graph> builtin_corpus(int max_n) {
  if (max_n < 1 || max_n > 7) throw GraphError("builtin corpus supports 1 <= n <= 7");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto layer = all_connected_labeled(n);
    std::move(layer.begin(), layer.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace monoconn
