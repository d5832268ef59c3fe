#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoconn/graph.hpp"
#include "monoconn/solvers.hpp"

namespace monoconn {

enum class Verdict { holds, violated, not_applicable, skipped };

std::string to_string(Verdict verdict);
Verdict verdict_from_string(const std::string& text);

struct TheoremVerdict {
  std::string name;
  Verdict verdict = Verdict::not_applicable;
  std::string note;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Every theorem outcome for one graph. A "violated" verdict on any entry is
/// a hard failure of the corresponding statement.
struct TheoremCheckRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::optional<int> leaf_number;
  std::optional<int> diameter;
  std::optional<int> max_degree;
  std::optional<int> tmc;
  std::optional<int> mc;
  std::optional<int> mvc;
  std::optional<GraphConditionSet> conditions;
  std::vector<TheoremVerdict> verdicts;
  double seconds = 0.0;
  std::string skip_reason;  // non-empty when solvers were out of range

  bool violated() const;
  const TheoremVerdict* find(const std::string& name) const;
};

struct CheckOptions {
  SolverLimits limits = SolverLimits::from_env();
  /// Connected spanning subgraphs sampled for the edge-deletion monotonicity
  /// check.
  int subgraph_samples = 1;
  std::uint64_t seed = 0x5eed;
};

/// Runs every applicable statement against exact tmc, mc and mvc. Throws
/// GraphError on disconnected input; solver range errors produce a record
/// whose verdicts are all "skipped".
TheoremCheckRecord check_all(const Graph& g, const CheckOptions& options = {});

/// Minimum-size table for diameter-2 graphs with (n+1)/2 <= max degree <= n-2.
/// Returns the required edge count, or nullopt when the table does not apply.
std::optional<int> lemma4_bound(int n, int max_deg);

/// Compares m with lemma4_bound on diameter-2 graphs; not applicable
/// otherwise.
TheoremVerdict check_lemma4(const Graph& g);

/// Wheel W_{n-1}, n >= 4: a hub of degree n-1 whose removal leaves a cycle.
bool is_wheel(const Graph& g);

/// Class sizes (non-increasing) when g is complete multipartite with at
/// least two classes.
std::optional<std::vector<int>> multipartite_classes(const Graph& g);

struct SurveyRecord {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  int trials = 0;
  int connected = 0;
  int discarded = 0;  // disconnected samples
  int identity = 0;
  int identity_by_exact = 0;
  int identity_by_certificate = 0;
  int identity_undecided = 0;
  int complement_4_connected = 0;
  int mc_identity = 0;
  int mc_undecided = 0;
  double fraction_identity = 0.0;
  double fraction_complement_4_connected = 0.0;
  double fraction_mc_identity = 0.0;

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct SurveyOptions {
  SolverLimits limits = SolverLimits::from_env();
  /// Largest n for which tmc is computed exactly (further capped by
  /// limits.max_exact_n); above it only the sufficient conditions certify
  /// the identity.
  int exact_tmc_n = 12;
  /// Same for mc = m - n + 2.
  int exact_mc_n = 8;
};

/// Samples G(n, p) `trials` times from a seeded stream, discards disconnected
/// samples and reports how often tmc = m - n + 2 + l(G), how often the
/// complement is 4-connected, and how often mc = m - n + 2.
SurveyRecord survey_random(int n, double p, int trials, std::uint64_t seed,
                           const SurveyOptions& options = {});

struct Finding {
  std::string graph6;
  int n = 0;
  int m = 0;
  int tmc = 0;
  int other = 0;  // mvc for the problem1 hunt, mc for conjecture1
  std::string note;
};

struct HuntReport {
  std::string target;
  int examined = 0;
  int filtered = 0;
  int skipped = 0;  // out of solver range
  std::vector<Finding> findings;
};

/// Non-star connected graphs with n >= 6 and tmc <= mvc.
HuntReport hunt_problem1(std::span<const Graph> corpus, const SolverLimits& limits = SolverLimits::from_env());

/// Connected graphs with tmc <= mc.
HuntReport hunt_conjecture1(std::span<const Graph> corpus,
                            const SolverLimits& limits = SolverLimits::from_env());

/// All labeled connected graphs with 1 <= n <= max_n (max_n <= 7).
std::vector<Graph> builtin_corpus(int max_n);

}  // namespace monoconn
