#pragma once

#include "ariadne/solver.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ariadne::props {

struct SuiteResult {
  std::string name;
  long trials = 0;
  long skipped = 0;
  long failures = 0;
  nlohmann::json counterexample;  ///< first failing instance, null when passed
  nlohmann::json stats = nlohmann::json::object();

  bool passed() const { return failures == 0; }
};

struct Config {
  long trials = 1000;
  std::vector<std::string> suites;  ///< empty runs every suite
  std::uint64_t seed = 1;
  double alpha = 0.1;               ///< learning rate of the band suite
  /// Replaces the Hedge step of the growth suite by a descent step, to prove the harness
  /// reports failures.
  bool inject_bug = false;
};

const std::vector<std::string>& suite_names();

std::vector<SuiteResult> run(const Config& cfg);
nlohmann::json to_json(const std::vector<SuiteResult>& results);

// Individual suites, shared with the acceptance harness.

/// 10 * trials random Hedge and finite-k steps; potential must not drop and must rise
/// when the step moves.
SuiteResult growth(long trials, std::mt19937_64& rng, bool inject_bug = false);

/// Exact-multiplier Hedge traces on random 2x2 games and the K3 game.
struct TraceSuites {
  SuiteResult identity;
  SuiteResult ranking;
  SuiteResult bound;
};
TraceSuites trace_suites(long traces, int steps, std::mt19937_64& rng);

/// Guarded primary steps from the initial point for every graph at k = omega.
SuiteResult band(const std::vector<Graph>& graphs, long steps, double alpha);

/// Connected graphs on at most 6 vertices: every isomorphism class plus random labelled
/// samples, at least `minimum` graphs in total.
std::vector<Graph> small_corpus(std::size_t minimum, std::uint64_t seed);

/// Non-clique replicator fixed points stay below 1 - 1/(2(omega-1)), and at k = omega the
/// fixed points in the closed band reach the upper threshold.
SuiteResult fixed_points(const std::vector<Graph>& corpus);

/// Positive potential gaps of fixed points are at least 1/(2(omega-1)) - 1/(2 omega).
SuiteResult gap_bound(const std::vector<Graph>& corpus);

/// Connected graphs with a known clique number used across the harness.
std::vector<std::pair<std::string, Graph>> curated_graphs();

}  // namespace ariadne::props
