#pragma once

#include "ariadne/barrier.hpp"
#include "ariadne/multipliers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ariadne {

struct Tolerances {
  double init_target = 1e-9;        ///< |max (CX^0)_i - target| after bisection
  double interior_floor = 1e-12;    ///< mass mixed into every coordinate of X^0
  double barrier_monotone = 1e-12;  ///< allowed log-magnitude slack per primary step
  double stall_displacement = 1e-15;  ///< ||X^{K+1} - X^K||_inf treated as a fixed point
  double boundary = 1e-9;           ///< min F within this of C00 marks the band boundary
};

struct RunConfig {
  double alpha = 0.1;
  std::optional<int> k0;
  double budget_scale = 1.0;
  std::uint64_t seed = 0;
  Tolerances tol;
  bool use_oracle = true;
  int oracle_cap = kDefaultOracleCap;
  bool record_trace = false;
  /// Solve for a multiplier on every step (needed for the averaged equilibrium check).
  bool solve_multipliers = true;
  /// Number of equilibrium checks spread evenly over the budget.
  int checks = 100;

  void validate() const;
};

enum class KResult { FoundClique, BudgetExhausted, BandEmpty, Fault };

std::string to_string(KResult r);

struct KOutcome {
  int k = 0;
  KResult result = KResult::BandEmpty;
  VertexSet clique;  ///< set only for FoundClique
  long iterations_used = 0;
  long budget = 0;
  bool switched_to_secondary = false;
  long switch_iteration = -1;
  SignedLog final_barrier;
  /// Band empty, but the minimizer of max (CX)_i sits on the boundary and was accepted.
  bool boundary_candidate = false;
  /// The iterates stopped moving before the budget ran out.
  bool stalled = false;
  /// Which strategy produced the clique: "average", "iterate" or "boundary".
  std::string accepted_from;
  double max_residual = 0.0;
  long exact_multipliers = 0;
  long multiplier_solves = 0;
  std::string fault;       ///< fault message, if any
  std::string fault_dump;  ///< JSON diagnostic, if any
  std::optional<Trace> trace;
};

struct Report {
  int n = 0;
  std::size_t m = 0;
  bool connected = false;
  std::vector<KOutcome> outcomes;
  VertexSet clique;
  int clique_size = 0;
  /// The k=2 edge fallback produced the clique.
  bool fallback = false;
  std::optional<int> oracle_omega;
  std::optional<VertexSet> oracle_witness;
  std::optional<bool> agreement;
  /// k values at which the secondary barrier was switched on although k differs from the
  /// oracle clique number.
  std::vector<int> switch_mismatches;
  long total_iterations = 0;
};

/// min(n, max degree + 1).
int initial_k(const Graph& g);

/// Strictly lower feasible X^0 with max (CX^0)_i at the midpoint of the band, or nullopt
/// when the minimum of max (CX)_i over the simplex is above that midpoint.
std::optional<Strategy> initialize(const NisanGame& game, const RunConfig& cfg);

/// ceil(scale * 2c ln(1/min_x0) / (alpha eps)).
long iteration_budget(double min_x0, double c, double alpha, double eps, double scale);
long iteration_budget(const NisanGame& game, const Strategy& x0, const RunConfig& cfg);

KOutcome run_for_k(const NisanGame& game, const RunConfig& cfg);

Report run(const Graph& g, const RunConfig& cfg);

}  // namespace ariadne
