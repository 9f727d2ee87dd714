#pragma once

#include "ariadne/barrier.hpp"

#include <optional>
#include <vector>

namespace ariadne {

inline constexpr double kExactResidual = 1e-8;
inline constexpr int kMultiplierSteps = 10000;

struct MultiplierSolve {
  Strategy strategy;
  double residual;  ///< ||CY - target||_2
  int steps;

  bool exact() const { return residual <= kExactResidual; }
};

/// Minimizes ||CY - target||_2 over the simplex with accelerated projected gradient
/// (restarting FISTA), stopping at projected-gradient norm <= 1e-10 or after max_steps.
MultiplierSolve solve_multiplier(const Matrix& c, const Vector& target,
                                 const std::optional<Strategy>& warm_start = std::nullopt,
                                 int max_steps = kMultiplierSteps);

/// Per-step record of how the operative matrix was built.
struct OperativeRecord {
  BarrierKind kind;
  double g1;
  int best_response;
  double shift;
  double scale;
};

/// Iterates X^0..X^{K+1}, multipliers Y^0..Y^K and rates alpha_0..alpha_K.
/// Strategy coordinates are addressed 0-based in this module.
struct Trace {
  Matrix game_matrix;  ///< the C in C Y
  std::vector<Strategy> iterates;
  std::vector<Strategy> multipliers;
  std::vector<double> residuals;
  std::vector<double> rates;
  std::vector<double> a_k;  ///< a_k[K] = alpha_0 + ... + alpha_K
  std::vector<SignedLog> barrier_values;
  std::vector<FeasibilityClass> feasibility;
  std::vector<OperativeRecord> provenance;

  /// Appends Y^K, alpha_K and X^{K+1}.
  void push(const MultiplierSolve& y, double alpha, const Strategy& next);
  std::size_t steps() const { return multipliers.size(); }
  bool consistent() const;
  bool all_exact(std::size_t upto) const;
};

/// Trace of Hedge self-play on C where every step is driven by C Y^K and Y^K solves
/// CY = C X^K (warm-started from the previous multiplier).
Trace multiplier_driven_trace(const Matrix& c, const Strategy& x0, double alpha, int steps);

/// (1/A_K) sum_{k<=K} alpha_k Y^k.
Strategy weighted_average(const Trace& trace, std::size_t upto);

struct IdentityValues {
  double lhs;
  double rhs;
};

/// lhs = (E_i - E_j) . C Ybar^K,
/// rhs = (ln(X^{K+1}_i / X^0_i) - ln(X^{K+1}_j / X^0_j)) / A_K.
/// Throws DomainError if X^0 is not interior.
IdentityValues payoff_difference_identity(const Trace& trace, Index i, Index j, std::size_t upto);

/// True iff every pair p, q is ordered the same way by (C Ybar^K)_p and by
/// ln(X^{K+1}_p / X^0_p) / A_K, with differences below tol counted as ties.
bool ranking_consistency(const Trace& trace, std::size_t upto, double tol = 1e-9);

struct BoundCheck {
  double lhs;
  double rhs;
  bool holds;
  Index strategy;  ///< the second-ranked pure strategy
};

/// lhs = (C Ybar)_p - Ybar . C Ybar for p second in descending payoff order (ties by index);
/// rhs = 2c ln(X^{K+1}_p / X^0_p) / A_K. Throws ValidationError if C is not positive with
/// max/min ratio <= c.
BoundCheck error_bound_check(const Trace& trace, std::size_t upto, double c);

}  // namespace ariadne
