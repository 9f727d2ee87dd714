#pragma once

#include "ariadne/strategy.hpp"

#include <optional>
#include <vector>

namespace ariadne {

inline constexpr double kEqualizerTol = 1e-8;

struct EqualizerSolution {
  Strategy strategy;
  double value;  ///< the common payoff c
};

enum class EqualizerStatus { Found, Infeasible, SolverFailure };

struct EqualizerResult {
  EqualizerStatus status;
  std::optional<EqualizerSolution> solution;
};

/// Feasibility LP  CX = c1, 1^T X = 1, X >= 0  with c free.
EqualizerResult solve_equalizer(const Matrix& c);

bool is_equalizer(const Matrix& c, const Strategy& x, double tol = kEqualizerTol);

/// Checks lambda X1 + (1 - lambda) X2 for each sampled lambda; combinations that leave the
/// simplex are skipped.
bool equalizer_line_check(const Matrix& c, const EqualizerSolution& x1,
                          const EqualizerSolution& x2, const std::vector<double>& lambdas);

/// (CX)max - (CX)min over all pure strategies.
double gap(const Matrix& c, const Strategy& x);
/// max_potential - X . CX
double potential_gap(const Matrix& c, const Strategy& x, double max_potential);
/// 1/(2(k-1)) - 1/(2k). Throws ValidationError for k < 2.
double min_gap_lower_bound(int k);

/// (CX)max - X . CX
double approx_error(const Matrix& c, const Strategy& x);
/// max - min of (CX)_i over the carrier of X.
double carrier_spread(const Matrix& c, const Strategy& x);

/// Slack added to every equilibrium comparison to absorb summation-order rounding.
inline constexpr double kEquilibriumSlack = 1e-12;

bool is_well_supported(const Matrix& c, const Strategy& x, double eps);

/// Zeroes coordinates with (CX)_i < (CX)max - eps_a/2 and renormalizes. For payoffs in [0, 1]
/// the result is eps_a-well-supported.
/// Throws ValidationError unless X is an (eps_a^2/8)-approximate equilibrium.
Strategy well_supported_extract(const Matrix& c, const Strategy& x, double eps_a);

struct EquilibriumReport {
  double approx_error;
  double well_supported_eps;  ///< smallest eps for which X is eps-well-supported
  VertexSet carrier;
};

EquilibriumReport equilibrium_report(const Matrix& c, const Strategy& x);

struct MinMaxPayoff {
  Strategy strategy;
  double value;  ///< min over the simplex of (CX)max
};

/// Minimizes the convex function (CX)max over the simplex by linear programming.
/// Returns nullopt if the LP fails numerically.
std::optional<MinMaxPayoff> min_max_payoff(const Matrix& c);

}  // namespace ariadne
