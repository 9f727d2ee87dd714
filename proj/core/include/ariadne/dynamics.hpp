#pragma once

#include "ariadne/strategy.hpp"

#include <vector>

namespace ariadne {

/// Exponential reweighting X_i exp(alpha p_i), normalized. Throws ValidationError if alpha <= 0.
Strategy hedge_reweight(const Vector& payoffs, const Strategy& x, double alpha);

/// Hedge map driven by the payoff vector C X.
Strategy hedge_step(const Matrix& c, const Strategy& x, double alpha);

/// Discrete-time replicator X_i (CX)_i / (X . CX). Requires X . CX > 0.
Strategy replicator_step(const Matrix& c, const Strategy& x);

/// Multiplier (1 + alpha (CX)_i / k)^k, normalized. Requires 2 (CX)_i <= 1.
Strategy finite_k_step(const Matrix& c, const Strategy& x, double alpha, long k);

inline constexpr double kFixedPointTol = 1e-9;

struct FixedPointReport {
  bool is_fixed = false;
  VertexSet carrier;
  double payoff_spread = 0.0;  ///< max - min of (CX)_i over the carrier
};

FixedPointReport detect_fixed_point(const Matrix& c, const Strategy& x,
                                    double tol = kFixedPointTol);

struct FixedPointEnumeration {
  std::vector<Strategy> points;
  /// Supports whose equalizing system was singular or too ill-conditioned to trust.
  std::vector<VertexSet> degenerate;
};

inline constexpr int kEnumerationCap = 8;

/// Every isolated replicator fixed point, found by solving the equalizing system on each
/// nonempty support. Throws ValidationError when C has more than n_cap rows.
FixedPointEnumeration enumerate_replicator_fixed_points(const Matrix& c,
                                                        int n_cap = kEnumerationCap);

}  // namespace ariadne
