#pragma once

#include "ariadne/game.hpp"

#include <string>

namespace ariadne {

enum class Feasibility { Infeasible, StrictlyLowerFeasible, WeaklyFeasible, StrictlyUpperFeasible };

std::string to_string(Feasibility f);

struct FeasibilityClass {
  Feasibility tag;
  double max_payoff;  ///< maxᵢ (CX)ᵢ in the normalized scale
};

inline constexpr double kThresholdTol = 1e-10;

/// Compares maxᵢ (CX)ᵢ of the normalized game against its thresholds.
/// A maximum exactly at the lower threshold is Infeasible.
FeasibilityClass classify(const NisanGame& game, const Strategy& x);

/// sign * exp(log_magnitude); sign 0 means the value is exactly zero.
struct SignedLog {
  int sign = 0;
  double log_magnitude = 0.0;

  double value() const;
};

/// Orders signed-log values as the reals they represent.
int compare(const SignedLog& a, const SignedLog& b);
/// True if b >= a - tol in the sense of log magnitudes (for equal negative signs this is
/// log|b| <= log|a| + tol).
bool non_decreasing(const SignedLog& a, const SignedLog& b, double tol);

enum class BarrierKind { Primary, Secondary };

std::string to_string(BarrierKind k);

/// (X.CX - C00) / ((F - C_ell) prod (C00 - (CX)_i)),  F = max (CX)_i, normalized scale.
/// Throws DomainError unless X is strictly lower feasible.
SignedLog barrier_primary(const NisanGame& game, const Strategy& x);

/// As barrier_primary with F replaced by X.CX.
/// Throws DomainError unless X.CX > C_ell and max (CX)_i < C00.
SignedLog barrier_secondary(const NisanGame& game, const Strategy& x);

bool in_domain(const NisanGame& game, const Strategy& x, BarrierKind kind);
SignedLog barrier(const NisanGame& game, const Strategy& x, BarrierKind kind);

/// argmax (CX)_i with least-index tie-break, reported 1-based.
int best_response(const Matrix& c, const Strategy& x);

struct OperativeMatrix {
  Matrix entries;  ///< symmetric, in (0, 1/2]
  BarrierKind kind;
  double g1;        ///< barrier times the product of (C00 - (CX)_l); negative inside the band
  Vector w;         ///< per-row homogenization weights; negative inside the band
  int best_response;  ///< 1-based; 0 for the secondary barrier
  double shift;     ///< added to every entry before rescaling
  double scale;     ///< positive rescale applied after the shift
};

/// Quadratic form whose gradient on the simplex is a positive multiple of the barrier
/// polynomial's gradient at X, plus a multiple of the all-ones vector.
OperativeMatrix operative_matrix(const NisanGame& game, const Strategy& x, BarrierKind kind);

/// Hedge step with the operative matrix. Throws InvariantFault if the result leaves the
/// barrier's domain.
Strategy guarded_step(const NisanGame& game, const Strategy& x, double alpha, BarrierKind kind);

/// Same, reusing an operative matrix already built at X.
Strategy guarded_step(const NisanGame& game, const Strategy& x, double alpha,
                      const OperativeMatrix& op);

}  // namespace ariadne
