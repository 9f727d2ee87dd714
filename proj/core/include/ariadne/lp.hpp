#pragma once

#include "ariadne/types.hpp"

namespace ariadne::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Problem {
  Vector cost;   ///< minimize cost . x
  Matrix a_eq;   ///< a_eq x = b_eq
  Vector b_eq;
  Matrix a_ub;   ///< a_ub x <= b_ub
  Vector b_ub;
};

struct Result {
  Status status = Status::IterationLimit;
  Vector x;
  double objective = 0.0;
  long pivots = 0;
};

/// Dense two-phase simplex over x >= 0 with Bland's pivoting rule.
/// Either constraint block may be empty (zero rows) but must have cost.size() columns.
Result solve(const Problem& p, double tol = 1e-9, long max_pivots = 100000);

}  // namespace ariadne::lp
