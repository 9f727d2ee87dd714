#pragma once

#include "ariadne/strategy.hpp"

#include <vector>

namespace ariadne {

/// 6x6 extended Shapley game, entries 1/2 * {0, 1, 2}.
Matrix shapley_matrix();

/// The non-uniform start (0.1, 0.2, 0.3, 0.2, 0.1, 0.1).
Strategy shapley_start();

struct DivergencePoint {
  long iteration;   ///< K
  double distance;  ///< ||Ybar^K - uniform||_inf
};

/// Hedge self-play X^{K+1} = T(X^K) on C; the running average of the iterates is compared
/// with the uniform strategy every `every` iterations and at the end.
std::vector<DivergencePoint> shapley_divergence(const Matrix& c, const Strategy& x0, double alpha,
                                                long iterations, long every);

}  // namespace ariadne
