#pragma once

#include "ariadne/graph.hpp"
#include "ariadne/strategy.hpp"

namespace ariadne {

/// v -> (v + shift) * scale. Differences of payoffs scale by `scale` only.
struct AffineTransform {
  double shift = 1.0;
  double scale = 0.25;

  double apply(double v) const { return (v + shift) * scale; }
  double invert(double v) const { return v / scale - shift; }
  double apply_difference(double d) const { return d * scale; }
};

/// Maps entries from [0,1] to [1/4,1/2]. Throws ValidationError outside [0,1].
std::pair<Matrix, AffineTransform> normalize_payoffs(const Matrix& raw);

struct Thresholds {
  double c00;    ///< payoff of the extra strategy, 1 - 1/(2k) in raw scale
  double c_ell;  ///< lower band threshold
};

/// Nisan-Bomze game for a graph and clique-size guess k.
/// Strategy 0 of `cplus` is the extra strategy; `c` is the vertex block (rows 1..n of cplus).
struct NisanGame {
  Graph graph;
  int k;
  Matrix raw_cplus;
  Matrix raw_c;
  Matrix cplus;
  Matrix c;
  Thresholds raw;
  Thresholds normalized;
  double eps_a;  ///< raw scale
  double eps;    ///< raw scale, eps_a^2 / 8
  AffineTransform transform;

  int n() const { return graph.n(); }
  /// max/min entry ratio of the normalized vertex block.
  double payoff_ratio() const { return c.maxCoeff() / c.minCoeff(); }
};

/// Throws ValidationError unless 2 <= k <= g.n().
NisanGame build_nisan_game(const Graph& g, int k);

/// X . C X. Throws ValidationError on dimension mismatch.
double potential(const Matrix& c, const Strategy& x);

/// Bomze value 1 - 1/(2m) of an m-clique in the raw scale.
inline double bomze_value(int m) { return 1.0 - 1.0 / (2.0 * m); }

}  // namespace ariadne
