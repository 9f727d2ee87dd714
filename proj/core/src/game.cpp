#include "ariadne/game.hpp"

#include <cmath>

namespace ariadne {

std::pair<Matrix, AffineTransform> normalize_payoffs(const Matrix& raw) {
  if (raw.size() == 0) throw ValidationError("empty payoff matrix");
  if (!raw.allFinite() || raw.minCoeff() < 0.0 || raw.maxCoeff() > 1.0)
    throw ValidationError("raw payoffs must lie in [0,1]");
  AffineTransform t;
  Matrix out = raw.unaryExpr([&](double v) { return t.apply(v); });
  return {out, t};
}

NisanGame build_nisan_game(const Graph& g, int k) {
  const int n = g.n();
  if (k < 2 || k > n)
    throw ValidationError("Nisan parameter k=" + std::to_string(k) + " outside 2.." +
                          std::to_string(n));
  const double kd = k;
  const double c00 = 1.0 - 1.0 / (2.0 * kd);
  const double c_ell = 0.5 * ((1.0 - 1.0 / (2.0 * (kd - 1.0))) + c00);
  const double eps_a = 0.5 * (1.0 / (kd - 1.0) - 1.0 / kd);

  Matrix raw_c = g.adjacency_matrix();
  raw_c.diagonal().setConstant(0.5);
  Matrix raw_cplus(n + 1, n + 1);
  raw_cplus.setConstant(c00);
  raw_cplus.bottomRightCorner(n, n) = raw_c;

  auto [cplus, t] = normalize_payoffs(raw_cplus);
  Matrix c = cplus.bottomRightCorner(n, n);
  return NisanGame{g,
                   k,
                   raw_cplus,
                   raw_c,
                   cplus,
                   c,
                   {c00, c_ell},
                   {t.apply(c00), t.apply(c_ell)},
                   eps_a,
                   eps_a * eps_a / 8.0,
                   t};
}

double potential(const Matrix& c, const Strategy& x) {
  if (c.rows() != c.cols() || c.cols() != x.size())
    throw ValidationError("potential: dimension mismatch");
  const double v = x.mass().dot(c * x.mass());
  if (!std::isfinite(v)) throw ValidationError("potential: non-finite value");
  return v;
}

}  // namespace ariadne
