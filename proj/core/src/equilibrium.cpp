#include "ariadne/equilibrium.hpp"

#include "ariadne/lp.hpp"

#include <algorithm>
#include <cmath>

namespace ariadne {

namespace {

void check(const Matrix& c, const Strategy& x) {
  if (c.rows() != c.cols() || c.cols() != x.size())
    throw ValidationError("payoff matrix and strategy dimensions disagree");
}

// LP solutions can carry rounding-level negatives or mass drift; clean before validating.
std::optional<Strategy> clean(const Vector& raw) {
  Vector x = raw.cwiseMax(0.0);
  const double s = x.sum();
  if (!(s > 0.0) || std::abs(s - 1.0) > 1e-6) return std::nullopt;
  return Strategy(x / s);
}

}  // namespace

EqualizerResult solve_equalizer(const Matrix& c) {
  const Index n = c.rows();
  if (n == 0 || c.cols() != n || !c.allFinite())
    throw ValidationError("equalizer needs a finite square matrix");
  // Variables: x (n), c+ , c-.
  lp::Problem p;
  p.cost = Vector::Zero(n + 2);
  p.a_eq = Matrix::Zero(n + 1, n + 2);
  p.a_eq.topLeftCorner(n, n) = c;
  p.a_eq.block(0, n, n, 1).setConstant(-1.0);
  p.a_eq.block(0, n + 1, n, 1).setConstant(1.0);
  p.a_eq.block(n, 0, 1, n).setConstant(1.0);
  p.b_eq = Vector::Zero(n + 1);
  p.b_eq(n) = 1.0;
  p.a_ub = Matrix::Zero(0, n + 2);
  p.b_ub = Vector::Zero(0);
  const lp::Result r = lp::solve(p);
  if (r.status == lp::Status::Infeasible) return {EqualizerStatus::Infeasible, std::nullopt};
  if (r.status != lp::Status::Optimal) return {EqualizerStatus::SolverFailure, std::nullopt};
  auto x = clean(r.x.head(n));
  if (!x || !is_equalizer(c, *x)) return {EqualizerStatus::SolverFailure, std::nullopt};
  const double value = (c * x->mass()).mean();
  return {EqualizerStatus::Found, EqualizerSolution{*x, value}};
}

bool is_equalizer(const Matrix& c, const Strategy& x, double tol) {
  check(c, x);
  const Vector p = c * x.mass();
  return p.maxCoeff() - p.minCoeff() <= tol;
}

bool equalizer_line_check(const Matrix& c, const EqualizerSolution& x1,
                          const EqualizerSolution& x2, const std::vector<double>& lambdas) {
  for (double lambda : lambdas) {
    const Vector z = lambda * x1.strategy.mass() + (1.0 - lambda) * x2.strategy.mass();
    if (z.minCoeff() < -kSimplexTol) continue;
    if (!is_equalizer(c, Strategy(z.cwiseMax(0.0) / z.cwiseMax(0.0).sum()))) return false;
  }
  return true;
}

double gap(const Matrix& c, const Strategy& x) {
  check(c, x);
  const Vector p = c * x.mass();
  return p.maxCoeff() - p.minCoeff();
}

double potential_gap(const Matrix& c, const Strategy& x, double max_potential) {
  check(c, x);
  return max_potential - x.mass().dot(c * x.mass());
}

double min_gap_lower_bound(int k) {
  if (k < 2) throw ValidationError("gap bound needs k >= 2");
  return 1.0 / (2.0 * (k - 1)) - 1.0 / (2.0 * k);
}

double approx_error(const Matrix& c, const Strategy& x) {
  check(c, x);
  const Vector p = c * x.mass();
  return p.maxCoeff() - x.mass().dot(p);
}

double carrier_spread(const Matrix& c, const Strategy& x) {
  check(c, x);
  const Vector p = c * x.mass();
  double lo = INFINITY, hi = -INFINITY;
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) <= 0.0) continue;
    lo = std::min(lo, p(i));
    hi = std::max(hi, p(i));
  }
  return hi - lo;
}

bool is_well_supported(const Matrix& c, const Strategy& x, double eps) {
  return approx_error(c, x) <= eps + kEquilibriumSlack &&
         carrier_spread(c, x) <= eps + kEquilibriumSlack;
}

Strategy well_supported_extract(const Matrix& c, const Strategy& x, double eps_a) {
  if (!(eps_a > 0.0)) throw ValidationError("eps_a must be positive");
  if (approx_error(c, x) > eps_a * eps_a / 8.0 + kEquilibriumSlack)
    throw ValidationError("well-supported extraction needs an (eps_a^2/8)-approximate equilibrium");
  const Vector p = c * x.mass();
  // Trimming at eps_a/2 removes at most eps_a/4 of the mass, so for entries in [0, 1] the
  // survivors' payoffs move by at most eps_a/4 and the result is eps_a-well-supported.
  const double cut = p.maxCoeff() - 0.5 * eps_a;
  Vector y = x.mass();
  for (Index i = 0; i < y.size(); ++i)
    if (p(i) < cut) y(i) = 0.0;
  if (!(y.sum() > 0.0)) throw ValidationError("extraction trimmed the whole carrier");
  return Strategy::normalized(y);
}

EquilibriumReport equilibrium_report(const Matrix& c, const Strategy& x) {
  const double a = approx_error(c, x);
  return {a, std::max(a, carrier_spread(c, x)), x.carrier()};
}

std::optional<MinMaxPayoff> min_max_payoff(const Matrix& c) {
  const Index n = c.rows();
  if (n == 0 || c.cols() != n) throw ValidationError("min_max_payoff needs a square matrix");
  // Variables: x (n), t+, t-.  minimize t  s.t.  CX - t1 <= 0, 1^T X = 1.
  lp::Problem p;
  p.cost = Vector::Zero(n + 2);
  p.cost(n) = 1.0;
  p.cost(n + 1) = -1.0;
  p.a_eq = Matrix::Zero(1, n + 2);
  p.a_eq.block(0, 0, 1, n).setConstant(1.0);
  p.b_eq = Vector::Ones(1);
  p.a_ub = Matrix::Zero(n, n + 2);
  p.a_ub.topLeftCorner(n, n) = c;
  p.a_ub.col(n).setConstant(-1.0);
  p.a_ub.col(n + 1).setConstant(1.0);
  p.b_ub = Vector::Zero(n);
  const lp::Result r = lp::solve(p);
  if (r.status != lp::Status::Optimal) return std::nullopt;
  auto x = clean(r.x.head(n));
  if (!x) return std::nullopt;
  return MinMaxPayoff{*x, (c * x->mass()).maxCoeff()};
}

}  // namespace ariadne
