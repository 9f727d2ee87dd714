#include "ariadne/multipliers.hpp"

#include "ariadne/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ariadne {

MultiplierSolve solve_multiplier(const Matrix& c, const Vector& target,
                                 const std::optional<Strategy>& warm_start, int max_steps) {
  const Index n = c.cols();
  if (target.size() != c.rows()) throw ValidationError("multiplier target dimension mismatch");
  if (warm_start && warm_start->size() != n)
    throw ValidationError("multiplier warm start dimension mismatch");
  const Matrix gram = c.transpose() * c;
  const Vector ct = c.transpose() * target;
  const double lipschitz =
      std::max(Eigen::SelfAdjointEigenSolver<Matrix>(gram, Eigen::EigenvaluesOnly)
                   .eigenvalues()
                   .maxCoeff(),
               1e-300);
  const double step = 1.0 / lipschitz;

  // The least-squares minimizer on the affine hull of the simplex is optimal whenever it is
  // nonnegative; try it before iterating.
  Matrix kkt = Matrix::Zero(n + 1, n + 1);
  kkt.topLeftCorner(n, n) = gram;
  kkt.block(0, n, n, 1).setOnes();
  kkt.block(n, 0, 1, n).setOnes();
  Vector rhs(n + 1);
  rhs << ct, 1.0;
  const Vector direct = kkt.completeOrthogonalDecomposition().solve(rhs).head(n);
  if (direct.allFinite() && direct.minCoeff() >= -1e-14 && direct.sum() > 0.0) {
    Strategy s = Strategy::normalized(direct.cwiseMax(0.0));
    return {s, (c * s.mass() - target).norm(), 0};
  }

  Vector y = warm_start ? warm_start->mass() : Vector::Constant(n, 1.0 / n);
  Vector z = y;
  double t = 1.0;
  auto objective = [&](const Vector& v) { return 0.5 * (c * v - target).squaredNorm(); };
  double f_prev = objective(y);
  int steps = 0;
  for (; steps < max_steps; ++steps) {
    const Vector grad_y = gram * y - ct;
    const Vector mapped = project_to_simplex(y - step * grad_y);
    if ((y - mapped).norm() * lipschitz <= 1e-10) break;
    const Vector grad_z = gram * z - ct;
    const Vector next = project_to_simplex(z - step * grad_z);
    const double f_next = objective(next);
    if (f_next > f_prev) {
      // Momentum overshot: restart from y with a plain projected-gradient step.
      z = y;
      t = 1.0;
      y = mapped;
      f_prev = objective(y);
      continue;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    z = next + ((t - 1.0) / t_next) * (next - y);
    y = next;
    t = t_next;
    f_prev = f_next;
  }
  Strategy s = Strategy::normalized(y);
  return {s, (c * s.mass() - target).norm(), steps};
}

void Trace::push(const MultiplierSolve& y, double alpha, const Strategy& next) {
  multipliers.push_back(y.strategy);
  residuals.push_back(y.residual);
  rates.push_back(alpha);
  a_k.push_back((a_k.empty() ? 0.0 : a_k.back()) + alpha);
  iterates.push_back(next);
}

bool Trace::consistent() const {
  if (iterates.size() != multipliers.size() + 1 || rates.size() != multipliers.size() ||
      residuals.size() != multipliers.size() || a_k.size() != rates.size())
    return false;
  double sum = 0.0;
  for (std::size_t k = 0; k < rates.size(); ++k) {
    sum += rates[k];
    if (std::abs(a_k[k] - sum) > 1e-12 * std::max(1.0, sum)) return false;
  }
  return true;
}

bool Trace::all_exact(std::size_t upto) const {
  for (std::size_t k = 0; k <= upto && k < residuals.size(); ++k)
    if (residuals[k] > kExactResidual) return false;
  return true;
}

Trace multiplier_driven_trace(const Matrix& c, const Strategy& x0, double alpha, int steps) {
  Trace trace;
  trace.game_matrix = c;
  trace.iterates.push_back(x0);
  std::optional<Strategy> warm;
  for (int k = 0; k < steps; ++k) {
    const Strategy& x = trace.iterates.back();
    MultiplierSolve y = solve_multiplier(c, c * x.mass(), warm);
    warm = y.strategy;
    Strategy next = hedge_reweight(c * y.strategy.mass(), x, alpha);
    trace.push(y, alpha, next);
  }
  return trace;
}

namespace {

void check_upto(const Trace& trace, std::size_t upto) {
  if (upto >= trace.steps()) throw RangeError("trace index beyond recorded steps");
}

void check_interior(const Trace& trace) {
  if (!(trace.iterates.front().min_mass() > 0.0))
    throw DomainError("trace needs an interior starting point");
}

double log_ratio(const Trace& trace, std::size_t upto, Index p) {
  return std::log(trace.iterates[upto + 1](p) / trace.iterates.front()(p));
}

}  // namespace

Strategy weighted_average(const Trace& trace, std::size_t upto) {
  check_upto(trace, upto);
  Vector sum = Vector::Zero(trace.multipliers.front().size());
  for (std::size_t k = 0; k <= upto; ++k) sum += trace.rates[k] * trace.multipliers[k].mass();
  return Strategy::normalized(sum / trace.a_k[upto]);
}

IdentityValues payoff_difference_identity(const Trace& trace, Index i, Index j,
                                          std::size_t upto) {
  check_upto(trace, upto);
  check_interior(trace);
  const Index n = trace.game_matrix.rows();
  if (i < 0 || j < 0 || i >= n || j >= n) throw RangeError("strategy index out of range");
  if (i == j) return {0.0, 0.0};
  const Vector payoff = trace.game_matrix * weighted_average(trace, upto).mass();
  const double lhs = payoff(i) - payoff(j);
  const double rhs = (log_ratio(trace, upto, i) - log_ratio(trace, upto, j)) / trace.a_k[upto];
  return {lhs, rhs};
}

bool ranking_consistency(const Trace& trace, std::size_t upto, double tol) {
  check_upto(trace, upto);
  check_interior(trace);
  const Index n = trace.game_matrix.rows();
  const Vector u = trace.game_matrix * weighted_average(trace, upto).mass();
  Vector v(n);
  for (Index p = 0; p < n; ++p) v(p) = log_ratio(trace, upto, p) / trace.a_k[upto];
  auto order = [tol](double a, double b) { return a > b + tol ? 1 : (b > a + tol ? -1 : 0); };
  for (Index p = 0; p < n; ++p)
    for (Index q = p + 1; q < n; ++q)
      if (order(u(p), u(q)) != order(v(p), v(q))) return false;
  return true;
}

BoundCheck error_bound_check(const Trace& trace, std::size_t upto, double c) {
  check_upto(trace, upto);
  check_interior(trace);
  const Matrix& m = trace.game_matrix;
  if (!(m.minCoeff() > 0.0) || m.maxCoeff() / m.minCoeff() > c * (1.0 + 1e-12))
    throw ValidationError("payoff matrix must be positive with max/min ratio at most c");
  const Index n = m.rows();
  if (n < 2) throw ValidationError("error bound needs at least two strategies");
  const Strategy ybar = weighted_average(trace, upto);
  const Vector payoff = m * ybar.mass();
  std::vector<Index> idx(n);
  std::iota(idx.begin(), idx.end(), Index{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Index a, Index b) { return payoff(a) > payoff(b); });
  const Index p = idx[1];
  const double lhs = payoff(p) - ybar.mass().dot(payoff);
  const double rhs = log_ratio(trace, upto, p) * 2.0 * c / trace.a_k[upto];
  return {lhs, rhs, lhs <= rhs + 1e-9, p};
}

}  // namespace ariadne
