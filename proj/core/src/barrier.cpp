#include "ariadne/barrier.hpp"

#include "ariadne/dynamics.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <vector>

namespace ariadne {

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Infeasible: return "Infeasible";
    case Feasibility::StrictlyLowerFeasible: return "StrictlyLowerFeasible";
    case Feasibility::WeaklyFeasible: return "WeaklyFeasible";
    case Feasibility::StrictlyUpperFeasible: return "StrictlyUpperFeasible";
  }
  return "?";
}

std::string to_string(BarrierKind k) { return k == BarrierKind::Primary ? "primary" : "secondary"; }

FeasibilityClass classify(const NisanGame& game, const Strategy& x) {
  const double f = (game.c * x.mass()).maxCoeff();
  const auto& t = game.normalized;
  Feasibility tag;
  if (std::abs(f - t.c00) <= kThresholdTol)
    tag = Feasibility::WeaklyFeasible;
  else if (f > t.c00)
    tag = Feasibility::StrictlyUpperFeasible;
  else if (f > t.c_ell + kThresholdTol)
    tag = Feasibility::StrictlyLowerFeasible;
  else
    tag = Feasibility::Infeasible;
  return {tag, f};
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_magnitude); }

int compare(const SignedLog& a, const SignedLog& b) {
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  if (a.sign == 0 || a.log_magnitude == b.log_magnitude) return 0;
  const bool a_bigger = a.log_magnitude > b.log_magnitude;
  return (a.sign > 0) == a_bigger ? 1 : -1;
}

bool non_decreasing(const SignedLog& a, const SignedLog& b, double tol) {
  if (a.sign != b.sign) return b.sign > a.sign;
  if (a.sign == 0) return true;
  return a.sign < 0 ? b.log_magnitude <= a.log_magnitude + tol
                    : b.log_magnitude >= a.log_magnitude - tol;
}

namespace {

SignedLog barrier_from(double numerator, double first_factor, const Vector& payoffs, double c00) {
  double log_den = std::log(first_factor);
  for (Index i = 0; i < payoffs.size(); ++i) log_den += std::log(c00 - payoffs(i));
  if (numerator == 0.0) return {0, 0.0};
  return {numerator < 0.0 ? -1 : 1, std::log(std::abs(numerator)) - log_den};
}

}  // namespace

SignedLog barrier_primary(const NisanGame& game, const Strategy& x) {
  if (classify(game, x).tag != Feasibility::StrictlyLowerFeasible)
    throw DomainError("primary barrier outside the strict lower band");
  const Vector p = game.c * x.mass();
  const auto& t = game.normalized;
  return barrier_from(x.mass().dot(p) - t.c00, p.maxCoeff() - t.c_ell, p, t.c00);
}

SignedLog barrier_secondary(const NisanGame& game, const Strategy& x) {
  if (!in_domain(game, x, BarrierKind::Secondary))
    throw DomainError("secondary barrier needs X.CX above the lower threshold and F below C00");
  const Vector p = game.c * x.mass();
  const auto& t = game.normalized;
  const double phi = x.mass().dot(p);
  return barrier_from(phi - t.c00, phi - t.c_ell, p, t.c00);
}

bool in_domain(const NisanGame& game, const Strategy& x, BarrierKind kind) {
  if (kind == BarrierKind::Primary)
    return classify(game, x).tag == Feasibility::StrictlyLowerFeasible;
  const Vector p = game.c * x.mass();
  const auto& t = game.normalized;
  return x.mass().dot(p) > t.c_ell && p.maxCoeff() < t.c00 - kThresholdTol;
}

SignedLog barrier(const NisanGame& game, const Strategy& x, BarrierKind kind) {
  return kind == BarrierKind::Primary ? barrier_primary(game, x) : barrier_secondary(game, x);
}

int best_response(const Matrix& c, const Strategy& x) {
  if (c.cols() != x.size()) throw ValidationError("best_response: dimension mismatch");
  const Vector p = c * x.mass();
  Index j = 0;
  for (Index i = 1; i < p.size(); ++i)
    if (p(i) > p(j)) j = i;
  return static_cast<int>(j) + 1;
}

OperativeMatrix operative_matrix(const NisanGame& game, const Strategy& x, BarrierKind kind) {
  if (!in_domain(game, x, kind))
    throw DomainError(to_string(kind) + " operative matrix outside the barrier domain");
  const Matrix& c = game.c;
  const Index n = c.rows();
  const Vector p = c * x.mass();
  const auto& t = game.normalized;
  const double phi = x.mass().dot(p);
  const Vector ones = Vector::Ones(n);

  // With G the barrier, g1 = G prod_l (C00 - p_l) and w_m = G * first_factor * prod_{l != m};
  // both reduce to ratios, so the products never need to be formed.
  OperativeMatrix op{Matrix(), kind, 0.0, Vector(n), 0, 0.0, 1.0};
  for (Index m = 0; m < n; ++m) op.w(m) = (phi - t.c00) / (t.c00 - p(m));
  Vector b = c * op.w;
  Matrix base;
  if (kind == BarrierKind::Primary) {
    op.best_response = best_response(c, x);
    op.g1 = (phi - t.c00) / (p.maxCoeff() - t.c_ell);
    b -= op.g1 * c.col(op.best_response - 1);
    base = c;
  } else {
    op.g1 = (phi - t.c00) / (phi - t.c_ell);
    base = (1.0 - op.g1) * c;
  }
  Matrix m = base + 0.5 * (ones * b.transpose() + b * ones.transpose());
  m = 0.5 * (m + m.transpose());
  op.shift = std::abs(m.minCoeff()) + 0.25;
  m.array() += op.shift;
  op.scale = 0.5 / m.maxCoeff();
  op.entries = m * op.scale;
  return op;
}

Strategy guarded_step(const NisanGame& game, const Strategy& x, double alpha, BarrierKind kind) {
  return guarded_step(game, x, alpha, operative_matrix(game, x, kind));
}

Strategy guarded_step(const NisanGame& game, const Strategy& x, double alpha,
                      const OperativeMatrix& op) {
  Strategy next = hedge_step(op.entries, x, alpha);
  if (!in_domain(game, next, op.kind)) {
    const Vector p = game.c * next.mass();
    nlohmann::json dump = {
        {"fault", "guarded step left the barrier domain"},
        {"barrier", to_string(op.kind)},
        {"k", game.k},
        {"alpha", alpha},
        {"x", std::vector<double>(x.mass().data(), x.mass().data() + x.size())},
        {"next", std::vector<double>(next.mass().data(), next.mass().data() + next.size())},
        {"next_max_payoff", p.maxCoeff()},
        {"next_potential", next.mass().dot(p)},
        {"c00", game.normalized.c00},
        {"c_ell", game.normalized.c_ell},
        {"g1", op.g1},
        {"best_response", op.best_response},
    };
    throw InvariantFault("guarded step left the " + to_string(op.kind) + " barrier domain",
                         dump.dump());
  }
  return next;
}

}  // namespace ariadne
