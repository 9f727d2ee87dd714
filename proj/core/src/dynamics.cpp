#include "ariadne/dynamics.hpp"

#include <cmath>

namespace ariadne {

namespace {

void check_square(const Matrix& c, const Strategy& x) {
  if (c.rows() != c.cols() || c.cols() != x.size())
    throw ValidationError("payoff matrix and strategy dimensions disagree");
}

constexpr double kMaxCondition = 1e12;
constexpr double kSupportFloor = 1e-12;

}  // namespace

Strategy hedge_reweight(const Vector& payoffs, const Strategy& x, double alpha) {
  if (!(alpha > 0.0)) throw ValidationError("learning rate must be positive");
  if (payoffs.size() != x.size()) throw ValidationError("payoff vector dimension mismatch");
  const double top = alpha * payoffs.maxCoeff();
  Vector w = x.mass().array() * (alpha * payoffs.array() - top).exp();
  return Strategy::normalized(w);
}

Strategy hedge_step(const Matrix& c, const Strategy& x, double alpha) {
  check_square(c, x);
  return hedge_reweight(c * x.mass(), x, alpha);
}

Strategy replicator_step(const Matrix& c, const Strategy& x) {
  check_square(c, x);
  const Vector p = c * x.mass();
  const double phi = x.mass().dot(p);
  if (!(phi > 0.0)) throw ValidationError("replicator step needs positive potential");
  Vector w = x.mass().array() * p.array() / phi;
  return Strategy::normalized(w);
}

Strategy finite_k_step(const Matrix& c, const Strategy& x, double alpha, long k) {
  check_square(c, x);
  if (!(alpha > 0.0)) throw ValidationError("learning rate must be positive");
  if (k < 1) throw ValidationError("finite-k map needs k >= 1");
  const Vector p = c * x.mass();
  if (2.0 * p.maxCoeff() > 1.0 + 1e-12)
    throw ValidationError("finite-k map needs 2 (CX)_i <= 1");
  if (p.minCoeff() < 0.0) throw ValidationError("finite-k map needs nonnegative payoffs");
  const double kd = static_cast<double>(k);
  Vector logm = p.unaryExpr([&](double v) { return kd * std::log1p(alpha * v / kd); });
  Vector w = x.mass().array() * (logm.array() - logm.maxCoeff()).exp();
  return Strategy::normalized(w);
}

FixedPointReport detect_fixed_point(const Matrix& c, const Strategy& x, double tol) {
  check_square(c, x);
  FixedPointReport r;
  r.carrier = x.carrier();
  const Vector p = c * x.mass();
  double lo = INFINITY, hi = -INFINITY;
  for (int v : r.carrier) {
    lo = std::min(lo, p(v - 1));
    hi = std::max(hi, p(v - 1));
  }
  r.payoff_spread = hi - lo;
  r.is_fixed = x.is_pure() || r.payoff_spread <= tol;
  return r;
}

FixedPointEnumeration enumerate_replicator_fixed_points(const Matrix& c, int n_cap) {
  const Index n = c.rows();
  if (c.cols() != n) throw ValidationError("payoff matrix must be square");
  if (n > n_cap)
    throw ValidationError("fixed-point enumeration capped at n=" + std::to_string(n_cap));
  FixedPointEnumeration out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> support;
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1) support.push_back(static_cast<int>(i));
    const Index s = static_cast<Index>(support.size());
    // [C_SS  -1][x]   [0]
    // [1^T    0][c] = [1]
    Matrix a = Matrix::Zero(s + 1, s + 1);
    Vector rhs = Vector::Zero(s + 1);
    for (Index r = 0; r < s; ++r) {
      for (Index q = 0; q < s; ++q) a(r, q) = c(support[r], support[q]);
      a(r, s) = -1.0;
      a(s, r) = 1.0;
    }
    rhs(s) = 1.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0 || sv(0) / smin > kMaxCondition) {
      std::vector<int> members;
      for (int i : support) members.push_back(i + 1);
      out.degenerate.emplace_back(std::move(members));
      continue;
    }
    const Vector sol = a.partialPivLu().solve(rhs);
    if (sol.head(s).minCoeff() <= kSupportFloor) continue;
    Vector x = Vector::Zero(n);
    for (Index r = 0; r < s; ++r) x(support[r]) = sol(r);
    out.points.push_back(Strategy::normalized(x));
  }
  return out;
}

}  // namespace ariadne
