#include "ariadne/lp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ariadne::lp {

namespace {

struct Tableau {
  Matrix t;                  // rows 0..m-1 constraints, row m objective; last column rhs
  std::vector<Index> basis;  // basic column of each constraint row
  Index columns;             // number of structural + slack + artificial columns

  void pivot(Index row, Index col) {
    t.row(row) /= t(row, col);
    for (Index r = 0; r < t.rows(); ++r) {
      if (r == row) continue;
      const double f = t(r, col);
      if (f != 0.0) t.row(r) -= f * t.row(row);
    }
    basis[row] = col;
  }

  // Minimizes the objective row over columns < allowed. Returns Optimal, Unbounded or limit.
  Status run(Index allowed, double tol, long& pivots, long max_pivots) {
    const Index m = static_cast<Index>(basis.size());
    const Index rhs = t.cols() - 1;
    while (pivots < max_pivots) {
      Index enter = -1;
      for (Index j = 0; j < allowed; ++j) {
        if (t(m, j) < -tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::Optimal;
      double best = INFINITY;
      for (Index r = 0; r < m; ++r)
        if (t(r, enter) > tol) best = std::min(best, t(r, rhs) / t(r, enter));
      Index leave = -1;
      for (Index r = 0; r < m; ++r) {
        if (t(r, enter) <= tol || t(r, rhs) / t(r, enter) > best + tol) continue;
        if (leave < 0 || basis[r] < basis[leave]) leave = r;
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
      ++pivots;
    }
    return Status::IterationLimit;
  }
};

}  // namespace

Result solve(const Problem& p, double tol, long max_pivots) {
  const Index nv = p.cost.size();
  const Index me = p.a_eq.rows();
  const Index mu = p.a_ub.rows();
  if ((me && p.a_eq.cols() != nv) || (mu && p.a_ub.cols() != nv) || p.b_eq.size() != me ||
      p.b_ub.size() != mu)
    throw ValidationError("lp: inconsistent problem dimensions");
  const Index m = me + mu;
  // columns: structural nv, slacks mu, artificials m, rhs
  const Index art0 = nv + mu;
  const Index cols = art0 + m;
  Tableau tab{Matrix::Zero(m + 1, cols + 1), std::vector<Index>(m), cols};
  for (Index r = 0; r < m; ++r) {
    const bool eq = r < me;
    Eigen::RowVectorXd row = eq ? p.a_eq.row(r) : p.a_ub.row(r - me);
    double b = eq ? p.b_eq(r) : p.b_ub(r - me);
    double slack = eq ? 0.0 : 1.0;
    if (b < 0.0) {
      row = -row;
      b = -b;
      slack = -slack;
    }
    tab.t.block(r, 0, 1, nv) = row;
    if (!eq) tab.t(r, nv + (r - me)) = slack;
    tab.t(r, art0 + r) = 1.0;
    tab.t(r, cols) = b;
    tab.basis[r] = art0 + r;
  }
  // Phase 1 objective: sum of artificials, expressed in nonbasic terms.
  for (Index r = 0; r < m; ++r) tab.t.row(m) -= tab.t.row(r);
  for (Index r = 0; r < m; ++r) tab.t(m, art0 + r) = 0.0;

  Result res;
  Status s = tab.run(cols, tol, res.pivots, max_pivots);
  if (s == Status::IterationLimit) {
    res.status = s;
    return res;
  }
  const double scale = 1.0 + (m ? tab.t.col(cols).head(m).cwiseAbs().maxCoeff() : 0.0);
  if (-tab.t(m, cols) > tol * scale) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive zero-level artificials out of the basis where possible.
  for (Index r = 0; r < m; ++r) {
    if (tab.basis[r] < art0) continue;
    for (Index j = 0; j < art0; ++j) {
      if (std::abs(tab.t(r, j)) > tol) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  // Phase 2 objective.
  tab.t.row(m).setZero();
  tab.t.block(m, 0, 1, nv) = p.cost.transpose();
  for (Index r = 0; r < m; ++r) {
    const Index b = tab.basis[r];
    if (b < nv && p.cost(b) != 0.0) tab.t.row(m) -= p.cost(b) * tab.t.row(r);
  }
  s = tab.run(art0, tol, res.pivots, max_pivots);
  res.status = s;
  if (s != Status::Optimal) return res;
  res.x = Vector::Zero(nv);
  for (Index r = 0; r < m; ++r)
    if (tab.basis[r] < nv) res.x(tab.basis[r]) = std::max(0.0, tab.t(r, cols));
  res.objective = p.cost.dot(res.x);
  return res;
}

}  // namespace ariadne::lp
