#include "ariadne/solver.hpp"

#include "ariadne/dynamics.hpp"
#include "ariadne/equilibrium.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace ariadne {

void RunConfig::validate() const {
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (!(budget_scale > 0.0)) throw ValidationError("budget_scale must be positive");
  if (checks < 1) throw ValidationError("checks must be at least 1");
  if (oracle_cap < 1) throw ValidationError("oracle_cap must be positive");
}

std::string to_string(KResult r) {
  switch (r) {
    case KResult::FoundClique: return "FoundClique";
    case KResult::BudgetExhausted: return "BudgetExhausted";
    case KResult::BandEmpty: return "BandEmpty";
    case KResult::Fault: return "Fault";
  }
  return "?";
}

int initial_k(const Graph& g) { return std::min(g.n(), g.max_degree() + 1); }

long iteration_budget(double min_x0, double c, double alpha, double eps, double scale) {
  if (!(min_x0 > 0.0) || !(alpha > 0.0) || !(eps > 0.0) || !(scale > 0.0))
    throw ValidationError("iteration budget needs positive inputs");
  const double k = std::ceil(scale * 2.0 * c * std::log(1.0 / min_x0) / (alpha * eps));
  return static_cast<long>(std::max(1.0, k));
}

long iteration_budget(const NisanGame& game, const Strategy& x0, const RunConfig& cfg) {
  return iteration_budget(x0.min_mass(), game.payoff_ratio(), cfg.alpha, game.eps,
                          cfg.budget_scale);
}

namespace {

std::optional<VertexSet> clique_from(const NisanGame& game, const Strategy& x) {
  if (approx_error(game.raw_c, x) > game.eps + kEquilibriumSlack) return std::nullopt;
  const Strategy ws = well_supported_extract(game.raw_c, x, game.eps_a);
  VertexSet q = greedy_clique_within(game.graph, ws.carrier());
  if (static_cast<int>(q.size()) < game.k) return std::nullopt;
  return q;
}

Strategy mix_floor(const Vector& z, double floor) {
  const Index n = z.size();
  return Strategy::normalized((1.0 - n * floor) * z + Vector::Constant(n, floor));
}

std::vector<double> as_vec(const Vector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

std::optional<Strategy> initialize(const NisanGame& game, const RunConfig& cfg) {
  const Matrix& c = game.c;
  const auto& t = game.normalized;
  const double target = 0.5 * (t.c00 + t.c_ell);
  auto low = min_max_payoff(c);
  if (!low || low->value > target) return std::nullopt;
  auto fmax = [&](const Vector& z) { return (c * z).maxCoeff(); };

  // Bisect toward a pure strategy that is strictly upper feasible.
  const Vector& x_low = low->strategy.mass();
  Index pure = -1;
  const int first = best_response(c, low->strategy) - 1;
  if (c.col(first).maxCoeff() > target) pure = first;
  for (Index j = 0; pure < 0 && j < c.cols(); ++j)
    if (c.col(j).maxCoeff() > target) pure = j;
  if (pure < 0) return std::nullopt;
  Vector e = Vector::Zero(c.cols());
  e(pure) = 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (fmax((1.0 - mid) * x_low + mid * e) <= target ? lo : hi) = mid;
  }
  Strategy x0 = mix_floor((1.0 - lo) * x_low + lo * e, cfg.tol.interior_floor);
  if (std::abs(fmax(x0.mass()) - target) > cfg.tol.init_target) return std::nullopt;
  return x0;
}

KOutcome run_for_k(const NisanGame& game, const RunConfig& cfg) {
  cfg.validate();
  KOutcome out;
  out.k = game.k;
  const auto& t = game.normalized;

  auto x0 = initialize(game, cfg);
  if (!x0) {
    // The band is empty. When the minimizer of max (CX)_i lies on the upper threshold it
    // may itself be a maximum-clique equilibrium; accept it only if it yields a clique.
    auto low = min_max_payoff(game.c);
    if (low && std::abs(low->value - t.c00) <= cfg.tol.boundary) {
      if (auto q = clique_from(game, low->strategy)) {
        out.result = KResult::FoundClique;
        out.clique = *q;
        out.boundary_candidate = true;
        out.accepted_from = "boundary";
        return out;
      }
    }
    out.result = KResult::BandEmpty;
    return out;
  }

  const Index n = game.c.rows();
  const long budget = iteration_budget(game, *x0, cfg);
  out.budget = budget;
  const long check_every = std::max(1L, (budget + cfg.checks - 1) / cfg.checks);
  const Matrix centering = Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / n);
  const Matrix centered_c = centering * game.c;

  Strategy x = *x0;
  BarrierKind kind = BarrierKind::Primary;
  SignedLog g_prev = barrier_primary(game, x);
  Vector weighted_sum = Vector::Zero(n);
  double a_k = 0.0;
  std::optional<Strategy> warm;
  if (cfg.record_trace) {
    out.trace.emplace();
    out.trace->game_matrix = game.c;
    out.trace->iterates.push_back(x);
    out.trace->barrier_values.push_back(g_prev);
    out.trace->feasibility.push_back(classify(game, x));
  }

  auto fault = [&](const std::string& what, const std::string& dump) {
    out.result = KResult::Fault;
    out.fault = what;
    out.fault_dump = dump;
    out.final_barrier = g_prev;
    return out;
  };

  auto check = [&]() -> bool {
    std::vector<std::pair<const char*, Strategy>> candidates;
    if (a_k > 0.0) candidates.emplace_back("average", Strategy::normalized(weighted_sum / a_k));
    candidates.emplace_back("iterate", x);
    for (auto& [name, cand] : candidates) {
      if (auto q = clique_from(game, cand)) {
        out.result = KResult::FoundClique;
        out.clique = *q;
        out.accepted_from = name;
        return true;
      }
    }
    return false;
  };

  for (long it = 0; it < budget; ++it) {
    if (kind == BarrierKind::Primary && potential(game.c, x) > t.c_ell) {
      if (!in_domain(game, x, BarrierKind::Secondary))
        return fault("secondary barrier domain empty at switch", "{}");
      kind = BarrierKind::Secondary;
      out.switched_to_secondary = true;
      out.switch_iteration = it;
      g_prev = barrier_secondary(game, x);
    }
    const OperativeMatrix op = operative_matrix(game, x, kind);
    const Vector drive = op.entries * x.mass();

    std::optional<MultiplierSolve> y;
    if (cfg.solve_multipliers) {
      y = solve_multiplier(centered_c, centering * drive, warm);
      warm = y->strategy;
      weighted_sum += cfg.alpha * y->strategy.mass();
      a_k += cfg.alpha;
      out.max_residual = std::max(out.max_residual, y->residual);
      out.exact_multipliers += y->exact();
      ++out.multiplier_solves;
    }

    Strategy next = x;
    try {
      next = guarded_step(game, x, cfg.alpha, op);
    } catch (const InvariantFault& f) {
      out.iterations_used = it;
      return fault(f.what(), f.dump());
    }
    const SignedLog g_next = barrier(game, next, kind);
    if (kind == BarrierKind::Primary && !non_decreasing(g_prev, g_next, cfg.tol.barrier_monotone)) {
      nlohmann::json dump = {{"fault", "primary barrier decreased"},
                             {"k", game.k},
                             {"iteration", it},
                             {"alpha", cfg.alpha},
                             {"x", as_vec(x.mass())},
                             {"next", as_vec(next.mass())},
                             {"log_abs_barrier_before", g_prev.log_magnitude},
                             {"log_abs_barrier_after", g_next.log_magnitude}};
      out.iterations_used = it;
      return fault("primary barrier decreased", dump.dump());
    }
    if (out.trace) {
      out.trace->push(y ? *y : MultiplierSolve{x, 0.0, 0}, cfg.alpha, next);
      out.trace->barrier_values.push_back(g_next);
      out.trace->feasibility.push_back(classify(game, next));
      out.trace->provenance.push_back({op.kind, op.g1, op.best_response, op.shift, op.scale});
    }
    const double moved = (next.mass() - x.mass()).cwiseAbs().maxCoeff();
    x = std::move(next);
    g_prev = g_next;
    out.iterations_used = it + 1;

    const bool stalled = moved <= cfg.tol.stall_displacement;
    if ((it + 1) % check_every == 0 || it + 1 == budget || stalled) {
      if (check()) break;
      if (stalled) {
        out.stalled = true;
        break;
      }
    }
  }
  out.final_barrier = g_prev;
  if (out.result != KResult::FoundClique) out.result = KResult::BudgetExhausted;
  return out;
}

Report run(const Graph& g, const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.n = g.n();
  rep.m = g.edge_count();
  rep.connected = g.connected();

  if (g.edge_count() == 0) {
    rep.clique = VertexSet{1};
  } else {
    const int start = std::clamp(cfg.k0.value_or(initial_k(g)), 2, g.n());
    for (int k = start; k >= 2; --k) {
      KOutcome o = run_for_k(build_nisan_game(g, k), cfg);
      rep.total_iterations += o.iterations_used;
      const bool found = o.result == KResult::FoundClique;
      if (found) rep.clique = o.clique;
      rep.outcomes.push_back(std::move(o));
      if (found) break;
    }
    if (rep.clique.empty()) {
      const auto [u, v] = g.edges().front();
      rep.clique = VertexSet{u, v};
      rep.fallback = true;
    }
  }
  if (!is_clique(g, rep.clique)) throw Error("internal error: reported set is not a clique");
  rep.clique_size = static_cast<int>(rep.clique.size());

  if (cfg.use_oracle && g.n() <= cfg.oracle_cap) {
    const CliqueResult oracle = max_clique_bruteforce(g, cfg.oracle_cap);
    rep.oracle_omega = oracle.size;
    rep.oracle_witness = oracle.witness;
    rep.agreement = oracle.size == rep.clique_size;
    for (const auto& o : rep.outcomes)
      if (o.switched_to_secondary && o.k != oracle.size) rep.switch_mismatches.push_back(o.k);
  }
  return rep;
}

}  // namespace ariadne
