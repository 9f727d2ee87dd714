#include "ariadne/props.hpp"

#include "ariadne/dynamics.hpp"
#include "ariadne/equilibrium.hpp"
#include "ariadne/generators.hpp"
#include "ariadne/serialize.hpp"

#include <algorithm>
#include <cmath>

namespace ariadne::props {

using nlohmann::json;
using ariadne::to_json;

namespace {

Matrix random_normalized(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.25, 0.5);
  Matrix c(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) c(i, j) = c(j, i) = u(rng);
  return c;
}

// Random simplex point; sometimes drops coordinates to exercise smaller carriers.
Strategy random_strategy(Index n, std::mt19937_64& rng, bool interior) {
  std::exponential_distribution<double> e(1.0);
  std::bernoulli_distribution drop(0.2);
  Vector w(n);
  for (Index i = 0; i < n; ++i) w(i) = (!interior && drop(rng)) ? 0.0 : e(rng);
  if (w.sum() <= 0.0) w(0) = 1.0;
  return Strategy::normalized(w);
}

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void fail(SuiteResult& r, json example) {
  if (r.failures++ == 0) r.counterexample = std::move(example);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"growth", "identity", "ranking", "bound",
                                              "band",   "fixedpoint", "gap"};
  return names;
}

std::vector<std::pair<std::string, Graph>> curated_graphs() {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 2; n <= 8; ++n) out.emplace_back("K" + std::to_string(n), gen::complete(n));
  for (int n = 3; n <= 6; ++n) out.emplace_back("P" + std::to_string(n), gen::path(n));
  for (int n = 4; n <= 7; ++n) out.emplace_back("C" + std::to_string(n), gen::cycle(n));
  out.emplace_back("Petersen", gen::petersen());
  out.emplace_back("W5", gen::wheel(5));
  out.emplace_back("W6", gen::wheel(6));
  out.emplace_back("K2,2,2", gen::complete_multipartite({2, 2, 2}));
  out.emplace_back("K3,3", gen::complete_multipartite({3, 3}));
  out.emplace_back("K1,2,3", gen::complete_multipartite({1, 2, 3}));
  out.emplace_back("K2,2,2,2", gen::complete_multipartite({2, 2, 2, 2}));
  return out;
}

SuiteResult growth(long trials, std::mt19937_64& rng, bool inject_bug) {
  SuiteResult r = named("growth");
  std::uniform_int_distribution<int> dim(2, 8);
  std::uniform_real_distribution<double> rate(0.0, 4.0);
  const long total = 10 * trials;
  const long ks[] = {1, 2, 8, 64};
  double worst_drop = 0.0;
  for (long t = 0; t < total; ++t) {
    const Index n = dim(rng);
    const Matrix c = random_normalized(n, rng);
    const Strategy x = random_strategy(n, rng, false);
    double alpha = rate(rng);
    if (alpha == 0.0) alpha = 4.0;
    const double before = potential(c, x);
    auto check = [&](const char* map, long k, const Strategy& y) {
      const double after = potential(c, y);
      const double moved = (y.mass() - x.mass()).cwiseAbs().maxCoeff();
      worst_drop = std::max(worst_drop, before - after);
      ++r.trials;
      if (after < before - 1e-12 || (moved > 1e-9 && !(after > before))) {
        fail(r, {{"map", map},
                 {"k", k},
                 {"alpha", alpha},
                 {"matrix", matrix_to_json(c, "normalized")},
                 {"x", to_json(x.mass())},
                 {"potential_before", before},
                 {"potential_after", after},
                 {"displacement", moved}});
      }
    };
    check("hedge", 0, inject_bug ? hedge_reweight(-(c * x.mass()), x, alpha) : hedge_step(c, x, alpha));
    for (long k : ks) check("finite_k", k, finite_k_step(c, x, alpha, k));
  }
  r.stats["worst_potential_drop"] = worst_drop;
  return r;
}

TraceSuites trace_suites(long traces, int steps, std::mt19937_64& rng) {
  TraceSuites s{named("identity"), named("ranking"), named("bound")};
  std::uniform_real_distribution<double> rate(0.05, 1.0);
  const Matrix k3 = build_nisan_game(gen::complete(3), 3).c;
  double worst_identity = 0.0;
  long inexact = 0;
  for (long t = 0; t < traces; ++t) {
    const Matrix c = (t % 2 == 0) ? random_normalized(2, rng) : k3;
    const Strategy x0 = random_strategy(c.rows(), rng, true);
    const double alpha = rate(rng);
    const Trace trace = multiplier_driven_trace(c, x0, alpha, steps);
    const std::size_t last = trace.steps() - 1;
    if (!trace.all_exact(last)) {
      ++inexact;
      ++s.identity.skipped;
      ++s.ranking.skipped;
      ++s.bound.skipped;
      continue;
    }
    auto describe = [&] {
      return json{{"matrix", matrix_to_json(c, "normalized")},
                  {"x0", to_json(x0.mass())},
                  {"alpha", alpha},
                  {"steps", steps}};
    };
    for (std::size_t upto : {std::size_t{0}, last / 2, last}) {
      double dev = 0.0;
      for (Index i = 0; i < c.rows(); ++i)
        for (Index j = 0; j < c.rows(); ++j) {
          const auto v = payoff_difference_identity(trace, i, j, upto);
          dev = std::max(dev, std::abs(v.lhs - v.rhs));
        }
      worst_identity = std::max(worst_identity, dev);
      ++s.identity.trials;
      if (dev > 1e-8) {
        json ex = describe();
        ex["K"] = upto;
        ex["deviation"] = dev;
        fail(s.identity, ex);
      }
      ++s.ranking.trials;
      if (!ranking_consistency(trace, upto)) {
        json ex = describe();
        ex["K"] = upto;
        fail(s.ranking, ex);
      }
      ++s.bound.trials;
      const BoundCheck b = error_bound_check(trace, upto, 2.0);
      if (!b.holds) {
        json ex = describe();
        ex["K"] = upto;
        ex["lhs"] = b.lhs;
        ex["rhs"] = b.rhs;
        ex["strategy"] = b.strategy;
        fail(s.bound, ex);
      }
    }
  }
  s.identity.stats["worst_deviation"] = worst_identity;
  s.identity.stats["inexact_traces"] = inexact;
  return s;
}

SuiteResult band(const std::vector<Graph>& graphs, long steps, double alpha) {
  SuiteResult r = named("band");
  RunConfig cfg;
  cfg.alpha = alpha;
  for (const Graph& g : graphs) {
    const int omega = max_clique_bruteforce(g).size;
    if (omega < 2) {
      ++r.skipped;
      continue;
    }
    const NisanGame game = build_nisan_game(g, omega);
    auto x0 = initialize(game, cfg);
    if (!x0) {
      ++r.skipped;
      continue;
    }
    ++r.trials;
    Strategy x = *x0;
    SignedLog prev = barrier_primary(game, x);
    for (long s = 0; s < steps; ++s) {
      Strategy next = hedge_step(operative_matrix(game, x, BarrierKind::Primary).entries, x, alpha);
      const FeasibilityClass cls = classify(game, next);
      json ex = {{"graph", to_dimacs(g)},
                 {"k", omega},
                 {"step", s},
                 {"x", to_json(x.mass())},
                 {"next", to_json(next.mass())},
                 {"class", to_string(cls.tag)}};
      if (cls.tag != Feasibility::StrictlyLowerFeasible) {
        ex["violation"] = "left band";
        fail(r, ex);
        break;
      }
      const SignedLog g_next = barrier_primary(game, next);
      if (!non_decreasing(prev, g_next, 1e-12)) {
        ex["violation"] = "barrier decreased";
        ex["log_abs_before"] = prev.log_magnitude;
        ex["log_abs_after"] = g_next.log_magnitude;
        fail(r, ex);
        break;
      }
      x = std::move(next);
      prev = g_next;
    }
  }
  return r;
}

std::vector<Graph> small_corpus(std::size_t minimum, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int n = 2; n <= 6; ++n) {
    auto classes = gen::connected_graphs(n);
    out.insert(out.end(), classes.begin(), classes.end());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(3, 6);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  while (out.size() < minimum) out.push_back(gen::gnp_connected(dim(rng), density(rng), rng()));
  return out;
}

SuiteResult fixed_points(const std::vector<Graph>& corpus) {
  SuiteResult r = named("fixedpoint");
  long degenerate = 0, points = 0;
  for (const Graph& g : corpus) {
    const int omega = max_clique_bruteforce(g).size;
    if (omega < 2) {
      ++r.skipped;
      continue;
    }
    ++r.trials;
    const NisanGame game = build_nisan_game(g, omega);
    const auto fps = enumerate_replicator_fixed_points(game.raw_c);
    degenerate += static_cast<long>(fps.degenerate.size());
    const double cap = 1.0 - 1.0 / (2.0 * (omega - 1));
    for (const Strategy& x : fps.points) {
      ++points;
      const double phi = potential(game.raw_c, x);
      const double f = (game.raw_c * x.mass()).maxCoeff();
      const bool clique = is_clique(g, x.carrier());
      json ex = {{"graph", to_dimacs(g)},
                 {"omega", omega},
                 {"x", to_json(x.mass())},
                 {"potential", phi},
                 {"max_payoff", f}};
      if (!clique && phi > cap + 1e-9) {
        ex["violation"] = "non-clique fixed point above 1 - 1/(2(omega-1))";
        ex["bound"] = cap;
        fail(r, ex);
      }
      const bool in_band = f >= game.raw.c_ell - 1e-9 && f <= game.raw.c00 + 1e-9;
      if (in_band && f < game.raw.c00 - 1e-9) {
        ex["violation"] = "fixed point inside the closed band below C00";
        ex["c00"] = game.raw.c00;
        ex["c_ell"] = game.raw.c_ell;
        fail(r, ex);
      }
    }
  }
  r.stats["fixed_points"] = points;
  r.stats["degenerate_supports"] = degenerate;
  return r;
}

SuiteResult gap_bound(const std::vector<Graph>& corpus) {
  SuiteResult r = named("gap");
  double smallest = INFINITY;
  for (const Graph& g : corpus) {
    const int omega = max_clique_bruteforce(g).size;
    if (omega < 2) {
      ++r.skipped;
      continue;
    }
    ++r.trials;
    const Matrix raw_c = build_nisan_game(g, omega).raw_c;
    const double bound = min_gap_lower_bound(omega);
    for (const Strategy& x : enumerate_replicator_fixed_points(raw_c).points) {
      const double gamma = potential_gap(raw_c, x, bomze_value(omega));
      if (gamma <= 1e-12) continue;
      smallest = std::min(smallest, gamma);
      if (gamma < bound - 1e-9) {
        fail(r, {{"graph", to_dimacs(g)},
                 {"omega", omega},
                 {"x", to_json(x.mass())},
                 {"gap", gamma},
                 {"bound", bound}});
      }
    }
  }
  r.stats["smallest_positive_gap"] = std::isfinite(smallest) ? json(smallest) : json(nullptr);
  return r;
}

std::vector<SuiteResult> run(const Config& cfg) {
  for (const auto& s : cfg.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw ValidationError("unknown property suite '" + s + "'");
  auto wanted = [&](const std::string& s) {
    return cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
  };
  std::mt19937_64 rng(cfg.seed);
  std::vector<SuiteResult> out;
  if (wanted("growth")) out.push_back(growth(cfg.trials, rng, cfg.inject_bug));
  if (wanted("identity") || wanted("ranking") || wanted("bound")) {
    TraceSuites t = trace_suites(cfg.trials, 50, rng);
    if (wanted("identity")) out.push_back(std::move(t.identity));
    if (wanted("ranking")) out.push_back(std::move(t.ranking));
    if (wanted("bound")) out.push_back(std::move(t.bound));
  }
  if (wanted("band")) {
    std::vector<Graph> graphs;
    for (auto& [name, g] : curated_graphs()) graphs.push_back(g);
    out.push_back(band(graphs, cfg.trials, cfg.alpha));
  }
  if (wanted("fixedpoint") || wanted("gap")) {
    const auto corpus = small_corpus(500, cfg.seed);
    if (wanted("fixedpoint")) out.push_back(fixed_points(corpus));
    if (wanted("gap")) out.push_back(gap_bound(corpus));
  }
  return out;
}

json to_json(const std::vector<SuiteResult>& results) {
  json suites = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    suites.push_back({{"suite", r.name},
                      {"passed", r.passed()},
                      {"trials", r.trials},
                      {"skipped", r.skipped},
                      {"failures", r.failures},
                      {"stats", r.stats},
                      {"counterexample", r.counterexample}});
  }
  return {{"passed", all}, {"suites", suites}};
}

}  // namespace ariadne::props
