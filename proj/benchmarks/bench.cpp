#include "ariadne/barrier.hpp"
#include "ariadne/dynamics.hpp"
#include "ariadne/generators.hpp"
#include "ariadne/multipliers.hpp"
#include "ariadne/solver.hpp"

#include <benchmark/benchmark.h>

using namespace ariadne;

namespace {

NisanGame game_for(int n) {
  const Graph g = gen::gnp_connected(n, 0.5, 42);
  return build_nisan_game(g, std::max(2, max_clique_bruteforce(g, std::max(n, 20)).size));
}

void BM_HedgeStep(benchmark::State& state) {
  const NisanGame g = game_for(static_cast<int>(state.range(0)));
  Strategy x = Strategy::uniform(g.n());
  for (auto _ : state) {
    x = hedge_step(g.c, x, 0.1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_HedgeStep)->Arg(8)->Arg(16)->Arg(32);

void BM_OperativeMatrix(benchmark::State& state) {
  const NisanGame g = game_for(static_cast<int>(state.range(0)));
  const auto x0 = initialize(g, RunConfig{});
  if (!x0) {
    state.SkipWithError("band empty");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(operative_matrix(g, *x0, BarrierKind::Primary));
}
BENCHMARK(BM_OperativeMatrix)->Arg(8)->Arg(16);

void BM_SolveMultiplier(benchmark::State& state) {
  const NisanGame g = game_for(static_cast<int>(state.range(0)));
  const Vector target = g.c * Strategy::uniform(g.n()).mass() + Vector::Constant(g.n(), 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_multiplier(g.c, target));
}
BENCHMARK(BM_SolveMultiplier)->Arg(8)->Arg(16);

void BM_CliqueOracle(benchmark::State& state) {
  const Graph g = gen::gnp_connected(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_bruteforce(g));
}
BENCHMARK(BM_CliqueOracle)->Arg(10)->Arg(16)->Arg(20);

void BM_RunForK(benchmark::State& state) {
  const NisanGame g = build_nisan_game(gen::cycle(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(run_for_k(g, RunConfig{}));
}
BENCHMARK(BM_RunForK)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
