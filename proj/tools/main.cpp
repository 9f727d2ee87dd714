#include "ariadne/props.hpp"
#include "ariadne/serialize.hpp"
#include "ariadne/shapley.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ariadne;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_csv(const Report& r, std::ostream& os) {
  os << "k,result,iterations_used,budget,switched_to_secondary,boundary_candidate,stalled,"
        "max_multiplier_residual\n";
  for (const auto& o : r.outcomes)
    os << o.k << ',' << to_string(o.result) << ',' << o.iterations_used << ',' << o.budget << ','
       << o.switched_to_secondary << ',' << o.boundary_candidate << ',' << o.stalled << ','
       << o.max_residual << '\n';
  os << "# clique_size=" << r.clique_size;
  if (r.oracle_omega) os << ",oracle_omega=" << *r.oracle_omega << ",agreement=" << *r.agreement;
  os << '\n';
}

int cmd_solve(const std::string& path, RunConfig cfg, const std::string& trace_path,
              const std::string& format) {
  Graph g(1);
  try {
    g = read_dimacs_file(path);
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitBadInput;
  } catch (const RangeError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ValidationError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitBadInput;
  }
  cfg.record_trace = !trace_path.empty();
  const Report r = run(g, cfg);
  if (!is_clique(g, r.clique)) {
    std::cerr << "refusing to emit a set that is not a clique\n";
    return kExitFailure;
  }
  if (format == "csv")
    write_csv(r, std::cout);
  else
    std::cout << to_json(r).dump(2) << '\n';

  if (!trace_path.empty()) {
    json runs = json::array();
    for (const auto& o : r.outcomes)
      if (o.trace) runs.push_back(trace_to_json(*o.trace, build_nisan_game(g, o.k)));
    std::ofstream out(trace_path);
    if (!out) {
      std::cerr << "cannot write " << trace_path << '\n';
      return kExitFailure;
    }
    out << json{{"schema_version", kTraceSchemaVersion}, {"runs", runs}}.dump() << '\n';
  }
  return 0;
}

int cmd_props(props::Config cfg, const std::string& suites) {
  cfg.suites = split_csv(suites);
  const auto results = props::run(cfg);
  const json summary = props::to_json(results);
  std::cout << summary.dump(2) << '\n';
  return summary["passed"].get<bool>() ? 0 : kExitFailure;
}

int cmd_shapley(double alpha, long iterations, long every, bool uniform) {
  const Strategy x0 = uniform ? Strategy::uniform(6) : shapley_start();
  std::cout << "# alpha=" << alpha << ",iterations=" << iterations
            << ",start=" << (uniform ? "uniform" : "nonuniform") << '\n';
  std::cout << "K,distance\n";
  std::cout.precision(12);
  for (const auto& p : shapley_divergence(shapley_matrix(), x0, alpha, iterations, every))
    std::cout << p.iteration << ',' << p.distance << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-clique search by barrier-guarded Hedge dynamics"};
  app.require_subcommand(1);

  RunConfig run_cfg;
  run_cfg.use_oracle = false;
  std::string path, trace_path, format = "json";
  int k0 = 0;
  bool oracle = false;
  auto* solve = app.add_subcommand("solve", "Search a DIMACS graph for a maximum clique");
  solve->add_option("graph", path, "DIMACS .col file")->required();
  solve->add_option("--alpha", run_cfg.alpha, "Learning rate")->capture_default_str();
  solve->add_option("--k0", k0, "Starting Nisan parameter (default: min(n, max degree + 1))");
  solve->add_option("--budget-scale", run_cfg.budget_scale, "Multiplier on the iteration budget")
      ->capture_default_str();
  solve->add_option("--seed", run_cfg.seed, "Seed for randomized fallbacks")->capture_default_str();
  solve->add_flag("--oracle", oracle, "Compare with the brute-force clique number");
  solve->add_option("--oracle-cap", run_cfg.oracle_cap, "Largest n handed to the oracle")
      ->capture_default_str();
  solve->add_option("--trace", trace_path, "Write per-iteration traces as JSON");
  solve->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  props::Config props_cfg;
  std::string suites;
  auto* prop = app.add_subcommand("props", "Run the property suites");
  prop->add_option("--trials", props_cfg.trials, "Trial count scale")->capture_default_str();
  prop->add_option("--suites", suites, "Comma-separated subset of suites");
  prop->add_option("--seed", props_cfg.seed, "Random seed")->capture_default_str();
  prop->add_option("--alpha", props_cfg.alpha, "Learning rate of the band suite")
      ->capture_default_str();
  prop->add_flag("--inject-bug", props_cfg.inject_bug, "Harness self-test: break the growth suite")
      ->group("");

  double shapley_alpha = 0.1;
  long iterations = 100000, every = 1000;
  bool uniform = false;
  auto* shapley = app.add_subcommand("shapley", "Hedge on the extended Shapley game (CSV)");
  shapley->add_option("--alpha", shapley_alpha, "Learning rate")->capture_default_str();
  shapley->add_option("--iterations", iterations, "Number of Hedge steps")->capture_default_str();
  shapley->add_option("--every", every, "Checkpoint spacing")->capture_default_str();
  shapley->add_flag("--uniform", uniform, "Start from the uniform strategy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*solve) {
      if (k0 > 0) run_cfg.k0 = k0;
      run_cfg.use_oracle = oracle;
      return cmd_solve(path, run_cfg, trace_path, format);
    }
    if (*prop) return cmd_props(props_cfg, suites);
    if (*shapley) return cmd_shapley(shapley_alpha, iterations, every, uniform);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
