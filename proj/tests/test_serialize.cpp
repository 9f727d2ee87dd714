#include "ariadne/generators.hpp"
#include "ariadne/serialize.hpp"

#include <doctest.h>

using namespace ariadne;

TEST_CASE("signed-log and vector serialization") {
  const auto s = to_json(SignedLog{-1, 2.5});
  CHECK(s["sign"] == -1);
  CHECK(s["log_magnitude"] == 2.5);
  const Vector v = (Vector(3) << 1.0, 2.0, 3.0).finished();
  CHECK(to_json(v).size() == 3);
  CHECK(to_json(v)[2] == 3.0);
}

TEST_CASE("game serialization keeps both scales") {
  const auto j = to_json(build_nisan_game(gen::complete(3), 3));
  CHECK(j["k"] == 3);
  CHECK(j.contains("raw"));
  CHECK(j.contains("normalized"));
}

TEST_CASE("report and trace serialization") {
  RunConfig cfg;
  cfg.record_trace = true;
  const NisanGame g = build_nisan_game(gen::cycle(5), 2);
  const KOutcome o = run_for_k(g, cfg);
  const auto j = trace_to_json(*o.trace, g);
  CHECK(j["schema_version"] == kTraceSchemaVersion);
  CHECK(j["k"] == 2);
  const auto& trace = j["records"];
  REQUIRE(trace.is_array());
  CHECK(trace.size() == o.trace->iterates.size());
  const auto& first = trace.front();
  for (const char* key : {"iteration", "strategy", "potential", "barrier", "feasibility",
                          "multiplier", "multiplier_residual", "rate", "operative"})
    CHECK(first.contains(key));
  CHECK(first["iteration"] == 0);

  const Report r = run(gen::complete(4), RunConfig{});
  const auto rj = to_json(r);
  CHECK(rj["clique_size"] == 4);
  CHECK(rj["agreement"] == true);
  CHECK(rj["outcomes"].is_array());
  CHECK(kTraceSchemaVersion == 1);
}
