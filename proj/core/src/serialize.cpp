#include "ariadne/serialize.hpp"

#include <cmath>

namespace ariadne {

using nlohmann::json;

json to_json(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json matrix_to_json(const Matrix& m, const std::string& scale) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(Vector(m.row(i).transpose())));
  return {{"scale", scale}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

json to_json(const SignedLog& s) { return {{"sign", s.sign}, {"log_magnitude", s.log_magnitude}}; }

json to_json(const NisanGame& g) {
  return {{"n", g.n()},
          {"k", g.k},
          {"raw", {{"c00", g.raw.c00}, {"c_ell", g.raw.c_ell}}},
          {"normalized", {{"c00", g.normalized.c00}, {"c_ell", g.normalized.c_ell}}},
          {"eps_a", g.eps_a},
          {"eps", g.eps},
          {"transform", {{"shift", g.transform.shift}, {"scale", g.transform.scale}}},
          {"raw_cplus", matrix_to_json(g.raw_cplus, "raw")},
          {"cplus", matrix_to_json(g.cplus, "normalized")}};
}

json to_json(const KOutcome& o) {
  json j = {{"k", o.k},
            {"result", to_string(o.result)},
            {"iterations_used", o.iterations_used},
            {"budget", o.budget},
            {"switched_to_secondary", o.switched_to_secondary},
            {"switch_iteration", o.switch_iteration},
            {"final_barrier", to_json(o.final_barrier)},
            {"boundary_candidate", o.boundary_candidate},
            {"stalled", o.stalled},
            {"multiplier_solves", o.multiplier_solves},
            {"exact_multipliers", o.exact_multipliers},
            {"max_multiplier_residual", o.max_residual}};
  if (o.result == KResult::FoundClique) {
    j["clique"] = o.clique.members();
    j["accepted_from"] = o.accepted_from;
  }
  if (o.result == KResult::Fault) {
    j["fault"] = o.fault;
    j["fault_dump"] = json::parse(o.fault_dump, nullptr, false);
  }
  return j;
}

json to_json(const Report& r) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(to_json(o));
  json j = {{"graph", {{"n", r.n}, {"m", r.m}, {"connected", r.connected}}},
            {"outcomes", outcomes},
            {"clique", r.clique.members()},
            {"clique_size", r.clique_size},
            {"fallback", r.fallback},
            {"total_iterations", r.total_iterations}};
  j["oracle_omega"] = r.oracle_omega ? json(*r.oracle_omega) : json(nullptr);
  j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
  if (r.oracle_witness) j["oracle_witness"] = r.oracle_witness->members();
  j["switch_mismatches"] = r.switch_mismatches;
  return j;
}

json trace_to_json(const Trace& trace, const NisanGame& game) {
  json records = json::array();
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    const Strategy& x = trace.iterates[k];
    json rec = {{"iteration", k},
                {"strategy", to_json(x.mass())},
                {"potential", game.transform.invert(x.mass().dot(game.c * x.mass()))}};
    if (k < trace.barrier_values.size()) rec["barrier"] = to_json(trace.barrier_values[k]);
    if (k < trace.feasibility.size()) rec["feasibility"] = to_string(trace.feasibility[k].tag);
    if (k < trace.multipliers.size()) {
      rec["multiplier"] = to_json(trace.multipliers[k].mass());
      rec["multiplier_residual"] = trace.residuals[k];
      rec["rate"] = trace.rates[k];
    }
    if (k < trace.provenance.size()) {
      const auto& p = trace.provenance[k];
      rec["operative"] = {{"barrier", to_string(p.kind)},
                          {"g1", p.g1},
                          {"best_response", p.best_response},
                          {"shift", p.shift},
                          {"scale", p.scale}};
    }
    records.push_back(std::move(rec));
  }
  return {{"schema_version", kTraceSchemaVersion}, {"k", game.k}, {"records", records}};
}

}  // namespace ariadne
