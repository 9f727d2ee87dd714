#pragma once

#include "ariadne/solver.hpp"

#include <nlohmann/json.hpp>

namespace ariadne {

inline constexpr int kTraceSchemaVersion = 1;

nlohmann::json to_json(const Vector& v);
/// Row-major nested arrays with a scale label.
nlohmann::json matrix_to_json(const Matrix& m, const std::string& scale);
nlohmann::json to_json(const SignedLog& s);
nlohmann::json to_json(const NisanGame& game);
nlohmann::json to_json(const KOutcome& o);
nlohmann::json to_json(const Report& r);

/// One record per iteration; potentials reported in the raw scale via the game's transform.
nlohmann::json trace_to_json(const Trace& trace, const NisanGame& game);

}  // namespace ariadne
