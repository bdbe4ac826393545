#pragma once

#include "stopgame/equilibrium.hpp"
#include "stopgame/game.hpp"
#include "stopgame/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stopgame {

// Game files are JSON documents with fields:
//   "T": integer horizon,
//   "outcomes": [{"id": "...", "prob": "p/q"}, ...],
//   "filtration_F", "filtration_G": per time t = 0..T, a list of cells, each
//     a list of outcome ids,
//   "X1", "Y1", "X2", "Y2": per time, an object mapping id -> "p/q",
//   optional "name" (string) and "seed" (integer).
// Rationals travel as "p/q" strings (bare integers allowed), never floats.

struct Diagnostic {
  bool error = false;  // errors make the file unusable; warnings do not
  std::string message;
};

// Runs every structural check and returns all findings: probability
// normalization, per-filtration refinement, G coarser than F, adaptedness of
// the four processes, and (as a warning only) whether x1 >= y1 holds.
std::vector<Diagnostic> check_game_json(const nlohmann::json& doc);

// Builds a validated GameSpec; throws std::invalid_argument with the first
// error from check_game_json.
GameSpec game_from_json(const nlohmann::json& doc);

nlohmann::ordered_json game_to_json(const GameSpec& game);

nlohmann::ordered_json stopping_time_to_json(const GameSpec& game, const StoppingTime& rule);
StoppingTime stopping_time_from_json(const GameSpec& game, const nlohmann::json& doc);

nlohmann::ordered_json report_to_json(const GameSpec& game, const VerificationReport& report);

// The result document: tau/nu/theta maps, iteration count, J-values of
// (tau_star, theta_star), optionally the full iteration trace and the
// verification report(s).
nlohmann::ordered_json result_to_json(const GameSpec& game, const EquilibriumResult& result,
                                      bool include_trace,
                                      const std::optional<VerificationReport>& report,
                                      const std::optional<VerificationReport>& oracle_report);

// Reads (tau_star, theta_star) back from a result document.
std::pair<StoppingTime, StoppingTime> equilibrium_from_json(const GameSpec& game,
                                                            const nlohmann::json& doc);

}  // namespace stopgame
