#pragma once

#include "stopgame/game.hpp"

namespace stopgame::testing {

// Two outcomes {a, b}, uniform, horizon 1. Player 1 sees the outcome at t=1,
// player 2 never does. x1 = (2; then 4 on a, 0 on b), y1 = 0, x2 = 0, y2 = 1.
// Solves to tau* = 0, nu* = 1, theta* = 1 with payoffs (2, 1).
GameSpec game_s();

// Two outcomes {a, b}, uniform, horizon 2. Player 2's filtration is trivial
// throughout; player 1 sees the outcome from t=1. Deterministic payoffs
// x2 = (0, 3, 0), y2 = (0, 0, 5); player 1's payoffs are all zero.
GameSpec game_t();

// The rule player 1 commits to in the game_t scenarios: stop at 1 on a, 2 on b.
StoppingTime game_t_tau();

}  // namespace stopgame::testing
