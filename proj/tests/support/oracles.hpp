#pragma once

#include "stopgame/game.hpp"
#include "stopgame/prob.hpp"

namespace stopgame::testing {

// Brute-force references that never touch the backward-induction code paths:
// they enumerate stopping times outright and take maxima of conditional
// expectations.

// Per outcome: the max over stopping times valued in [t, T] of
// E[U at the stopping time | time-t cell of the filtration].
std::vector<Rational> envelope_oracle_at(const AdaptedProcess& reward,
                                         const Filtration& filtration,
                                         const std::vector<Rational>& weights, int t);

// Per outcome at time t: the max over g-stopping times theta valued in [t, T]
// of E under P(.|{tau>t}) given the time-t g-cell of
//   x2_theta 1{theta<tau} + y2_tau 1{tau<=theta};
// +infinity on cells that miss {tau>t} (and everywhere when {tau>t} is empty).
std::vector<ExtRational> value_oracle_at(const GameSpec& game, const StoppingTime& tau, int t);

}  // namespace stopgame::testing
