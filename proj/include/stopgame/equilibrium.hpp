#pragma once

#include "stopgame/asym.hpp"

#include <optional>
#include <vector>

namespace stopgame {

// One stage of the recursive construction. Stage n holds the pair
// (tau_n, nu_n) plus every g-measurable candidate theta computed so far.
// tau_n is an f-stopping time. nu_n is a running minimum of candidates from
// different stages: it is an f-stopping time (and measurable for g joined
// with the whole tau history), but in general not for any single stage's
// augmented filtration; it is stored as a raw map.
struct IterationState {
  int n = 1;
  StoppingTime tau;
  StoppingTime nu;
  std::vector<StoppingTime> thetas;  // theta_2 .. theta_n

  // Pre-cap coincidence rules of the step that produced this state
  // (unset for the initial state); kept for trace inspection.
  std::optional<StoppingTime> tau_tilde;
  std::optional<StoppingTime> nu_tilde;
};

// Stage 1: both players wait until the horizon.
IterationState initial_state(const GameSpec& game);

// Player 1's effective reward once player 2 commits to nu: x1_t while
// t <= nu (stopping together still pays player 1's side, by priority),
// frozen at y1_{nu} strictly after. E[reward at tau] therefore equals
// player 1's payoff functional against nu for every tau.
AdaptedProcess p1_reward_process(const GameSpec& game, const StoppingTime& nu);

// One stage of the construction. From (tau_n, nu_n):
//   - tau_{n+1}: first coincidence of player 1's envelope with x1, capped at
//     nu_n, adopted outright (the cap is a legitimate reply, see
//     p1_reward_process).
//   - nu_{n+1}: player 2's first coincidence with x2 on the filtration
//     augmented by tau_n, capped at tau_n; adopted only where it undercuts
//     tau_n strictly (at tau_n and later his payoff is y2_{tau_n} anyway),
//     else nu_n persists.
//   - theta_{n+1}: first time the g-measurable value process (for tau_n)
//     touches x2, capped at the horizon.
// Measurability of all three outputs is asserted; a violation throws
// std::logic_error.
IterationState iterate_once(const GameSpec& game, const IterationState& state);

struct EquilibriumResult {
  StoppingTime tau_star;    // limit of the tau_n; an f-stopping time
  StoppingTime nu_star;     // limit of the nu_n; an f-stopping time, not necessarily g
  StoppingTime theta_star;  // pointwise minimum of the theta_n; a g-stopping time
  std::vector<IterationState> trace;  // states for n = 1 .. final
  int iterations = 0;                 // calls to iterate_once
};

// Runs the construction until (tau, nu) repeats, then one more stage to
// finalize theta. Asserts monotonicity gives a fixpoint within
// |outcomes| * horizon + 2 stages and that nu_star equals the first
// theta_{n+1} that undercuts tau_n (capped at the horizon).
EquilibriumResult solve(const GameSpec& game);

// True iff {nu_star < tau_star} and {theta_star < tau_star} are the same
// outcome set.
bool check_corollary(const GameSpec& game, const EquilibriumResult& result);

}  // namespace stopgame
