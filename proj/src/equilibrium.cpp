#include "stopgame/equilibrium.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace stopgame {

namespace {

// Per outcome, the first t with process == target, as an optional ("min over
// an empty set" stays empty until a cap is applied; no sentinel inside [0,T]).
std::vector<std::optional<int>> first_coincidence(const AdaptedProcess& process,
                                                  const AdaptedProcess& target) {
  const int T = process.horizon();
  const int n = process.n_outcomes();
  std::vector<std::optional<int>> first(n);
  for (Outcome w = 0; w < n; ++w) {
    for (int t = 0; t <= T; ++t) {
      if (process.at(t, w) == target.at(t, w)) {
        first[w] = t;
        break;
      }
    }
  }
  return first;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

IterationState initial_state(const GameSpec& game) {
  IterationState state;
  state.n = 1;
  state.tau = StoppingTime::constant(game.n_outcomes(), game.horizon());
  state.nu = state.tau;
  return state;
}

AdaptedProcess p1_reward_process(const GameSpec& game, const StoppingTime& nu) {
  const int T = game.horizon();
  const int n = game.n_outcomes();
  AdaptedProcess reward(T, n);
  for (int t = 0; t <= T; ++t) {
    for (Outcome w = 0; w < n; ++w) {
      // Stopping at t = nu keeps player 1's priority payoff, so x1 applies
      // through nu inclusive; only strictly later times are absorbed. This
      // makes E[reward at tau] equal player 1's payoff functional for every
      // tau, not just those avoiding the boundary.
      reward.at(t, w) = t <= nu.at(w) ? game.x1.at(t, w) : game.y1.at(nu.at(w), w);
    }
  }
  return reward;
}

IterationState iterate_once(const GameSpec& game, const IterationState& state) {
  const int n = game.n_outcomes();
  const auto& weights = game.space.probs();

  // Player 1's side: envelope against nu_n, coincidence with x1, cap at nu_n.
  // The capped rule is adopted outright: since the reward pays x1 through
  // nu_n inclusive (priority at ties), stopping together with player 2 is a
  // legitimate reply, and insisting on a strictly earlier coincidence would
  // freeze tau against a player 2 who stops first.
  const AdaptedProcess reward1 = p1_reward_process(game, state.nu);
  const EnvelopeResult env1 = snell_envelope(reward1, game.f, weights);
  const auto hit1 = first_coincidence(env1.envelope, game.x1);
  StoppingTime tau_tilde(std::vector<int>(n, 0));
  for (Outcome w = 0; w < n; ++w) {
    tau_tilde.times[w] = hit1[w] ? std::min(*hit1[w], state.nu.at(w)) : state.nu.at(w);
  }
  // Running minimum keeps the sequence nonincreasing even where the payoff
  // order x1 >= y1 fails; under that order the fresh rule never moves up and
  // the minimum is inactive.
  StoppingTime tau_next = pointwise_min(tau_tilde, state.tau);

  // Player 2's side: envelope on the filtration augmented by tau_n,
  // coincidence with x2, cap at tau_n.
  const AugmentedFiltration aug = augment_filtration(game.g, state.tau);
  const AdaptedProcess reward2 = p2_reward_process(game, state.tau);
  const EnvelopeResult env2 = snell_envelope(reward2, aug.augmented, weights);
  const auto hit2 = first_coincidence(env2.envelope, game.x2);
  StoppingTime nu_tilde(std::vector<int>(n, 0));
  StoppingTime nu_next(std::vector<int>(n, 0));
  for (Outcome w = 0; w < n; ++w) {
    const int capped = hit2[w] ? std::min(*hit2[w], state.tau.at(w)) : state.tau.at(w);
    nu_tilde.times[w] = capped;
    // nu is the running minimum of the candidates that strictly undercut the
    // tau of their stage; a candidate arriving above the current nu (possible
    // once tau has moved) must not delay a commitment already made.
    nu_next.times[w] =
        capped < state.tau.at(w) ? std::min(capped, state.nu.at(w)) : state.nu.at(w);
  }

  // theta_{n+1}: first touch of the g-measurable value process (for tau_n)
  // with x2. +infinity cells never trigger, so the cap lands at the horizon.
  const ValueProcess value = p2_value_process(game, state.tau, env2);
  StoppingTime theta = StoppingTime::constant(n, game.horizon());
  for (Outcome w = 0; w < n; ++w) {
    for (int t = 0; t <= game.horizon(); ++t) {
      if (value.at(t, w) == game.x2.at(t, w)) {
        theta.times[w] = t;
        break;
      }
    }
  }

  require(is_stopping_time(tau_next, game.f),
          "iterate_once: tau_" + std::to_string(state.n + 1) + " is not an F-stopping time");
  require(is_stopping_time(theta, game.g),
          "iterate_once: theta_" + std::to_string(state.n + 1) + " is not a G-stopping time");
  require(is_stopping_time(nu_tilde, aug.augmented),
          "iterate_once: nu_tilde_" + std::to_string(state.n + 1) +
              " is not a stopping time for G augmented by tau_" + std::to_string(state.n));
  // nu itself mixes candidates from different stages, so only measurability
  // for player 1's filtration (and for G joined with the whole tau history,
  // checked in the tests) survives; a single stage's augmentation does not.
  require(is_stopping_time(nu_next, game.f),
          "iterate_once: nu_" + std::to_string(state.n + 1) + " is not an F-stopping time");

  IterationState next;
  next.n = state.n + 1;
  next.tau = std::move(tau_next);
  next.nu = std::move(nu_next);
  next.thetas = state.thetas;
  next.thetas.push_back(std::move(theta));
  next.tau_tilde = std::move(tau_tilde);
  next.nu_tilde = std::move(nu_tilde);
  return next;
}

EquilibriumResult solve(const GameSpec& game) {
  game.validate();
  const int n = game.n_outcomes();
  const int T = game.horizon();
  const int bound = n * T + 2;

  EquilibriumResult result;
  IterationState state = initial_state(game);
  result.trace.push_back(state);
  bool fixed = false;
  while (!fixed) {
    IterationState next = iterate_once(game, state);
    ++result.iterations;
    if (result.iterations > bound) {
      throw std::logic_error("no fixpoint within |outcomes|*horizon+2 iterations");
    }
    fixed = next.tau == state.tau && next.nu == state.nu;
    result.trace.push_back(next);
    state = std::move(next);
  }
  // One more stage so the theta list covers the settled pair as well.
  state = iterate_once(game, state);
  ++result.iterations;
  result.trace.push_back(state);

  result.tau_star = state.tau;
  result.nu_star = state.nu;
  result.theta_star = state.thetas.front();
  for (const StoppingTime& theta : state.thetas) {
    result.theta_star = pointwise_min(result.theta_star, theta);
  }

  require(is_stopping_time(result.tau_star, game.f), "tau_star is not an F-stopping time");
  require(is_stopping_time(result.nu_star, game.f), "nu_star is not an F-stopping time");
  require(is_stopping_time(result.theta_star, game.g), "theta_star is not a G-stopping time");

  // nu_star must equal the first theta_{n+1} that undercuts tau_n, capped at
  // the horizon; trace[k] holds stage n=k+1, whose theta list ends in
  // theta_{k+1}.
  StoppingTime recovered = StoppingTime::constant(n, T);
  for (Outcome w = 0; w < n; ++w) {
    for (std::size_t k = 1; k < result.trace.size(); ++k) {
      const int theta_next = result.trace[k].thetas.back().at(w);
      const int tau_n = result.trace[k - 1].tau.at(w);
      if (theta_next < tau_n) {
        recovered.times[w] = std::min(recovered.times[w], theta_next);
      }
    }
  }
  require(recovered == result.nu_star,
          "nu_star does not match its reconstruction from the theta sequence");
  return result;
}

bool check_corollary(const GameSpec& game, const EquilibriumResult& result) {
  for (Outcome w = 0; w < game.n_outcomes(); ++w) {
    const bool nu_early = result.nu_star.at(w) < result.tau_star.at(w);
    const bool theta_early = result.theta_star.at(w) < result.tau_star.at(w);
    if (nu_early != theta_early) return false;
  }
  return true;
}

}  // namespace stopgame
