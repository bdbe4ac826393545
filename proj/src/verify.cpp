#include "stopgame/verify.hpp"

#include <functional>
#include <stdexcept>

namespace stopgame {

namespace {

void check_pair_shapes(const GameSpec& game, const StoppingTime& tau, const StoppingTime& nu) {
  const int n = game.n_outcomes();
  if (tau.n_outcomes() != n || nu.n_outcomes() != n) {
    throw std::invalid_argument("stopping time size mismatch");
  }
  for (int t : tau.times) {
    if (t < 0 || t > game.horizon()) throw std::invalid_argument("tau value out of [0, T]");
  }
  for (int t : nu.times) {
    if (t < 0 || t > game.horizon()) throw std::invalid_argument("nu value out of [0, T]");
  }
}

// Enumerates the stopping times of `filtration`, maximizes `payoff`, and
// returns the pointwise-minimal attainer with the maximum. The minimal
// attainer of these problems is itself optimal; this is asserted.
BestResponse exhaustive_best(const Filtration& filtration,
                             const std::function<Rational(const StoppingTime&)>& payoff,
                             std::uint64_t cap) {
  const Integer count = count_stopping_times(filtration, 0);
  if (count > Integer(cap)) {
    throw std::length_error("instance too large for exhaustive verification: " + count.str() +
                            " stopping times");
  }
  std::optional<Rational> best;
  StoppingTime minimal;
  for_each_stopping_time(filtration, 0, [&](const StoppingTime& rule) {
    const Rational value = payoff(rule);
    if (!best || value > *best) {
      best = value;
      minimal = rule;
    } else if (value == *best) {
      minimal = pointwise_min(minimal, rule);
    }
  });
  if (payoff(minimal) != *best) {
    throw std::logic_error("pointwise minimum of attainers failed to attain the maximum");
  }
  return BestResponse{minimal, *best};
}

}  // namespace

Rational j1(const GameSpec& game, const StoppingTime& tau, const StoppingTime& nu) {
  check_pair_shapes(game, tau, nu);
  Rational total(0);
  for (Outcome w = 0; w < game.n_outcomes(); ++w) {
    const Rational& payoff = tau.at(w) <= nu.at(w) ? game.x1.at(tau.at(w), w)
                                                   : game.y1.at(nu.at(w), w);
    total += game.space.prob(w) * payoff;
  }
  return total;
}

Rational j2(const GameSpec& game, const StoppingTime& tau, const StoppingTime& nu) {
  check_pair_shapes(game, tau, nu);
  Rational total(0);
  for (Outcome w = 0; w < game.n_outcomes(); ++w) {
    const Rational& payoff = nu.at(w) < tau.at(w) ? game.x2.at(nu.at(w), w)
                                                  : game.y2.at(tau.at(w), w);
    total += game.space.prob(w) * payoff;
  }
  return total;
}

BestResponse best_response_1(const GameSpec& game, const StoppingTime& nu) {
  const int T = game.horizon();
  const int n = game.n_outcomes();
  AdaptedProcess reward(T, n);
  for (int t = 0; t <= T; ++t) {
    for (Outcome w = 0; w < n; ++w) {
      reward.at(t, w) = t <= nu.at(w) ? game.x1.at(t, w) : game.y1.at(nu.at(w), w);
    }
  }
  const EnvelopeResult env = snell_envelope(reward, game.f, game.space.probs());
  Rational value(0);
  for (Outcome w = 0; w < n; ++w) value += game.space.prob(w) * env.envelope.at(0, w);
  return BestResponse{env.minimal_from[0], value};
}

BestResponse best_response_2(const GameSpec& game, const StoppingTime& tau) {
  const int T = game.horizon();
  const int n = game.n_outcomes();
  AdaptedProcess projected(T, n);
  for (int t = 0; t <= T; ++t) {
    std::vector<Rational> raw(n);
    for (Outcome w = 0; w < n; ++w) {
      raw[w] = tau.at(w) > t ? game.x2.at(t, w) : game.y2.at(tau.at(w), w);
    }
    projected.values[t] = conditional_expectation(raw, game.g.at(t), game.space.probs());
  }
  const EnvelopeResult env = snell_envelope(projected, game.g, game.space.probs());
  Rational value(0);
  for (Outcome w = 0; w < n; ++w) value += game.space.prob(w) * env.envelope.at(0, w);
  return BestResponse{env.minimal_from[0], value};
}

std::string to_string(VerifyMethod method) {
  return method == VerifyMethod::kFastPath ? "fast-path" : "exhaustive";
}

VerificationReport verify_nash(const GameSpec& game, const StoppingTime& tau,
                               const StoppingTime& nu, VerifyMethod method,
                               std::uint64_t exhaustive_cap) {
  VerificationReport report;
  report.method = method;
  report.j1_achieved = j1(game, tau, nu);
  report.j2_achieved = j2(game, tau, nu);

  BestResponse b1, b2;
  if (method == VerifyMethod::kFastPath) {
    b1 = best_response_1(game, nu);
    b2 = best_response_2(game, tau);
  } else {
    b1 = exhaustive_best(
        game.f, [&](const StoppingTime& t) { return j1(game, t, nu); }, exhaustive_cap);
    b2 = exhaustive_best(
        game.g, [&](const StoppingTime& v) { return j2(game, tau, v); }, exhaustive_cap);
  }
  report.j1_best = b1.value;
  report.j2_best = b2.value;
  if (report.j1_best > report.j1_achieved) report.p1_deviation = b1.rule;
  if (report.j2_best > report.j2_achieved) report.p2_deviation = b2.rule;
  report.is_nash =
      report.j1_best == report.j1_achieved && report.j2_best == report.j2_achieved;
  return report;
}

GameSpec epsilon_game(const GameSpec& game, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be strictly positive");
  GameSpec shifted = game;
  for (auto& row : shifted.x1.values) {
    for (auto& v : row) v += eps;
  }
  return shifted;
}

}  // namespace stopgame
