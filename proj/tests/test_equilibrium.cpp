#include "stopgame/equilibrium.hpp"

#include "stopgame/gen.hpp"
#include "stopgame/verify.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

using namespace stopgame;
using stopgame::testing::game_s;

namespace {

GameSpec random_game(std::uint64_t seed, int outcomes, int horizon, bool condition9 = false,
                     bool symmetric = false) {
  GenOptions options;
  options.seed = seed;
  options.outcomes = outcomes;
  options.horizon = horizon;
  options.ensure_condition9 = condition9;
  options.symmetric = symmetric;
  return generate_game(options);
}

}  // namespace

TEST_CASE("player 1's reward process") {
  const auto game = game_s();
  SUBCASE("nu at the horizon leaves x1 untouched") {
    CHECK(p1_reward_process(game, StoppingTime::constant(2, 1)) == game.x1);
  }
  SUBCASE("nu = 0 below the horizon: priority at 0, absorbed at y1_0 after") {
    const auto reward = p1_reward_process(game, StoppingTime::constant(2, 0));
    for (Outcome w = 0; w < 2; ++w) {
      CHECK(reward.at(0, w) == game.x1.at(0, w));
      CHECK(reward.at(1, w) == game.y1.at(0, w));
    }
  }
  SUBCASE("expected reward at any tau recovers player 1's payoff functional") {
    for (std::uint64_t seed = 1900; seed < 1930; ++seed) {
      const auto g = random_game(seed, 4, 3);
      std::mt19937_64 rng(seed + 3);
      const auto nu = random_stopping_time(g.g, 0, rng);
      const auto reward = p1_reward_process(g, nu);
      for_each_stopping_time(g.f, 0, [&](const StoppingTime& tau) {
        CHECK(value_of_stopping(reward, tau, g.space.probs()) == j1(g, tau, nu));
      });
    }
  }
}

TEST_CASE("game-s: the first two stages step exactly as expected") {
  const auto game = game_s();
  const auto s1 = initial_state(game);
  CHECK(s1.tau == StoppingTime::constant(2, 1));
  CHECK(s1.nu == StoppingTime::constant(2, 1));

  const auto s2 = iterate_once(game, s1);
  CHECK(*s2.tau_tilde == StoppingTime::constant(2, 0));  // envelope hits x1_0 = 2 at once
  CHECK(s2.tau == StoppingTime::constant(2, 0));
  CHECK(*s2.nu_tilde == StoppingTime::constant(2, 1));
  CHECK(s2.nu == StoppingTime::constant(2, 1));
  REQUIRE(s2.thetas.size() == 1);
  CHECK(s2.thetas[0] == StoppingTime::constant(2, 1));  // V_0 = 1 != 0 = x2_0

  const auto s3 = iterate_once(game, s2);
  CHECK(s3.tau == StoppingTime::constant(2, 0));
  CHECK(s3.nu == StoppingTime::constant(2, 1));
  REQUIRE(s3.thetas.size() == 2);
  // {tau_2 > t} is empty, the value process is all +infinity, theta caps at T
  CHECK(s3.thetas[1] == StoppingTime::constant(2, 1));
}

TEST_CASE("game-s solves to (0, 1, 1) in three stages") {
  const auto game = game_s();
  const auto result = solve(game);
  CHECK(result.tau_star == StoppingTime::constant(2, 0));
  CHECK(result.nu_star == StoppingTime::constant(2, 1));
  CHECK(result.theta_star == StoppingTime::constant(2, 1));
  CHECK(result.iterations == 3);
  CHECK(j1(game, result.tau_star, result.theta_star) == 2);
  CHECK(j2(game, result.tau_star, result.theta_star) == 1);
}

TEST_CASE("flat payoffs stop player 1 immediately") {
  // x2 = y2 = c, x1 = y1 = c': both envelopes coincide with the payoff at 0
  for (int horizon : {1, 2, 3}) {
    GameSpec game{SampleSpace({"a", "b"}, {Rational(1, 2), Rational(1, 2)}),
                  Filtration::singletons(2, horizon),
                  Filtration::trivial(2, horizon),
                  AdaptedProcess(horizon, 2, Rational(5)),
                  AdaptedProcess(horizon, 2, Rational(5)),
                  AdaptedProcess(horizon, 2, Rational(-2)),
                  AdaptedProcess(horizon, 2, Rational(-2)),
                  "flat",
                  std::nullopt};
    game.validate();
    const auto result = solve(game);
    CHECK(result.tau_star == StoppingTime::constant(2, 0));
    CHECK(result.theta_star == StoppingTime::constant(2, 0));
    CHECK(result.nu_star == StoppingTime::constant(2, 0));
  }
}

TEST_CASE("tau stopping at once forces theta to the horizon") {
  // after tau_n hits 0 everywhere, {tau_n > t} is empty for every t
  const auto game = game_s();
  IterationState state = initial_state(game);
  state.tau = StoppingTime::constant(2, 0);
  state.nu = StoppingTime::constant(2, 1);
  const auto next = iterate_once(game, state);
  CHECK(next.thetas.back() == StoppingTime::constant(2, game.horizon()));
}

TEST_CASE("stages are monotone, terminate within the bound, and stay measurable") {
  for (std::uint64_t seed = 2000; seed < 2080; ++seed) {
    const auto game = random_game(seed, 2 + static_cast<int>(seed % 6),
                                  1 + static_cast<int>(seed % 3), seed % 2 == 0);
    const auto result = solve(game);
    CHECK(result.iterations <= game.n_outcomes() * game.horizon() + 2);
    for (std::size_t k = 1; k < result.trace.size(); ++k) {
      const auto& prev = result.trace[k - 1];
      const auto& cur = result.trace[k];
      CHECK(pointwise_leq(cur.tau, prev.tau));
      CHECK(pointwise_leq(cur.nu, prev.nu));
      CHECK(is_stopping_time(cur.tau, game.f));
      CHECK(is_stopping_time(cur.thetas.back(), game.g));
      const auto aug = augment_filtration(game.g, prev.tau);
      CHECK(is_stopping_time(*cur.nu_tilde, aug.augmented));
      // nu mixes stages, so it is measurable for f and for g joined with the
      // whole tau history, though not for any single stage's augmentation
      CHECK(is_stopping_time(cur.nu, game.f));
      std::vector<Partition> joined;
      for (int t = 0; t <= game.horizon(); ++t) {
        Partition p = game.g.at(t);
        for (std::size_t m = 0; m < k; ++m) {
          p = common_refinement(
              p, augment_filtration(game.g, result.trace[m].tau).augmented.at(t));
        }
        joined.push_back(std::move(p));
      }
      CHECK(is_stopping_time(cur.nu, Filtration(std::move(joined))));
      // the pre-cap rule recomputes from the value-process side:
      // nu_tilde_{n+1} = theta_{n+1} min tau_n
      CHECK(*cur.nu_tilde == pointwise_min(cur.thetas.back(), prev.tau));
    }
    CHECK(is_stopping_time(result.nu_star, game.f));
  }
}

TEST_CASE("theta_star is the pointwise floor of the theta sequence") {
  for (std::uint64_t seed = 2100; seed < 2140; ++seed) {
    const auto game = random_game(seed, 4, 3);
    const auto result = solve(game);
    const auto& thetas = result.trace.back().thetas;
    for (Outcome w = 0; w < game.n_outcomes(); ++w) {
      int floor = thetas.front().at(w);
      for (const auto& theta : thetas) floor = std::min(floor, theta.at(w));
      CHECK(result.theta_star.at(w) == floor);
    }
    for (const auto& theta : thetas) CHECK(pointwise_leq(result.theta_star, theta));
  }
}

TEST_CASE("under x1 >= y1 the three limit rules are ordered") {
  for (std::uint64_t seed = 2200; seed < 2260; ++seed) {
    const auto game = random_game(seed, 2 + static_cast<int>(seed % 6),
                                  1 + static_cast<int>(seed % 4), true);
    const auto result = solve(game);
    CHECK(pointwise_leq(result.tau_star, result.theta_star));
    CHECK(pointwise_leq(result.theta_star, result.nu_star));
  }
}

TEST_CASE("the early-stop sets of nu_star and theta_star coincide") {
  SUBCASE("game-s: both empty, tau_star at 0 makes the check vacuous") {
    const auto game = game_s();
    const auto result = solve(game);
    REQUIRE(result.tau_star == StoppingTime::constant(2, 0));
    CHECK(check_corollary(game, result));
  }
  SUBCASE("random sweep, with and without the payoff-order condition") {
    for (std::uint64_t seed = 2300; seed < 2380; ++seed) {
      const auto game = random_game(seed, 2 + static_cast<int>(seed % 6),
                                    1 + static_cast<int>(seed % 3), seed % 3 == 0);
      CHECK(check_corollary(game, solve(game)));
    }
  }
}

TEST_CASE("both best-response inequalities hold at the limit pair (tau*, nu*)") {
  // symmetric information, x1 >= y1: the classical case
  for (std::uint64_t seed = 2400; seed < 2430; ++seed) {
    const auto game = random_game(seed, 4, 2, true, true);
    const auto result = solve(game);
    CHECK(best_response_1(game, result.nu_star).value ==
          j1(game, result.tau_star, result.nu_star));
    CHECK(best_response_2(game, result.tau_star).value ==
          j2(game, result.tau_star, result.nu_star));
  }
}
