#pragma once

#include "stopgame/game.hpp"
#include "stopgame/snell.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace stopgame {

// Expected payoff of player 1 under (tau, nu): x1 at tau where tau <= nu
// (priority in stopping), y1 at nu where nu < tau. Pure pointwise evaluation;
// no measurability demanded, so diagnostics may pass arbitrary maps.
Rational j1(const GameSpec& game, const StoppingTime& tau, const StoppingTime& nu);

// Expected payoff of player 2: x2 at nu where nu < tau, y2 at tau where
// tau <= nu (the complementary split of the same tie).
Rational j2(const GameSpec& game, const StoppingTime& tau, const StoppingTime& nu);

struct BestResponse {
  StoppingTime rule;  // the minimal attainer
  Rational value;
};

// max over f-stopping times tau of j1(tau, nu), via the Snell envelope of
// x1 truncated at nu (x1_t on {t <= nu}, y1_nu after). nu must be measurable
// for some filtration that f refines.
BestResponse best_response_1(const GameSpec& game, const StoppingTime& nu);

// max over g-stopping times nu of j2(tau, nu). Player 2's raw reward is not
// g-adapted, so it is first projected: Z_t = E[x2_t 1{tau>t} + y2_tau
// 1{tau<=t} | time-t g-cells], which has the same expectation at every
// g-stopping time; then the Snell envelope of Z on g.
BestResponse best_response_2(const GameSpec& game, const StoppingTime& tau);

enum class VerifyMethod { kFastPath, kExhaustive };

std::string to_string(VerifyMethod method);

struct VerificationReport {
  Rational j1_achieved, j2_achieved;
  Rational j1_best, j2_best;
  // Present exactly when the corresponding strict improvement exists; always
  // the minimal attainer of the best-response problem.
  std::optional<StoppingTime> p1_deviation;
  std::optional<StoppingTime> p2_deviation;
  bool is_nash = false;
  VerifyMethod method = VerifyMethod::kFastPath;
};

// Certifies (tau, nu) as a pure-strategy Nash equilibrium. The fast path uses
// the best-response reductions above; the exhaustive method enumerates both
// strategy spaces outright and throws std::length_error when either space
// exceeds the cap.
VerificationReport verify_nash(const GameSpec& game, const StoppingTime& tau,
                               const StoppingTime& nu, VerifyMethod method,
                               std::uint64_t exhaustive_cap = 1u << 20);

// The same game with x1 shifted up by eps everywhere (eps > 0). An
// equilibrium of the shifted game is also one of the original when x1 >= y1.
GameSpec epsilon_game(const GameSpec& game, const Rational& eps);

}  // namespace stopgame
