#include "stopgame/snell.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stopgame {

EnvelopeResult snell_envelope(const AdaptedProcess& reward, const Filtration& filtration,
                              const std::vector<Rational>& weights) {
  if (const auto bad_t = first_non_adapted_time(reward, filtration)) {
    throw std::invalid_argument("reward process not adapted at t=" + std::to_string(*bad_t));
  }
  const int T = filtration.horizon();
  const int n = filtration.n_outcomes();

  EnvelopeResult result;
  result.envelope = AdaptedProcess(T, n);
  result.envelope.values[T] = reward.values[T];
  for (int t = T - 1; t >= 0; --t) {
    const std::vector<Rational> continuation =
        conditional_expectation(result.envelope.values[t + 1], filtration.at(t), weights);
    for (Outcome w = 0; w < n; ++w) {
      result.envelope.at(t, w) = std::max(reward.at(t, w), continuation[w]);
    }
  }

  result.minimal_from.reserve(T + 1);
  for (int t = 0; t <= T; ++t) {
    StoppingTime rule = StoppingTime::constant(n, T);
    for (Outcome w = 0; w < n; ++w) {
      for (int s = t; s <= T; ++s) {
        if (result.envelope.at(s, w) == reward.at(s, w)) {
          rule.times[w] = s;
          break;
        }
      }
    }
    result.minimal_from.push_back(std::move(rule));
  }
  return result;
}

Rational value_of_stopping(const AdaptedProcess& reward, const StoppingTime& rule,
                           const std::vector<Rational>& weights) {
  if (rule.n_outcomes() != reward.n_outcomes() ||
      rule.n_outcomes() != static_cast<int>(weights.size())) {
    throw std::invalid_argument("value_of_stopping shape mismatch");
  }
  Rational total(0);
  for (Outcome w = 0; w < rule.n_outcomes(); ++w) {
    total += weights[w] * reward.at(rule.at(w), w);
  }
  return total;
}

}  // namespace stopgame
