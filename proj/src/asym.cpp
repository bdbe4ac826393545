#include "stopgame/asym.hpp"

#include <stdexcept>
#include <string>

namespace stopgame {

AugmentedFiltration augment_filtration(const Filtration& base, const StoppingTime& tau) {
  const int T = base.horizon();
  const int n = base.n_outcomes();
  if (tau.n_outcomes() != n) throw std::invalid_argument("tau size mismatch");
  for (int t : tau.times) {
    if (t < 0 || t > T) throw std::invalid_argument("tau value out of [0, T]");
  }
  std::vector<Partition> parts;
  parts.reserve(T + 1);
  for (int t = 0; t <= T; ++t) {
    std::vector<long long> labels(n);
    for (Outcome w = 0; w < n; ++w) {
      // tau-knowledge at time t: the exact value if tau <= t, else "not yet".
      const long long tau_label = tau.at(w) <= t ? tau.at(w) : -1;
      labels[w] = static_cast<long long>(base.at(t).cell_index_of(w)) * (T + 2) + tau_label + 1;
    }
    parts.push_back(Partition::from_labels(labels));
  }
  // The Filtration constructor re-checks that the result refines in t.
  return AugmentedFiltration{base, tau, Filtration(std::move(parts))};
}

AdaptedProcess p2_reward_process(const GameSpec& game, const StoppingTime& tau) {
  const int T = game.horizon();
  const int n = game.n_outcomes();
  AdaptedProcess reward(T, n);
  for (int t = 0; t <= T; ++t) {
    for (Outcome w = 0; w < n; ++w) {
      reward.at(t, w) = t < tau.at(w) ? game.x2.at(t, w) : game.y2.at(tau.at(w), w);
    }
  }
  return reward;
}

EnvelopeResult p2_reward_envelope(const GameSpec& game, const StoppingTime& tau) {
  const AugmentedFiltration aug = augment_filtration(game.g, tau);
  return snell_envelope(p2_reward_process(game, tau), aug.augmented, game.space.probs());
}

ValueProcess p2_value_process(const GameSpec& game, const StoppingTime& tau) {
  return p2_value_process(game, tau, p2_reward_envelope(game, tau));
}

ValueProcess p2_value_process(const GameSpec& game, const StoppingTime& tau,
                              const EnvelopeResult& p2_envelope) {
  const int T = game.horizon();
  const int n = game.n_outcomes();
  ValueProcess value;
  value.values.assign(T + 1, std::vector<ExtRational>(n, ExtRational::infinity()));
  for (int t = 0; t <= T; ++t) {
    for (const Event& cell : game.g.at(t).cells()) {
      const ExtRational* common = nullptr;
      for (Outcome w : cell) {
        if (tau.at(w) <= t) continue;
        const ExtRational candidate{p2_envelope.envelope.at(t, w)};
        if (common == nullptr) {
          value.values[t][cell.front()] = candidate;
          common = &value.values[t][cell.front()];
        } else if (*common != candidate) {
          // The information-reduction theorem guarantees the envelope is
          // constant on cell-and-{tau>t}; non-constancy is a bug, never
          // something to average over.
          throw std::logic_error("p2 envelope not constant on a cell intersected with {tau>t} at t=" +
                                 std::to_string(t));
        }
      }
      if (common != nullptr) {
        for (Outcome w : cell) value.values[t][w] = *common;
      }
    }
  }
  return value;
}

StoppingTime strip_tau_information(const GameSpec& game, const StoppingTime& tau, int from_t) {
  return strip_tau_information(game, tau, from_t, p2_reward_envelope(game, tau));
}

StoppingTime strip_tau_information(const GameSpec& game, const StoppingTime& tau, int from_t,
                                   const EnvelopeResult& p2_envelope) {
  const int T = game.horizon();
  const int n = game.n_outcomes();
  if (from_t < 0 || from_t > T - 1) {
    throw std::invalid_argument("strip_tau_information start time must lie in [0, T-1]");
  }
  StoppingTime rule = StoppingTime::constant(n, T);
  std::vector<char> claimed(n, 0);  // union of qualifying unions over earlier u
  for (int u = from_t; u <= T - 1; ++u) {
    const StoppingTime& augmented_rule = p2_envelope.minimal_from[u];
    for (const Event& cell : game.g.at(u).cells()) {
      // The cell qualifies when its {tau>u} part is nonempty and lies in the
      // stop region {augmented_rule == u}. The augmented rule is constant on
      // that part, so a nonempty intersection is equivalent to containment.
      bool qualifies = false;
      for (Outcome w : cell) {
        if (tau.at(w) > u && augmented_rule.at(w) == u) {
          qualifies = true;
          break;
        }
      }
      if (!qualifies) continue;
      for (Outcome w : cell) {
        if (!claimed[w]) rule.times[w] = u;
      }
      for (Outcome w : cell) claimed[w] = 1;
    }
  }
  return rule;
}

}  // namespace stopgame
