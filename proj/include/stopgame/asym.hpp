#pragma once

#include "stopgame/game.hpp"
#include "stopgame/snell.hpp"

namespace stopgame {

// Player 2's filtration enriched, at every time t, with the running knowledge
// of whether (and when) player 1's rule tau has already stopped. Each time-t
// partition is the common refinement of the base partition with
// {{tau=0}, ..., {tau=t}, {tau>t}} (empty pieces dropped).
struct AugmentedFiltration {
  Filtration base;
  StoppingTime tau;
  Filtration augmented;
};

// Throws on dimension mismatch or tau values outside [0, horizon].
AugmentedFiltration augment_filtration(const Filtration& base, const StoppingTime& tau);

// Player 2's effective reward once player 1 commits to tau:
// x2_t before tau, frozen at y2_{tau} from tau on. Adapted to the augmented
// filtration.
AdaptedProcess p2_reward_process(const GameSpec& game, const StoppingTime& tau);

// Snell envelope of p2_reward_process on the augmented filtration under the
// full measure. Stopping at nu >= tau yields y2_tau regardless, so this
// envelope equals the ess sup of E[x2_nu 1{nu<tau} + y2_tau 1{tau<=nu} | .]
// over augmented stopping times from each t.
EnvelopeResult p2_reward_envelope(const GameSpec& game, const StoppingTime& tau);

// Player 2's continuation value seen through their own (un-augmented)
// information: on each time-t cell that meets {tau > t}, the envelope value
// there (constant by the information-reduction theorem); +infinity on cells
// that miss {tau > t}, so the stopping trigger "value == x2" can never fire
// where the conditional value is undefined.
struct ValueProcess {
  std::vector<std::vector<ExtRational>> values;  // [t][outcome]
  const ExtRational& at(int t, Outcome w) const { return values.at(t).at(w); }
};

ValueProcess p2_value_process(const GameSpec& game, const StoppingTime& tau);
ValueProcess p2_value_process(const GameSpec& game, const StoppingTime& tau,
                              const EnvelopeResult& p2_envelope);

// Rebuilds the augmented-optimal rule as a plain g-stopping time from from_t.
// For u = from_t..T-1, collect the time-u cells whose {tau>u} part lies in the
// stop region of the minimal augmented rule from u; stop at the first u at
// which the cell qualifies, and at T otherwise. The result agrees with the
// augmented rule on {tau>u} for every u and attains the same value: knowing
// whether player 1 already stopped buys player 2 nothing.
StoppingTime strip_tau_information(const GameSpec& game, const StoppingTime& tau, int from_t);
StoppingTime strip_tau_information(const GameSpec& game, const StoppingTime& tau, int from_t,
                                   const EnvelopeResult& p2_envelope);

}  // namespace stopgame
