#pragma once

#include "stopgame/prob.hpp"

namespace stopgame {

// Snell envelope of a reward process: the smallest supermartingale dominating
// it, with the minimal optimal stopping rule from every start time.
struct EnvelopeResult {
  // envelope.at(t, w) = ess sup over stopping times valued in [t, T] of the
  // conditional expected reward, evaluated at w.
  AdaptedProcess envelope;
  // minimal_from[t](w) = min{s >= t : envelope_s(w) == reward_s(w)}; ties
  // between stopping and continuing resolve to stopping, so this is the
  // pointwise-smallest attainer.
  std::vector<StoppingTime> minimal_from;
};

// Backward induction: W_T = U_T, W_t = max(U_t, E[W_{t+1} | time-t cells]).
// The reward must be adapted to the filtration; a zero-mass cell under the
// given weights throws (the production callers all pass full-support
// measures).
EnvelopeResult snell_envelope(const AdaptedProcess& reward, const Filtration& filtration,
                              const std::vector<Rational>& weights);

// sum over outcomes of weight(w) * reward_{rule(w)}(w).
Rational value_of_stopping(const AdaptedProcess& reward, const StoppingTime& rule,
                           const std::vector<Rational>& weights);

}  // namespace stopgame
