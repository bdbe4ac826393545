#pragma once

#include "stopgame/prob.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace stopgame {

// A two-player nonzero-sum stopping game on a finite space. Player 1 observes
// filtration f, player 2 the coarser filtration g. Payoffs:
//   x1: to player 1 when they stop first (or simultaneously),
//   y1: to player 1 when player 2 stops strictly first,
//   x2: to player 2 when they stop strictly first,
//   y2: to player 2 when player 1 stops first (or simultaneously).
// Player 1 has priority: a simultaneous stop pays as if player 1 stopped
// alone. x1, y1 are f-adapted; x2, y2 are g-adapted.
struct GameSpec {
  SampleSpace space;
  Filtration f;
  Filtration g;
  AdaptedProcess x1, y1, x2, y2;
  std::string name;
  std::optional<std::uint64_t> seed;

  int horizon() const { return f.horizon(); }
  int n_outcomes() const { return space.size(); }

  // x1 >= y1 everywhere: stopping is weakly preferable to being stopped for
  // player 1. Games violating this still solve, but carry no equilibrium
  // guarantee.
  bool condition9() const;

  // Throws std::invalid_argument on the first structural violation.
  void validate() const;
};

}  // namespace stopgame
