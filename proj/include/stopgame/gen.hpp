#pragma once

#include "stopgame/game.hpp"

#include <cstdint>
#include <random>

namespace stopgame {

struct GenOptions {
  std::uint64_t seed = 0;
  int outcomes = 2;
  int horizon = 1;
  bool ensure_condition9 = false;  // force x1 := max(x1, y1)
  bool symmetric = false;          // set g := f
};

// Deterministic in the seed: probabilities from small positive integer
// weights, a filtration built by random cell splits per step, a coarsening of
// it for player 2, and payoffs from a small grid of rationals.
GameSpec generate_game(const GenOptions& options);

// Uniform draw from the stopping times of the filtration valued in
// [from_t, T]: stop at a node with probability 1 over the count of rules
// rooted there, else recurse into the children independently.
StoppingTime random_stopping_time(const Filtration& filtration, int from_t,
                                  std::mt19937_64& rng);

// Uniform integer in [0, n) from raw 64-bit draws (rejection sampling), so
// results do not depend on the standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace stopgame
