#include "support/fixtures.hpp"

namespace stopgame::testing {

namespace {

AdaptedProcess deterministic(std::initializer_list<int> per_time, int n) {
  AdaptedProcess process(static_cast<int>(per_time.size()) - 1, n);
  int t = 0;
  for (int v : per_time) {
    for (Outcome w = 0; w < n; ++w) process.at(t, w) = v;
    ++t;
  }
  return process;
}

}  // namespace

GameSpec game_s() {
  AdaptedProcess x1(1, 2);
  x1.at(0, 0) = 2;
  x1.at(0, 1) = 2;
  x1.at(1, 0) = 4;
  x1.at(1, 1) = 0;
  GameSpec game{SampleSpace({"a", "b"}, {Rational(1, 2), Rational(1, 2)}),
                Filtration({Partition::trivial(2), Partition::singletons(2)}),
                Filtration::trivial(2, 1),
                std::move(x1),
                deterministic({0, 0}, 2),
                deterministic({0, 0}, 2),
                deterministic({1, 1}, 2),
                "game-s",
                std::nullopt};
  game.validate();
  return game;
}

GameSpec game_t() {
  GameSpec game{SampleSpace({"a", "b"}, {Rational(1, 2), Rational(1, 2)}),
                Filtration({Partition::trivial(2), Partition::singletons(2),
                            Partition::singletons(2)}),
                Filtration::trivial(2, 2),
                deterministic({0, 0, 0}, 2),
                deterministic({0, 0, 0}, 2),
                deterministic({0, 3, 0}, 2),
                deterministic({0, 0, 5}, 2),
                "game-t",
                std::nullopt};
  game.validate();
  return game;
}

StoppingTime game_t_tau() { return StoppingTime({1, 2}); }

}  // namespace stopgame::testing
