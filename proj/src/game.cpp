#include "stopgame/game.hpp"

#include <stdexcept>
#include <string>

namespace stopgame {

bool GameSpec::condition9() const {
  for (int t = 0; t <= horizon(); ++t) {
    for (Outcome w = 0; w < n_outcomes(); ++w) {
      if (x1.at(t, w) < y1.at(t, w)) return false;
    }
  }
  return true;
}

void GameSpec::validate() const {
  const int n = space.size();
  if (f.n_outcomes() != n || g.n_outcomes() != n) {
    throw std::invalid_argument("filtrations defined over a different outcome set");
  }
  if (f.horizon() != g.horizon()) throw std::invalid_argument("filtration horizon mismatch");
  if (!refines(f, g)) {
    throw std::invalid_argument("player 2's filtration must be coarser than player 1's");
  }
  const struct {
    const char* label;
    const AdaptedProcess* process;
    const Filtration* filtration;
    const char* filtration_label;
  } checks[] = {
      {"X1", &x1, &f, "F"}, {"Y1", &y1, &f, "F"}, {"X2", &x2, &g, "G"}, {"Y2", &y2, &g, "G"}};
  for (const auto& c : checks) {
    if (c.process->horizon() != horizon() || c.process->n_outcomes() != n) {
      throw std::invalid_argument(std::string(c.label) + " has wrong dimensions");
    }
    if (const auto bad_t = first_non_adapted_time(*c.process, *c.filtration)) {
      throw std::invalid_argument(std::string(c.label) + " not " + c.filtration_label +
                                  "-adapted at t=" + std::to_string(*bad_t));
    }
  }
}

}  // namespace stopgame
