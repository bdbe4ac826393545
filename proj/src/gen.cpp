#include "stopgame/gen.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace stopgame {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive bounds
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

// Splits some cells of size >= 2 into two random nonempty parts.
Partition random_refinement(const Partition& p, std::mt19937_64& rng) {
  std::vector<Event> cells;
  for (const Event& cell : p.cells()) {
    if (cell.size() >= 2 && uniform_below(rng, 2) == 0) {
      Event shuffled = cell;
      shuffle_vec(shuffled, rng);
      const std::size_t cut = 1 + uniform_below(rng, shuffled.size() - 1);
      cells.emplace_back(shuffled.begin(), shuffled.begin() + cut);
      cells.emplace_back(shuffled.begin() + cut, shuffled.end());
    } else {
      cells.push_back(cell);
    }
  }
  return Partition(std::move(cells), p.n_outcomes());
}

// Randomly groups the given cells into merged cells.
std::vector<Event> random_grouping(const std::vector<Event>& cells, std::mt19937_64& rng) {
  std::vector<Event> groups;
  for (const Event& cell : cells) {
    const std::uint64_t pick = uniform_below(rng, groups.size() + 1);
    if (pick == groups.size()) {
      groups.push_back(cell);
    } else {
      groups[pick].insert(groups[pick].end(), cell.begin(), cell.end());
    }
  }
  return groups;
}

Rational random_payoff(std::mt19937_64& rng) {
  return Rational(rand_int(rng, -6, 6), rand_int(rng, 1, 3));
}

// Fills a process with one random value per (time, cell) of the filtration.
AdaptedProcess random_process(const Filtration& filtration, std::mt19937_64& rng) {
  AdaptedProcess process(filtration.horizon(), filtration.n_outcomes());
  for (int t = 0; t <= filtration.horizon(); ++t) {
    for (const Event& cell : filtration.at(t).cells()) {
      const Rational v = random_payoff(rng);
      for (Outcome w : cell) process.at(t, w) = v;
    }
  }
  return process;
}

}  // namespace

GameSpec generate_game(const GenOptions& options) {
  if (options.outcomes < 1) throw std::invalid_argument("need at least one outcome");
  if (options.horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  std::mt19937_64 rng(options.seed);
  const int n = options.outcomes;
  const int T = options.horizon;

  std::vector<std::string> ids;
  std::vector<Rational> probs;
  Integer total(0);
  std::vector<int> weights(n);
  for (int w = 0; w < n; ++w) {
    ids.push_back("w" + std::to_string(w));
    weights[w] = rand_int(rng, 1, 6);
    total += weights[w];
  }
  for (int w = 0; w < n; ++w) probs.emplace_back(Integer(weights[w]), total);
  SampleSpace space(std::move(ids), std::move(probs));

  // Player 1's information: occasionally a nontrivial start, then random
  // splits per step.
  std::vector<Partition> f_parts;
  f_parts.push_back(uniform_below(rng, 4) == 0 ? random_refinement(Partition::trivial(n), rng)
                                               : Partition::trivial(n));
  for (int t = 1; t <= T; ++t) f_parts.push_back(random_refinement(f_parts.back(), rng));
  Filtration f(std::move(f_parts));

  Filtration g = f;
  if (!options.symmetric) {
    // Player 2's information: at each time, group the time-t cells of f
    // within each cell of the previous g-partition, so g both coarsens f and
    // refines over time.
    std::vector<Partition> g_parts;
    g_parts.emplace_back(random_grouping(f.at(0).cells(), rng), n);
    for (int t = 1; t <= T; ++t) {
      std::vector<Event> cells;
      for (int c = 0; c < g_parts.back().n_cells(); ++c) {
        std::vector<Event> inside;
        for (const Event& fine : f.at(t).cells()) {
          if (g_parts.back().cell_index_of(fine.front()) == c) inside.push_back(fine);
        }
        for (Event& merged : random_grouping(inside, rng)) cells.push_back(std::move(merged));
      }
      g_parts.emplace_back(std::move(cells), n);
    }
    g = Filtration(std::move(g_parts));
  }

  GameSpec game{std::move(space),
                std::move(f),
                std::move(g),
                AdaptedProcess(T, n),
                AdaptedProcess(T, n),
                AdaptedProcess(T, n),
                AdaptedProcess(T, n),
                "",
                options.seed};
  game.x1 = random_process(game.f, rng);
  game.y1 = random_process(game.f, rng);
  game.x2 = random_process(game.g, rng);
  game.y2 = random_process(game.g, rng);
  if (options.ensure_condition9) {
    for (int t = 0; t <= T; ++t) {
      for (Outcome w = 0; w < n; ++w) {
        game.x1.at(t, w) = std::max(game.x1.at(t, w), game.y1.at(t, w));
      }
    }
  }
  game.name = "gen-seed" + std::to_string(options.seed) + "-o" + std::to_string(n) + "-h" +
              std::to_string(T) + (options.ensure_condition9 ? "-c9" : "") +
              (options.symmetric ? "-sym" : "");
  game.validate();
  return game;
}

namespace {

std::uint64_t count_u64(const Filtration& filtration, int t, int cell_index) {
  if (t == filtration.horizon()) return 1;
  std::uint64_t product = 1;
  const Partition& fine = filtration.at(t + 1);
  for (int c = 0; c < fine.n_cells(); ++c) {
    if (filtration.at(t).cell_index_of(fine.cell(c).front()) != cell_index) continue;
    const std::uint64_t sub = count_u64(filtration, t + 1, c);
    if (sub != 0 && product > std::numeric_limits<std::uint64_t>::max() / sub) {
      throw std::length_error("stopping-time count overflows the sampler");
    }
    product *= sub;
  }
  return product + 1;
}

void sample_on_cell(const Filtration& filtration, int t, int cell_index, std::mt19937_64& rng,
                    std::vector<int>& times) {
  const Event& cell = filtration.at(t).cell(cell_index);
  if (t == filtration.horizon() || uniform_below(rng, count_u64(filtration, t, cell_index)) == 0) {
    for (Outcome w : cell) times[w] = t;
    return;
  }
  const Partition& fine = filtration.at(t + 1);
  for (int c = 0; c < fine.n_cells(); ++c) {
    if (filtration.at(t).cell_index_of(fine.cell(c).front()) == cell_index) {
      sample_on_cell(filtration, t + 1, c, rng, times);
    }
  }
}

}  // namespace

StoppingTime random_stopping_time(const Filtration& filtration, int from_t, std::mt19937_64& rng) {
  if (from_t < 0 || from_t > filtration.horizon()) {
    throw std::invalid_argument("sampling start time out of range");
  }
  std::vector<int> times(filtration.n_outcomes(), 0);
  for (int c = 0; c < filtration.at(from_t).n_cells(); ++c) {
    sample_on_cell(filtration, from_t, c, rng, times);
  }
  return StoppingTime(std::move(times));
}

}  // namespace stopgame
