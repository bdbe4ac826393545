#include "stopgame/prob.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace stopgame {

Event event_intersect(const Event& a, const Event& b) {
  Event out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool event_subset(const Event& a, const Event& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SampleSpace::SampleSpace(std::vector<std::string> ids, std::vector<Rational> probs)
    : ids_(std::move(ids)), probs_(std::move(probs)) {
  if (ids_.empty()) throw std::invalid_argument("sample space must have at least one outcome");
  if (ids_.size() != probs_.size()) {
    throw std::invalid_argument("outcome/probability count mismatch");
  }
  std::set<std::string> seen;
  for (const auto& id : ids_) {
    if (!seen.insert(id).second) throw std::invalid_argument("duplicate outcome id '" + id + "'");
  }
  Rational total(0);
  for (const auto& p : probs_) {
    if (p <= 0) throw std::invalid_argument("outcome probabilities must be strictly positive");
    total += p;
  }
  if (total != 1) throw std::invalid_argument("probabilities must sum to 1");
}

std::optional<Outcome> SampleSpace::index_of(const std::string& id) const {
  for (int w = 0; w < size(); ++w) {
    if (ids_[w] == id) return w;
  }
  return std::nullopt;
}

Rational SampleSpace::prob_of(const Event& event) const {
  Rational total(0);
  for (Outcome w : event) total += probs_.at(w);
  return total;
}

Partition::Partition(std::vector<Event> cells, int n_outcomes) : cells_(std::move(cells)) {
  if (n_outcomes <= 0) throw std::invalid_argument("partition needs a positive outcome count");
  for (auto& cell : cells_) {
    if (cell.empty()) throw std::invalid_argument("partition cells must be nonempty");
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
  }
  std::sort(cells_.begin(), cells_.end(),
            [](const Event& a, const Event& b) { return a.front() < b.front(); });
  cell_of_.assign(n_outcomes, -1);
  for (int c = 0; c < n_cells(); ++c) {
    for (Outcome w : cells_[c]) {
      if (w < 0 || w >= n_outcomes) throw std::invalid_argument("outcome index out of range");
      if (cell_of_[w] != -1) throw std::invalid_argument("partition cells must be disjoint");
      cell_of_[w] = c;
    }
  }
  for (int w = 0; w < n_outcomes; ++w) {
    if (cell_of_[w] == -1) throw std::invalid_argument("partition cells must cover all outcomes");
  }
}

Partition Partition::trivial(int n_outcomes) {
  Event all(n_outcomes);
  for (int w = 0; w < n_outcomes; ++w) all[w] = w;
  return Partition({all}, n_outcomes);
}

Partition Partition::singletons(int n_outcomes) {
  std::vector<Event> cells;
  cells.reserve(n_outcomes);
  for (int w = 0; w < n_outcomes; ++w) cells.push_back({w});
  return Partition(std::move(cells), n_outcomes);
}

Partition Partition::from_labels(const std::vector<long long>& labels) {
  std::map<long long, Event> groups;
  for (int w = 0; w < static_cast<int>(labels.size()); ++w) groups[labels[w]].push_back(w);
  std::vector<Event> cells;
  cells.reserve(groups.size());
  for (auto& [label, members] : groups) cells.push_back(std::move(members));
  return Partition(std::move(cells), static_cast<int>(labels.size()));
}

bool Partition::refines(const Partition& coarser) const {
  if (n_outcomes() != coarser.n_outcomes()) return false;
  for (const Event& cell : cells_) {
    const int target = coarser.cell_index_of(cell.front());
    for (Outcome w : cell) {
      if (coarser.cell_index_of(w) != target) return false;
    }
  }
  return true;
}

Partition common_refinement(const Partition& a, const Partition& b) {
  if (a.n_outcomes() != b.n_outcomes()) {
    throw std::invalid_argument("common refinement of partitions over different spaces");
  }
  const int n = a.n_outcomes();
  std::vector<long long> labels(n);
  for (int w = 0; w < n; ++w) {
    labels[w] = static_cast<long long>(a.cell_index_of(w)) * n + b.cell_index_of(w);
  }
  return Partition::from_labels(labels);
}

Filtration::Filtration(std::vector<Partition> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) throw std::invalid_argument("filtration horizon must be at least 1");
  const int n = parts_.front().n_outcomes();
  for (const auto& p : parts_) {
    if (p.n_outcomes() != n) throw std::invalid_argument("filtration over inconsistent spaces");
  }
  for (std::size_t t = 0; t + 1 < parts_.size(); ++t) {
    if (!parts_[t + 1].refines(parts_[t])) {
      throw std::invalid_argument("filtration not refining at t=" + std::to_string(t + 1));
    }
  }
}

Filtration Filtration::trivial(int n_outcomes, int horizon) {
  return Filtration(std::vector<Partition>(horizon + 1, Partition::trivial(n_outcomes)));
}

Filtration Filtration::singletons(int n_outcomes, int horizon) {
  return Filtration(std::vector<Partition>(horizon + 1, Partition::singletons(n_outcomes)));
}

bool refines(const Filtration& fine, const Filtration& coarse) {
  if (fine.horizon() != coarse.horizon()) {
    throw std::invalid_argument("filtration horizon mismatch");
  }
  for (int t = 0; t <= fine.horizon(); ++t) {
    if (!fine.at(t).refines(coarse.at(t))) return false;
  }
  return true;
}

ConditionalMeasure::ConditionalMeasure(const SampleSpace& base, Event event)
    : event_(std::move(event)) {
  std::sort(event_.begin(), event_.end());
  event_.erase(std::unique(event_.begin(), event_.end()), event_.end());
  if (event_.empty()) throw std::invalid_argument("conditioning event must have positive mass");
  const Rational mass = base.prob_of(event_);
  probs_.assign(base.size(), Rational(0));
  for (Outcome w : event_) probs_[w] = base.prob(w) / mass;
}

AdaptedProcess::AdaptedProcess(int horizon, int n_outcomes, const Rational& fill) {
  if (horizon < 0 || n_outcomes <= 0) throw std::invalid_argument("bad process dimensions");
  values.assign(horizon + 1, std::vector<Rational>(n_outcomes, fill));
}

std::optional<int> first_non_adapted_time(const AdaptedProcess& process,
                                          const Filtration& filtration) {
  if (process.horizon() != filtration.horizon() ||
      process.n_outcomes() != filtration.n_outcomes()) {
    throw std::invalid_argument("process/filtration shape mismatch");
  }
  for (int t = 0; t <= filtration.horizon(); ++t) {
    for (const Event& cell : filtration.at(t).cells()) {
      const Rational& v = process.at(t, cell.front());
      for (Outcome w : cell) {
        if (process.at(t, w) != v) return t;
      }
    }
  }
  return std::nullopt;
}

bool is_adapted(const AdaptedProcess& process, const Filtration& filtration) {
  return !first_non_adapted_time(process, filtration).has_value();
}

StoppingTime StoppingTime::constant(int n_outcomes, int t) {
  return StoppingTime(std::vector<int>(n_outcomes, t));
}

bool pointwise_leq(const StoppingTime& a, const StoppingTime& b) {
  if (a.times.size() != b.times.size()) throw std::invalid_argument("stopping time size mismatch");
  for (std::size_t w = 0; w < a.times.size(); ++w) {
    if (a.times[w] > b.times[w]) return false;
  }
  return true;
}

StoppingTime pointwise_min(const StoppingTime& a, const StoppingTime& b) {
  if (a.times.size() != b.times.size()) throw std::invalid_argument("stopping time size mismatch");
  StoppingTime out = a;
  for (std::size_t w = 0; w < a.times.size(); ++w) {
    out.times[w] = std::min(a.times[w], b.times[w]);
  }
  return out;
}

bool is_stopping_time(const StoppingTime& rule, const Filtration& filtration) {
  const int T = filtration.horizon();
  if (rule.n_outcomes() != filtration.n_outcomes()) {
    throw std::invalid_argument("stopping time / filtration size mismatch");
  }
  for (int t : rule.times) {
    if (t < 0 || t > T) throw std::invalid_argument("stopping time value out of [0, T]");
  }
  // {rule <= t} is a union of time-t cells iff the indicator is cell-constant.
  for (int t = 0; t < T; ++t) {
    for (const Event& cell : filtration.at(t).cells()) {
      const bool stopped = rule.at(cell.front()) <= t;
      for (Outcome w : cell) {
        if ((rule.at(w) <= t) != stopped) return false;
      }
    }
  }
  return true;
}

std::vector<Rational> conditional_expectation(const std::vector<Rational>& f,
                                              const Partition& partition,
                                              const std::vector<Rational>& weights) {
  if (static_cast<int>(f.size()) != partition.n_outcomes() || f.size() != weights.size()) {
    throw std::invalid_argument("conditional expectation shape mismatch");
  }
  std::vector<Rational> out(f.size());
  for (const Event& cell : partition.cells()) {
    Rational mass(0), acc(0);
    for (Outcome w : cell) {
      mass += weights[w];
      acc += weights[w] * f[w];
    }
    if (mass == 0) {
      throw std::domain_error("conditional expectation on a zero-mass cell");
    }
    const Rational avg = acc / mass;
    for (Outcome w : cell) out[w] = avg;
  }
  return out;
}

std::vector<ExtRational> conditional_expectation_or_inf(const std::vector<Rational>& f,
                                                        const Partition& partition,
                                                        const std::vector<Rational>& weights) {
  if (static_cast<int>(f.size()) != partition.n_outcomes() || f.size() != weights.size()) {
    throw std::invalid_argument("conditional expectation shape mismatch");
  }
  std::vector<ExtRational> out(f.size());
  for (const Event& cell : partition.cells()) {
    Rational mass(0), acc(0);
    for (Outcome w : cell) {
      mass += weights[w];
      acc += weights[w] * f[w];
    }
    if (mass == 0) {
      for (Outcome w : cell) out[w] = ExtRational::infinity();
    } else {
      const ExtRational avg{acc / mass};
      for (Outcome w : cell) out[w] = avg;
    }
  }
  return out;
}

namespace {

// Cells of parts[t+1] contained in the given cell of parts[t]; well defined
// because consecutive partitions refine.
std::vector<int> child_cells(const Filtration& filtration, int t, int cell_index) {
  std::vector<int> children;
  const Partition& fine = filtration.at(t + 1);
  const Partition& coarse = filtration.at(t);
  for (int c = 0; c < fine.n_cells(); ++c) {
    if (coarse.cell_index_of(fine.cell(c).front()) == cell_index) children.push_back(c);
  }
  return children;
}

Integer count_on_cell(const Filtration& filtration, int t, int cell_index) {
  if (t == filtration.horizon()) return 1;
  Integer product(1);
  for (int child : child_cells(filtration, t, cell_index)) {
    product *= count_on_cell(filtration, t + 1, child);
  }
  return product + 1;
}

struct EnumerationContext {
  const Filtration* filtration;
  const std::function<void(const StoppingTime&)>* visit;
  std::vector<int> times;
  std::vector<std::pair<int, int>> pending;  // (t, cell index at t) awaiting a decision

  void run(std::size_t index) {
    if (index == pending.size()) {
      StoppingTime rule(times);
      (*visit)(rule);
      return;
    }
    const auto [t, cell_index] = pending[index];
    const Event& cell = filtration->at(t).cell(cell_index);
    for (Outcome w : cell) times[w] = t;
    run(index + 1);
    if (t < filtration->horizon()) {
      const std::size_t mark = pending.size();
      for (int child : child_cells(*filtration, t, cell_index)) {
        pending.emplace_back(t + 1, child);
      }
      run(index + 1);
      pending.resize(mark);
    }
  }
};

}  // namespace

Integer count_stopping_times(const Filtration& filtration, int from_t) {
  if (from_t < 0 || from_t > filtration.horizon()) {
    throw std::invalid_argument("enumeration start time out of range");
  }
  Integer total(1);
  for (int c = 0; c < filtration.at(from_t).n_cells(); ++c) {
    total *= count_on_cell(filtration, from_t, c);
  }
  return total;
}

void for_each_stopping_time(const Filtration& filtration, int from_t,
                            const std::function<void(const StoppingTime&)>& visit) {
  if (from_t < 0 || from_t > filtration.horizon()) {
    throw std::invalid_argument("enumeration start time out of range");
  }
  EnumerationContext ctx;
  ctx.filtration = &filtration;
  ctx.visit = &visit;
  ctx.times.assign(filtration.n_outcomes(), 0);
  for (int c = 0; c < filtration.at(from_t).n_cells(); ++c) ctx.pending.emplace_back(from_t, c);
  ctx.run(0);
}

std::vector<StoppingTime> enumerate_stopping_times(const Filtration& filtration, int from_t) {
  std::vector<StoppingTime> out;
  for_each_stopping_time(filtration, from_t,
                         [&out](const StoppingTime& rule) { out.push_back(rule); });
  return out;
}

}  // namespace stopgame
