#pragma once

#include "stopgame/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stopgame {

// Outcomes are indices into the sample space's id list.
using Outcome = int;

// A set of outcomes, kept sorted and duplicate-free.
using Event = std::vector<Outcome>;

Event event_intersect(const Event& a, const Event& b);
bool event_subset(const Event& a, const Event& b);

// Finite sample space with strictly positive rational probabilities that sum
// to exactly 1. Requiring positive mass on every outcome turns "almost sure"
// statements into pointwise ones, which is what makes exhaustive checking of
// the equilibrium constructions possible.
class SampleSpace {
 public:
  SampleSpace(std::vector<std::string> ids, std::vector<Rational> probs);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(Outcome w) const { return ids_.at(w); }
  std::optional<Outcome> index_of(const std::string& id) const;
  const Rational& prob(Outcome w) const { return probs_.at(w); }
  const std::vector<Rational>& probs() const { return probs_; }
  Rational prob_of(const Event& event) const;

  friend bool operator==(const SampleSpace& a, const SampleSpace& b) {
    return a.ids_ == b.ids_ && a.probs_ == b.probs_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Rational> probs_;
};

// A partition of the outcome set into disjoint nonempty cells. Stored in
// canonical form (each cell sorted, cells ordered by smallest member), so
// equality of partitions and of the filtrations built from them is syntactic.
class Partition {
 public:
  Partition(std::vector<Event> cells, int n_outcomes);

  static Partition trivial(int n_outcomes);
  static Partition singletons(int n_outcomes);
  // Groups outcomes by label; outcomes with equal labels share a cell.
  static Partition from_labels(const std::vector<long long>& labels);

  int n_outcomes() const { return static_cast<int>(cell_of_.size()); }
  int n_cells() const { return static_cast<int>(cells_.size()); }
  const std::vector<Event>& cells() const { return cells_; }
  const Event& cell(int index) const { return cells_.at(index); }
  int cell_index_of(Outcome w) const { return cell_of_.at(w); }
  const Event& cell_containing(Outcome w) const { return cells_[cell_of_.at(w)]; }

  // True iff every cell of *this is contained in some cell of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.cells_ == b.cells_;
  }

 private:
  std::vector<Event> cells_;
  std::vector<int> cell_of_;
};

Partition common_refinement(const Partition& a, const Partition& b);

// A filtration indexed by t = 0..T: partitions that refine as t grows.
// Refinement of consecutive steps is validated at construction.
class Filtration {
 public:
  explicit Filtration(std::vector<Partition> parts);

  static Filtration trivial(int n_outcomes, int horizon);
  static Filtration singletons(int n_outcomes, int horizon);

  int horizon() const { return static_cast<int>(parts_.size()) - 1; }
  int n_outcomes() const { return parts_.front().n_outcomes(); }
  const Partition& at(int t) const { return parts_.at(t); }
  const std::vector<Partition>& parts() const { return parts_; }

  friend bool operator==(const Filtration& a, const Filtration& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Partition> parts_;
};

// True iff fine refines coarse at every time, i.e. coarse's information is
// contained in fine's. Throws on horizon mismatch.
bool refines(const Filtration& fine, const Filtration& coarse);

// The measure P(. | event): base probabilities renormalized on the event and
// zero outside it. The event must be nonempty (positive outcome probabilities
// make nonempty equivalent to positive mass).
class ConditionalMeasure {
 public:
  ConditionalMeasure(const SampleSpace& base, Event event);

  const Event& event() const { return event_; }
  const std::vector<Rational>& probs() const { return probs_; }

 private:
  Event event_;
  std::vector<Rational> probs_;
};

// A time-by-outcome matrix of rationals. Adaptedness to a filtration (values
// at t constant on every time-t cell) is a per-use contract checked by
// is_adapted; the matrix itself carries no filtration.
struct AdaptedProcess {
  std::vector<std::vector<Rational>> values;  // [t][outcome]

  AdaptedProcess() = default;
  AdaptedProcess(int horizon, int n_outcomes, const Rational& fill = Rational(0));

  int horizon() const { return static_cast<int>(values.size()) - 1; }
  int n_outcomes() const { return static_cast<int>(values.front().size()); }
  const Rational& at(int t, Outcome w) const { return values.at(t).at(w); }
  Rational& at(int t, Outcome w) { return values.at(t).at(w); }

  friend bool operator==(const AdaptedProcess& a, const AdaptedProcess& b) {
    return a.values == b.values;
  }
};

bool is_adapted(const AdaptedProcess& process, const Filtration& filtration);
// Smallest t at which the process is not constant on some time-t cell.
std::optional<int> first_non_adapted_time(const AdaptedProcess& process,
                                          const Filtration& filtration);

// An outcome -> time map. Whether it is a stopping time is a property
// relative to a filtration, checked by is_stopping_time.
struct StoppingTime {
  std::vector<int> times;

  StoppingTime() = default;
  explicit StoppingTime(std::vector<int> t) : times(std::move(t)) {}
  static StoppingTime constant(int n_outcomes, int t);

  int at(Outcome w) const { return times.at(w); }
  int n_outcomes() const { return static_cast<int>(times.size()); }

  friend bool operator==(const StoppingTime& a, const StoppingTime& b) {
    return a.times == b.times;
  }
};

bool pointwise_leq(const StoppingTime& a, const StoppingTime& b);
StoppingTime pointwise_min(const StoppingTime& a, const StoppingTime& b);

// True iff {rule <= t} is a union of time-t cells for every t. Values outside
// [0, horizon] throw std::invalid_argument.
bool is_stopping_time(const StoppingTime& rule, const Filtration& filtration);

// E[f | partition] under the given weights: on each cell of positive mass the
// weighted average, replicated across the cell. A zero-mass cell throws
// std::domain_error; use the _or_inf variant to fill such cells with
// +infinity instead.
std::vector<Rational> conditional_expectation(const std::vector<Rational>& f,
                                              const Partition& partition,
                                              const std::vector<Rational>& weights);
std::vector<ExtRational> conditional_expectation_or_inf(
    const std::vector<Rational>& f, const Partition& partition,
    const std::vector<Rational>& weights);

// Number of stopping times of the filtration taking values in [from_t, T].
// Per cell: N(cell at T) = 1, N(cell at t) = 1 + prod over children of N.
Integer count_stopping_times(const Filtration& filtration, int from_t);

// Visits every stopping time valued in [from_t, T] exactly once. The visitor
// receives a reference that is only valid during the call.
void for_each_stopping_time(const Filtration& filtration, int from_t,
                            const std::function<void(const StoppingTime&)>& visit);

std::vector<StoppingTime> enumerate_stopping_times(const Filtration& filtration,
                                                   int from_t);

}  // namespace stopgame
