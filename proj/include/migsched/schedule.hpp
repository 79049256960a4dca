#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "migsched/rational.hpp"

namespace migsched {

template <class Scalar>
struct BasicJob {
  std::size_t id = 0;  // 1-based arrival index
  Scalar p{};
};

using Job = BasicJob<Rational>;

struct Instance {
  std::size_t m = 0;
  std::vector<Job> jobs;

  std::size_t size() const { return jobs.size(); }
};

/// Throws std::invalid_argument unless m >= 2, ids are 1..n in order and
/// every processing time is nonnegative.
void validate(const Instance& instance);

/// Builds an instance from processing times, numbering jobs 1..n.
Instance make_instance(std::size_t m, std::span<const Rational> sizes);

template <class Scalar>
std::vector<BasicJob<Scalar>> convert_jobs(std::span<const Job> jobs) {
  std::vector<BasicJob<Scalar>> out;
  out.reserve(jobs.size());
  for (const Job& job : jobs) out.push_back({job.id, ScalarTraits<Scalar>::from_rational(job.p)});
  return out;
}

template <class Scalar>
struct MachineState {
  std::size_t index = 0;  // 1-based
  std::vector<BasicJob<Scalar>> jobs;
  Scalar load{};

  void add(const BasicJob<Scalar>& job) {
    jobs.push_back(job);
    load += job.p;
  }

  /// Largest processing time, ties broken towards the larger id.
  BasicJob<Scalar> remove_largest() {
    if (jobs.empty()) throw std::logic_error("remove_largest on empty machine");
    auto it = std::max_element(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
      return a.p < b.p || (a.p == b.p && a.id < b.id);
    });
    BasicJob<Scalar> job = *it;
    jobs.erase(it);
    load -= job.p;
    return job;
  }

  BasicJob<Scalar> remove(std::size_t id) {
    auto it = std::find_if(jobs.begin(), jobs.end(), [id](const auto& j) { return j.id == id; });
    if (it == jobs.end()) {
      throw std::logic_error("job " + std::to_string(id) + " not on machine " +
                             std::to_string(index));
    }
    BasicJob<Scalar> job = *it;
    jobs.erase(it);
    load -= job.p;
    return job;
  }
};

struct Event {
  enum class Kind { assign, migrate };
  Kind kind = Kind::assign;
  std::size_t job = 0;
  std::size_t from = 0;  // 0 for assign
  std::size_t to = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Per-machine job multisets plus the ordered assignment/migration log.
template <class Scalar>
class ScheduleState {
 public:
  explicit ScheduleState(std::size_t m) : machines_(m) {
    if (m == 0) throw std::invalid_argument("schedule needs at least one machine");
    for (std::size_t j = 0; j < m; ++j) machines_[j].index = j + 1;
  }

  std::size_t machine_count() const { return machines_.size(); }
  std::span<const MachineState<Scalar>> machines() const { return machines_; }
  const MachineState<Scalar>& machine(std::size_t index) const { return machines_.at(index - 1); }
  const Scalar& load(std::size_t index) const { return machine(index).load; }
  const std::vector<Event>& events() const { return events_; }

  void assign(const BasicJob<Scalar>& job, std::size_t to) {
    slot(to).add(job);
    events_.push_back({Event::Kind::assign, job.id, 0, to});
  }

  /// Detaches the largest job; the move is logged once it is placed again.
  BasicJob<Scalar> remove_largest(std::size_t from) { return slot(from).remove_largest(); }

  BasicJob<Scalar> detach(std::size_t from, std::size_t id) { return slot(from).remove(id); }

  void place_migrated(const BasicJob<Scalar>& job, std::size_t from, std::size_t to) {
    slot(to).add(job);
    events_.push_back({Event::Kind::migrate, job.id, from, to});
  }

  Scalar makespan() const {
    Scalar best{};
    for (const auto& machine : machines_) {
      if (machine.load > best) best = machine.load;
    }
    return best;
  }

  std::vector<Scalar> loads() const {
    std::vector<Scalar> out;
    out.reserve(machines_.size());
    for (const auto& machine : machines_) out.push_back(machine.load);
    return out;
  }

  std::size_t migration_count() const {
    return static_cast<std::size_t>(std::count_if(events_.begin(), events_.end(), [](const Event& e) {
      return e.kind == Event::Kind::migrate;
    }));
  }

 private:
  MachineState<Scalar>& slot(std::size_t index) {
    if (index == 0 || index > machines_.size()) {
      throw std::out_of_range("machine index " + std::to_string(index));
    }
    return machines_[index - 1];
  }

  std::vector<MachineState<Scalar>> machines_;
  std::vector<Event> events_;
};

/// Load of the jobs on `machine` whose processing time is at most `threshold`.
template <class Scalar>
Scalar small_load(const MachineState<Scalar>& machine, const Scalar& threshold) {
  Scalar sum{};
  for (const auto& job : machine.jobs) {
    if (job.p <= threshold) sum += job.p;
  }
  return sum;
}

/// Minimum-load machine among `subset`, ties to the smallest index.
template <class Scalar>
std::size_t least_loaded(const ScheduleState<Scalar>& state, std::span<const std::size_t> subset) {
  if (subset.empty()) throw std::invalid_argument("least_loaded over an empty machine set");
  std::size_t best = 0;
  for (std::size_t index : subset) {
    if (best == 0 || state.load(index) < state.load(best) ||
        (state.load(index) == state.load(best) && index < best)) {
      best = index;
    }
  }
  return best;
}

template <class Scalar>
std::size_t least_loaded(const ScheduleState<Scalar>& state) {
  std::size_t best = 1;
  for (std::size_t index = 2; index <= state.machine_count(); ++index) {
    if (state.load(index) < state.load(best)) best = index;
  }
  return best;
}

/// Machine indices first..last inclusive.
std::vector<std::size_t> machine_range(std::size_t first, std::size_t last);

/// Rebuilds machine contents from an event log. Throws std::invalid_argument
/// on events that reference unknown jobs or machines, or move a job from a
/// machine that does not hold it.
ScheduleState<Rational> replay_events(const Instance& instance, std::span<const Event> events);

/// Jobs of each machine sorted by id; handy for comparing two schedules.
template <class Scalar>
std::vector<std::vector<std::size_t>> machine_contents(const ScheduleState<Scalar>& state) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& machine : state.machines()) {
    std::vector<std::size_t> ids;
    for (const auto& job : machine.jobs) ids.push_back(job.id);
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace migsched
