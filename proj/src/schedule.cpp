#include "migsched/schedule.hpp"

#include <numeric>

namespace migsched {

void validate(const Instance& instance) {
  if (instance.m < 2) throw std::invalid_argument("instance needs m >= 2");
  for (std::size_t i = 0; i < instance.jobs.size(); ++i) {
    const Job& job = instance.jobs[i];
    if (job.id != i + 1) {
      throw std::invalid_argument("job ids must be 1..n in arrival order");
    }
    if (job.p < 0) {
      throw std::invalid_argument("job " + std::to_string(job.id) + " has negative size");
    }
  }
}

Instance make_instance(std::size_t m, std::span<const Rational> sizes) {
  Instance instance;
  instance.m = m;
  instance.jobs.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) instance.jobs.push_back({i + 1, sizes[i]});
  return instance;
}

std::vector<std::size_t> machine_range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> out;
  if (last < first) return out;
  out.resize(last - first + 1);
  std::iota(out.begin(), out.end(), first);
  return out;
}

ScheduleState<Rational> replay_events(const Instance& instance, std::span<const Event> events) {
  ScheduleState<Rational> state(instance.m);
  std::vector<std::size_t> where(instance.size() + 1, 0);
  for (const Event& event : events) {
    if (event.job == 0 || event.job > instance.size()) {
      throw std::invalid_argument("event references unknown job " + std::to_string(event.job));
    }
    if (event.to == 0 || event.to > instance.m) {
      throw std::invalid_argument("event references unknown machine " + std::to_string(event.to));
    }
    const Job& job = instance.jobs[event.job - 1];
    if (event.kind == Event::Kind::assign) {
      if (where[job.id] != 0) {
        throw std::invalid_argument("job " + std::to_string(job.id) + " assigned twice");
      }
      state.assign(job, event.to);
    } else {
      if (where[job.id] != event.from) {
        throw std::invalid_argument("job " + std::to_string(job.id) + " is not on machine " +
                                    std::to_string(event.from));
      }
      state.place_migrated(state.detach(event.from, job.id), event.from, event.to);
    }
    where[job.id] = event.to;
  }
  return state;
}

}  // namespace migsched
