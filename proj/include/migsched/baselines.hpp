#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

#include "migsched/bound_tracker.hpp"
#include "migsched/rational.hpp"
#include "migsched/report.hpp"
#include "migsched/schedule.hpp"

namespace migsched {

/// Graham's List: every job goes to a least loaded machine, no migration.
template <class Scalar>
class ListScheduler {
 public:
  explicit ListScheduler(std::size_t m) : state_(m), tracker_(m) {}

  void accept(const BasicJob<Scalar>& job) {
    tracker_.push(job.p);
    state_.assign(job, least_loaded(state_));
  }

  void finalize() {}

  const ScheduleState<Scalar>& state() const { return state_; }
  const BoundTrackerC<Scalar>& tracker() const { return tracker_; }

 private:
  ScheduleState<Scalar> state_;
  BoundTrackerC<Scalar> tracker_;
};

RunReport run_list(const Instance& instance, const RunOptions& options = {});

/// Offline longest-processing-time-first.
RunReport run_lpt(const Instance& instance);
Rational lpt_makespan(std::span<const Rational> sizes, std::size_t m);

class OracleGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n <= 22 unless MIGRATE_SCHED_ORACLE_GUARD says otherwise.
std::size_t default_oracle_guard();

/// Exact optimal makespan by branch and bound. Throws OracleGuardExceeded
/// when the instance has more jobs than `guard` (default_oracle_guard() if
/// unset).
Rational opt_makespan(const Instance& instance, std::optional<std::size_t> guard = std::nullopt);
Rational opt_makespan(std::span<const Rational> sizes, std::size_t m,
                      std::optional<std::size_t> guard = std::nullopt);

/// Makespan of the schedule that puts the i-th and (2m+1-i)-th largest of
/// at most 2m jobs on machine i. Optimal when every job exceeds OPT/3.
Rational pairing_opt(std::span<const Rational> sizes, std::size_t m);

}  // namespace migsched
