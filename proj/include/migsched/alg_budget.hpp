#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "migsched/alg_optimal.hpp"
#include "migsched/bound_tracker.hpp"
#include "migsched/invariants.hpp"
#include "migsched/report.hpp"
#include "migsched/schedule.hpp"
#include "migsched/small_load_index.hpp"

namespace migsched {

/// Target ratio c in [5/3, 2] and the A/B split: A = 1..floor(m/2) is
/// filled first, B = floor(m/2)+1..m is held back for migrated jobs.
struct BudgetConfig {
  Rational c;
  std::size_t m = 0;
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;

  /// Per-A-machine removal cap proven for this c, if any (7 for 5/3, 4 for 7/4).
  std::optional<std::size_t> removal_cap() const;
};

/// Throws std::invalid_argument for m < 2 or c outside [5/3, 2].
BudgetConfig make_budget_config(std::size_t m, const Rational& c);

/// ALG(c).
template <class Scalar>
class BudgetScheduler {
 public:
  BudgetScheduler(const BudgetConfig& config, bool strict = true)
      : config_(config),
        m_(config.m),
        c_(ScalarTraits<Scalar>::from_rational(config.c)),
        state_(config.m),
        tracker_(config.m),
        index_(config.m),
        last_job_(config.m, Scalar{}),
        removals_(config.m, 0),
        log_(strict) {}

  void accept(const BasicJob<Scalar>& job) {
    if (phase_ != Phase::arrival) throw std::logic_error("accept() after the migration phase");
    tracker_.push(job.p);
    Scalar bound = tracker_.lower_bound();
    if (bound < last_bound_) log_.fail("bound_monotone", "L_t decreased");
    last_bound_ = bound;

    Scalar threshold = (2 * c_ - 3) * bound;
    index_.advance(threshold);
    bool small = job.p <= threshold;

    std::size_t target = 0;
    if (small) {
      Scalar profile_cap = (c_ - 1) * bound;
      for (std::size_t j : config_.a) {
        if (index_.small_load(j) <= profile_cap &&
            (target == 0 || index_.small_load(j) < index_.small_load(target))) {
          target = j;
        }
      }
    } else {
      Scalar gate = (3 - c_) * bound;
      bool open = std::any_of(config_.a.begin(), config_.a.end(),
                              [&](std::size_t j) { return state_.load(j) <= gate; });
      if (open) target = least_loaded(state_, std::span<const std::size_t>(config_.a));
    }

    if (target == 0) {
      target = least_loaded(state_, std::span<const std::size_t>(config_.b));
      Scalar cap = (3 - c_) * bound;
      if (state_.load(target) > cap) {
        log_.fail("b_load_on_arrival", "machine " + std::to_string(target) + " above (3-c) L_t at t=" +
                                       std::to_string(tracker_.count()));
      }
    }
    state_.assign(job, target);
    index_.add(target, job.p);
    last_job_[target - 1] = job.p;
  }

  std::vector<RemovedJob<Scalar>> remove() {
    if (phase_ != Phase::arrival) throw std::logic_error("migration phase already ran");
    phase_ = Phase::migrated;
    std::vector<RemovedJob<Scalar>> removed;
    if (tracker_.count() == 0) return removed;
    bound_ = tracker_.lower_bound();
    check_b_loads();

    for (std::size_t j : config_.b) {
      if (state_.machine(j).jobs.empty()) continue;
      removed.push_back({state_.remove_largest(j), j});
      ++removals_[j - 1];
    }
    Scalar cap = (c_ - 1) * bound_;
    std::optional<std::size_t> limit = config_.removal_cap();
    for (std::size_t j : config_.a) {
      while (state_.load(j) > cap) {
        removed.push_back({state_.remove_largest(j), j});
        ++removals_[j - 1];
      }
      if (limit && removals_[j - 1] > *limit) {
        log_.fail("a_removals", "machine " + std::to_string(j) + " lost " +
                                    std::to_string(removals_[j - 1]) + " jobs, cap " +
                                    std::to_string(*limit));
      }
    }
    return removed;
  }

  void reassign(std::vector<RemovedJob<Scalar>> removed) {
    if (phase_ != Phase::migrated) throw std::logic_error("reassign() before remove()");
    detail::sort_by_size_desc(removed);
    Scalar cap = c_ * bound_;
    for (const auto& r : removed) {
      std::size_t target = 0;
      for (std::size_t j : config_.b) {
        if (state_.load(j) + r.job.p <= cap) {
          target = j;
          break;
        }
      }
      if (target == 0) target = least_loaded(state_, std::span<const std::size_t>(config_.a));
      state_.place_migrated(r.job, r.from, target);
      if (state_.load(target) > cap) {
        log_.fail("reassign_cap", "machine " + std::to_string(target) + " above c L");
      }
    }
  }

  void finalize() { reassign(remove()); }

  const BudgetConfig& config() const { return config_; }
  const ScheduleState<Scalar>& state() const { return state_; }
  const BoundTrackerC<Scalar>& tracker() const { return tracker_; }
  const std::vector<std::size_t>& removals() const { return removals_; }
  const InvariantLog& log() const { return log_; }
  InvariantLog& log() { return log_; }

  std::size_t migrations() const {
    std::size_t total = 0;
    for (std::size_t r : removals_) total += r;
    return total;
  }

 private:
  // If some A machine ends with little small-job load, every B machine is
  // within (c-1) L of its last job.
  void check_b_loads() {
    Scalar gap = (2 - c_) * bound_;
    bool light = std::any_of(config_.a.begin(), config_.a.end(),
                             [&](std::size_t j) { return index_.small_load(j) < gap; });
    if (!light) return;
    Scalar cap = (c_ - 1) * bound_;
    for (std::size_t j : config_.b) {
      if (state_.machine(j).jobs.empty()) continue;
      if (state_.load(j) - last_job_[j - 1] > cap) {
        log_.fail("b_load_before_removal", "machine " + std::to_string(j) + " minus its last job exceeds (c-1) L");
      }
    }
  }

  BudgetConfig config_;
  std::size_t m_;
  Scalar c_;
  ScheduleState<Scalar> state_;
  BoundTrackerC<Scalar> tracker_;
  SmallLoadIndex<Scalar> index_;
  std::vector<Scalar> last_job_;
  std::vector<std::size_t> removals_;
  InvariantLog log_;
  Phase phase_ = Phase::arrival;
  Scalar last_bound_{};
  Scalar bound_{};
};

/// Runs ALG(c). The preset ratios are 5/3 and 7/4.
RunReport run_alg_c(const Instance& instance, const Rational& c, const RunOptions& options = {});

}  // namespace migsched
