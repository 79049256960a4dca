#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "migsched/alpha_profile.hpp"
#include "migsched/bound_tracker.hpp"
#include "migsched/invariants.hpp"
#include "migsched/report.hpp"
#include "migsched/schedule.hpp"
#include "migsched/small_load_index.hpp"

namespace migsched {

enum class Phase { arrival, migrated };

template <class Scalar>
struct RemovedJob {
  BasicJob<Scalar> job;
  std::size_t from = 0;
};

/// One or two large removed jobs that are reassigned to the same machine.
template <class Scalar>
struct PairSet {
  std::vector<RemovedJob<Scalar>> jobs;
  Scalar pi{};
  std::size_t slot = 0;  // i before renumbering by pi
};

namespace detail {

template <class Scalar>
void sort_by_size_desc(std::vector<RemovedJob<Scalar>>& jobs) {
  std::stable_sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
    return a.job.p > b.job.p || (a.job.p == b.job.p && a.job.id < b.job.id);
  });
}

template <class Scalar>
std::string show(const Scalar& value) {
  if constexpr (ScalarTraits<Scalar>::exact) {
    return to_fraction(value);
  } else {
    return std::to_string(value);
  }
}

}  // namespace detail

/// Pairs large jobs sorted by non-increasing size: set i holds the i-th
/// largest and, if more than half as big, the (2m+1-i)-th largest. Sets come
/// back sorted by total size; `used` marks the jobs they took.
template <class Scalar>
std::vector<PairSet<Scalar>> pair_large_jobs(const std::vector<RemovedJob<Scalar>>& large, std::size_t m,
                                             std::vector<bool>* used = nullptr) {
  std::vector<bool> taken(large.size(), false);
  std::vector<PairSet<Scalar>> sets;
  for (std::size_t i = 1; i <= m && i <= large.size(); ++i) {
    PairSet<Scalar> set;
    set.slot = i;
    set.jobs.push_back(large[i - 1]);
    taken[i - 1] = true;
    std::size_t partner = 2 * m + 1 - i;
    if (partner <= large.size() && large[partner - 1].job.p * 2 > large[i - 1].job.p) {
      set.jobs.push_back(large[partner - 1]);
      taken[partner - 1] = true;
    }
    for (const auto& r : set.jobs) set.pi += r.job.p;
    sets.push_back(std::move(set));
  }
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.pi > b.pi; });
  if (used) *used = std::move(taken);
  return sets;
}

/// ALG(alpha_m): keeps the small-job load of machine j at most beta(j) L_t*
/// while jobs arrive, then removes and re-pairs the largest jobs.
template <class Scalar>
class OptimalScheduler {
 public:
  explicit OptimalScheduler(const AlphaProfile& profile, bool strict = true)
      : m_(profile.m),
        mu_(profile.mu),
        alpha_(ScalarTraits<Scalar>::from_rational(profile.alpha)),
        excess_(alpha_ - 1),
        state_(profile.m),
        tracker_(profile.m),
        index_(profile.m),
        removals_(profile.m, 0),
        log_(strict) {
    beta_.reserve(m_);
    for (const Rational& b : profile.beta) beta_.push_back(ScalarTraits<Scalar>::from_rational(b));
  }

  /// Arrival step for J_t. The tracker sees p_t before the job is classified.
  void accept(const BasicJob<Scalar>& job) {
    if (phase_ != Phase::arrival) throw std::logic_error("accept() after the migration phase");
    tracker_.push(job.p);
    Scalar bound = tracker_.lower_bound();
    if (bound < last_bound_) log_.fail("bound_monotone", "L_t decreased");
    last_bound_ = bound;

    Scalar threshold = excess_ * bound;
    index_.advance(threshold);
    Scalar lstar = tracker_.lstar(alpha_);
    bool small = job.p <= threshold;

    std::size_t large_now = index_.large_count() + (small ? 0 : 1);
    if (large_now > 2 * m_) {
      log_.fail("large_count", std::to_string(large_now) + " large jobs at t=" +
                                   std::to_string(tracker_.count()));
    }

    std::size_t profile_machine = 0;
    for (std::size_t j = 1; j <= m_; ++j) {
      Scalar cap = beta_[j - 1] * lstar;
      if (index_.small_load(j) <= cap) {
        profile_machine = j;
        break;
      }
    }
    if (profile_machine == 0) {
      log_.fail("profile_gap", "no machine with l_s(j,t) <= beta(j) L_t* at t=" +
                                      std::to_string(tracker_.count()));
    }

    std::size_t target = (small && profile_machine != 0) ? profile_machine : least_loaded(state_);
    state_.assign(job, target);
    index_.add(target, job.p);
  }

  /// Removal step: strips the largest jobs until l(j) <= max{beta(j) L*, (alpha-1) L}.
  std::vector<RemovedJob<Scalar>> remove() {
    if (phase_ != Phase::arrival) throw std::logic_error("migration phase already ran");
    phase_ = Phase::migrated;
    std::vector<RemovedJob<Scalar>> removed;
    if (tracker_.count() == 0) return removed;

    bound_ = tracker_.lower_bound();
    lstar_ = tracker_.lstar(alpha_);
    Scalar floor_cap = excess_ * bound_;
    Scalar alpha_bound = alpha_ * bound_;
    for (std::size_t j = 1; j <= m_; ++j) {
      Scalar profile_cap = beta_[j - 1] * lstar_;
      Scalar cap = profile_cap < floor_cap ? floor_cap : profile_cap;
      while (state_.load(j) > cap) {
        removed.push_back({state_.remove_largest(j), j});
        ++removals_[j - 1];
      }
      if (static_cast<long>(removals_[j - 1]) > mu_) {
        log_.fail("machine_removals", "machine " + std::to_string(j) + " lost " +
                                         std::to_string(removals_[j - 1]) + " jobs, mu=" +
                                         std::to_string(mu_));
      }
      if (state_.load(j) > alpha_bound) {
        log_.fail("removal_cap", "machine " + std::to_string(j) + " above alpha L after removal");
      }
    }
    return removed;
  }

  /// Reassignment step: pairs the large removed jobs, then places the rest.
  void reassign(std::vector<RemovedJob<Scalar>> removed) {
    if (phase_ != Phase::migrated) throw std::logic_error("reassign() before remove()");
    if (removed.empty()) return;

    Scalar threshold = excess_ * bound_;
    std::vector<RemovedJob<Scalar>> large, leftover;
    for (auto& r : removed) (r.job.p > threshold ? large : leftover).push_back(r);
    detail::sort_by_size_desc(large);
    if (large.size() > 2 * m_) {
      log_.fail("large_removed", std::to_string(large.size()) + " large removed jobs exceed 2m");
    }

    std::vector<bool> used;
    pairs_ = pair_large_jobs(large, m_, &used);

    Scalar alpha_bound = alpha_ * bound_;
    for (const auto& set : pairs_) {
      std::size_t target = least_loaded(state_);
      for (const auto& r : set.jobs) place(r, target);
      Scalar limit = excess_ * bound_ + set.pi;
      if (limit < alpha_bound) limit = alpha_bound;
      if (state_.load(target) > limit) {
        log_.fail("pair_placement", "machine " + std::to_string(target) +
                                        " exceeds max{alpha L, (alpha-1) L + pi}");
      }
    }

    for (std::size_t i = 0; i < large.size(); ++i) {
      if (!used[i]) leftover.push_back(large[i]);
    }
    detail::sort_by_size_desc(leftover);
    for (const auto& r : leftover) {
      std::size_t target = least_loaded(state_);
      place(r, target);
      if (r.job.p <= threshold && state_.load(target) > alpha_bound) {
        log_.fail("small_placement", "machine " + std::to_string(target) + " exceeds alpha L");
      }
    }
  }

  void finalize() { reassign(remove()); }

  std::size_t machines() const { return m_; }
  Phase phase() const { return phase_; }
  const ScheduleState<Scalar>& state() const { return state_; }
  const BoundTrackerOpt<Scalar>& tracker() const { return tracker_; }
  const std::vector<std::size_t>& removals() const { return removals_; }
  const std::vector<PairSet<Scalar>>& pairs() const { return pairs_; }
  const InvariantLog& log() const { return log_; }
  const Scalar& alpha() const { return alpha_; }
  long mu() const { return mu_; }

  std::size_t migrations() const {
    std::size_t total = 0;
    for (std::size_t r : removals_) total += r;
    return total;
  }

 private:
  void place(const RemovedJob<Scalar>& r, std::size_t target) {
    state_.place_migrated(r.job, r.from, target);
  }

  std::size_t m_;
  long mu_;
  Scalar alpha_;
  Scalar excess_;
  std::vector<Scalar> beta_;
  ScheduleState<Scalar> state_;
  BoundTrackerOpt<Scalar> tracker_;
  SmallLoadIndex<Scalar> index_;
  std::vector<std::size_t> removals_;
  std::vector<PairSet<Scalar>> pairs_;
  InvariantLog log_;
  Phase phase_ = Phase::arrival;
  Scalar last_bound_{};
  Scalar bound_{};
  Scalar lstar_{};
};

/// Runs ALG(alpha_m) over the whole instance.
RunReport run_alg_opt(const Instance& instance, const RunOptions& options = {});

}  // namespace migsched
