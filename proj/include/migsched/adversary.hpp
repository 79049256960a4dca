#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "migsched/online.hpp"
#include "migsched/rational.hpp"
#include "migsched/schedule.hpp"

namespace migsched {

struct AdversaryOutcome {
  std::string alg;
  std::size_t m = 0;
  std::size_t n_prime = 0;
  Rational eps_prime;
  /// Every job presented, in order.
  Instance sequence;
  /// Loads after the n' jobs of size m/n'.
  std::vector<Rational> phase1_loads;
  /// "overloaded" or "profile-gap(j0)".
  std::string branch;
  std::optional<std::size_t> j0;
  Rational alg_makespan;
  Rational opt_upper;
  Rational ratio_lb;
  std::size_t migrations = 0;
};

/// Plays the two-phase lower-bound game against `scheduler`, which must be
/// fresh and built for m machines. Requires n' >= m, m | n' and eps' > 0.
AdversaryOutcome play_adversary(OnlineScheduler& scheduler, std::size_t m, std::size_t n_prime,
                                const Rational& eps_prime);

struct AdversarySweep {
  std::vector<AdversaryOutcome> outcomes;
  /// ratio_lb never drops as n' grows through the list.
  bool non_decreasing = true;
};

AdversarySweep sweep_adversary(const SchedulerFactory& factory, std::size_t m,
                               const std::vector<std::size_t>& n_primes, const Rational& eps_prime);

std::string outcome_to_json(const AdversaryOutcome& outcome);

}  // namespace migsched
