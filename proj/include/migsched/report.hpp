#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "migsched/rational.hpp"
#include "migsched/schedule.hpp"

namespace migsched {

struct RunOptions {
  /// false runs the algorithm over binary doubles; invariant checks are then
  /// recorded instead of thrown, since rounding can break exact thresholds.
  bool exact = true;
  /// Throw InvariantViolation on the first failed check instead of recording.
  bool strict = true;
};

struct RunReport {
  std::string alg;
  std::size_t m = 0;
  std::size_t n = 0;
  bool exact = true;
  Rational makespan;
  /// The algorithm's own online lower bound L_n.
  Rational lower_bound;
  std::optional<Rational> opt;
  Rational ratio_vs_lb;
  std::optional<Rational> ratio_vs_opt;
  /// Guaranteed ratio against OPT: alpha_m, c, or 2 - 1/m.
  Rational competitive_bound;
  std::size_t migrations = 0;
  std::vector<std::size_t> per_machine_removals;
  /// Largest total of a reassigned pair set (ALG(alpha_m) only).
  std::optional<Rational> largest_pair;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  std::vector<Event> events;

  bool ok() const { return violations.empty(); }
};

/// makespan / bound, with 0/0 read as 1.
Rational safe_ratio(const Rational& makespan, const Rational& bound);

/// Fills opt and ratio_vs_opt.
void attach_opt(RunReport& report, const Rational& opt);

}  // namespace migsched
