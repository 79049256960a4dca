#include "migsched/alg_optimal.hpp"

namespace migsched {

namespace {

template <class Scalar>
RunReport run(const Instance& instance, bool strict) {
  using Traits = ScalarTraits<Scalar>;
  AlphaProfile profile = solve_alpha(instance.m);
  OptimalScheduler<Scalar> scheduler(profile, strict);
  for (const auto& job : convert_jobs<Scalar>(instance.jobs)) scheduler.accept(job);
  scheduler.finalize();

  RunReport report;
  report.alg = "opt";
  report.m = instance.m;
  report.n = instance.size();
  report.exact = Traits::exact;
  report.makespan = Traits::to_rational(scheduler.state().makespan());
  if (scheduler.tracker().count() > 0) {
    report.lower_bound = Traits::to_rational(scheduler.tracker().lower_bound());
  }
  report.ratio_vs_lb = safe_ratio(report.makespan, report.lower_bound);
  report.competitive_bound = profile.alpha;
  report.migrations = scheduler.migrations();
  report.per_machine_removals = scheduler.removals();
  if (!scheduler.pairs().empty()) {
    report.largest_pair = Traits::to_rational(scheduler.pairs().front().pi);
  }
  report.events = scheduler.state().events();
  report.violations = scheduler.log().violations();
  report.warnings = scheduler.log().warnings();

  long budget = profile.mu * static_cast<long>(instance.m);
  if (static_cast<long>(report.migrations) > budget) {
    report.violations.push_back("total_migrations: " + std::to_string(report.migrations) +
                                " > mu*m = " + std::to_string(budget));
    if (strict) throw InvariantViolation("total_migrations", report.violations.back());
  }
  return report;
}

}  // namespace

RunReport run_alg_opt(const Instance& instance, const RunOptions& options) {
  validate(instance);
  if (options.exact) return run<Rational>(instance, options.strict);
  return run<double>(instance, false);
}

}  // namespace migsched
