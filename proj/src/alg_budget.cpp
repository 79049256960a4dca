#include "migsched/alg_budget.hpp"

namespace migsched {

std::optional<std::size_t> BudgetConfig::removal_cap() const {
  if (c == Rational(5, 3)) return 7;
  if (c == Rational(7, 4)) return 4;
  return std::nullopt;
}

BudgetConfig make_budget_config(std::size_t m, const Rational& c) {
  if (m < 2) throw std::invalid_argument("ALG(c) needs m >= 2");
  if (c < Rational(5, 3) || c > 2) {
    throw std::invalid_argument("ALG(c) is defined for 5/3 <= c <= 2, got " + to_fraction(c));
  }
  BudgetConfig config;
  config.c = c;
  config.m = m;
  config.a = machine_range(1, m / 2);
  config.b = machine_range(m / 2 + 1, m);
  return config;
}

namespace {

template <class Scalar>
RunReport run(const Instance& instance, const BudgetConfig& config, bool strict) {
  using Traits = ScalarTraits<Scalar>;
  BudgetScheduler<Scalar> scheduler(config, strict);
  for (const auto& job : convert_jobs<Scalar>(instance.jobs)) scheduler.accept(job);
  scheduler.finalize();

  RunReport report;
  report.alg = "c=" + to_fraction(config.c);
  report.m = instance.m;
  report.n = instance.size();
  report.exact = Traits::exact;
  report.makespan = Traits::to_rational(scheduler.state().makespan());
  if (scheduler.tracker().count() > 0) {
    report.lower_bound = Traits::to_rational(scheduler.tracker().lower_bound());
  }
  report.ratio_vs_lb = safe_ratio(report.makespan, report.lower_bound);
  report.competitive_bound = config.c;
  report.migrations = scheduler.migrations();
  report.per_machine_removals = scheduler.removals();
  report.events = scheduler.state().events();

  auto total = static_cast<long>(report.migrations);
  auto m = static_cast<long>(instance.m);
  std::string detail = std::to_string(total) + " migrations on m=" + std::to_string(m);
  if (config.c == Rational(5, 3)) {
    if (total > 4 * m) scheduler.log().fail("total_migrations", detail + " > 4m");
  } else if (config.c == Rational(7, 4)) {
    if (2 * total > 5 * m) scheduler.log().fail("total_migrations", detail + " > 2.5m");
  } else if (total > 4 * m) {
    scheduler.log().warn("family_migrations", detail + " > 4m");
  }

  report.violations = scheduler.log().violations();
  report.warnings = scheduler.log().warnings();
  return report;
}

}  // namespace

RunReport run_alg_c(const Instance& instance, const Rational& c, const RunOptions& options) {
  validate(instance);
  BudgetConfig config = make_budget_config(instance.m, c);
  if (options.exact) return run<Rational>(instance, config, options.strict);
  return run<double>(instance, config, false);
}

}  // namespace migsched
