#include <random>

#include "doctest.h"
#include "migsched/alg_budget.hpp"
#include "migsched/baselines.hpp"
#include "migsched/harness.hpp"

using namespace migsched;

TEST_CASE("machine split") {
  BudgetConfig c = make_budget_config(5, Rational(5, 3));
  CHECK(c.a == std::vector<std::size_t>{1, 2});
  CHECK(c.b == std::vector<std::size_t>{3, 4, 5});
  CHECK(*c.removal_cap() == 7);
  CHECK(*make_budget_config(2, Rational(7, 4)).removal_cap() == 4);
  CHECK_FALSE(make_budget_config(2, Rational(9, 5)).removal_cap().has_value());
  CHECK_THROWS_AS(make_budget_config(2, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(make_budget_config(2, Rational(5, 2)), std::invalid_argument);
}

TEST_CASE("two unit jobs with c = 5/3") {
  BudgetScheduler<Rational> s(make_budget_config(2, Rational(5, 3)));
  s.accept({1, 1});
  s.accept({2, 1});
  CHECK(s.state().load(1) == 2);
  CHECK(s.state().load(2) == 0);
  auto r = s.remove();
  CHECK(r.size() == 2);
  s.reassign(r);
  CHECK(s.state().load(1) == 1);
  CHECK(s.state().load(2) == 1);

  RunReport report = run_alg_c(make_instance(2, std::vector<Rational>{1, 1}), Rational(5, 3));
  CHECK(report.makespan == 1);
  CHECK(report.migrations == 2);
  CHECK(report.alg == "c=5/3");
}

TEST_CASE("c = 2 on the same jobs") {
  RunReport report = run_alg_c(make_instance(2, std::vector<Rational>{1, 1}), Rational(2));
  CHECK(report.makespan <= 2 * report.lower_bound);
}

TEST_CASE("c = 7/4 thresholds") {
  // L = 4 after the first job; 2 = 0.5 L is small and joins M_1 while its
  // small load stays within 0.75 L.
  BudgetScheduler<Rational> s(make_budget_config(2, Rational(7, 4)));
  s.accept({1, 4});
  CHECK(s.state().load(1) == 4);
  s.accept({2, 2});
  CHECK(s.state().load(1) == 6);
  // L = 17/4: 5/2 is large and M_1 sits above the 1.25 L gate, so it goes to B.
  s.accept({3, Rational(5, 2)});
  CHECK(s.tracker().lower_bound() == Rational(17, 4));
  CHECK(s.state().load(2) == Rational(5, 2));
}

TEST_CASE("zero job goes to M_1") {
  BudgetScheduler<Rational> s(make_budget_config(3, Rational(5, 3)));
  s.accept({1, 0});
  CHECK(s.state().machine(1).jobs.size() == 1);
}

TEST_CASE("random instances meet c times OPT and the migration budget") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    GenSpec spec;
    spec.m = bounded(rng, 2, 5);
    spec.n = bounded(rng, 1, 12);
    spec.seed = 7000 + trial;
    spec.params = {{"max", "40"}, {"den", "3"}};
    Instance instance = generate(spec);
    Rational opt = opt_makespan(instance);
    for (Rational c : {Rational(5, 3), Rational(7, 4), Rational(2)}) {
      RunReport r = run_alg_c(instance, c);
      CHECK(r.makespan <= c * opt);
      CHECK(r.migrations <= 4 * instance.m);
    }
  }
}
