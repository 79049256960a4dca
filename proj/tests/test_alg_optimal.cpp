#include <random>

#include "doctest.h"
#include "migsched/alg_optimal.hpp"
#include "migsched/baselines.hpp"
#include "migsched/harness.hpp"

using namespace migsched;

namespace {

Instance jobs(std::size_t m, std::vector<Rational> sizes) { return make_instance(m, sizes); }

RemovedJob<Rational> removed(std::size_t id, long p) { return {{id, Rational(p)}, 1}; }

}  // namespace

TEST_CASE("arrival phase on two unit jobs") {
  OptimalScheduler<Rational> s(solve_alpha(2));
  s.accept({1, 1});
  CHECK(s.state().load(1) == 1);
  s.accept({2, 1});
  CHECK(s.state().load(2) == 1);

  auto r = s.remove();
  CHECK(r.size() == 2);
  CHECK(s.state().load(1) == 0);
  CHECK(s.state().load(2) == 0);
  s.reassign(r);
  CHECK(s.state().makespan() == 1);
  CHECK(s.pairs().size() == 2);
}

TEST_CASE("zero job goes to the first machine") {
  OptimalScheduler<Rational> s(solve_alpha(2));
  s.accept({1, 0});
  CHECK(s.state().machine(1).jobs.size() == 1);
}

TEST_CASE("a single large job on three machines") {
  OptimalScheduler<Rational> s(solve_alpha(3));
  s.accept({1, 3});
  CHECK(s.tracker().lower_bound() == 1);
  CHECK(s.state().load(1) == 3);
}

TEST_CASE("pairing rule") {
  std::vector<RemovedJob<Rational>> large{removed(1, 4), removed(2, 3), removed(3, 3), removed(4, 2)};
  std::vector<bool> used;
  auto sets = pair_large_jobs(large, 2, &used);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].pi == 6);
  CHECK(sets[0].jobs.size() == 2);
  CHECK(sets[0].slot == 2);
  CHECK(sets[1].pi == 4);
  CHECK(sets[1].jobs.size() == 1);
  CHECK(used == std::vector<bool>{true, true, true, false});
}

TEST_CASE("no removed jobs leaves the schedule alone") {
  OptimalScheduler<Rational> s(solve_alpha(2));
  for (std::size_t id = 1; id <= 3; ++id) s.accept({id, 0});
  auto r = s.remove();
  CHECK(r.empty());
  s.reassign(r);
  CHECK(s.migrations() == 0);
  CHECK(s.state().makespan() == 0);
  CHECK_THROWS_AS(s.remove(), std::logic_error);
}

TEST_CASE("run_alg_opt on (1,1)") {
  RunReport r = run_alg_opt(jobs(2, {1, 1}));
  CHECK(r.makespan == 1);
  CHECK(r.migrations == 2);
  CHECK(r.ratio_vs_lb == 1);
  CHECK(r.ok());
}

TEST_CASE("many tiny jobs") {
  std::vector<Rational> sizes(200, Rational(1, 200));
  RunReport r = run_alg_opt(make_instance(2, sizes));
  CHECK(r.makespan <= Rational(4, 3) * Rational(1, 2));
}

TEST_CASE("random instances stay within alpha times OPT and mu removals") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    GenSpec spec;
    spec.m = bounded(rng, 2, 5);
    spec.n = bounded(rng, 1, 12);
    spec.seed = trial;
    spec.params = {{"max", "30"}, {"den", "4"}};
    Instance instance = generate(spec);
    RunReport r = run_alg_opt(instance);
    AlphaProfile profile = solve_alpha(instance.m);
    CHECK(r.makespan <= profile.alpha * opt_makespan(instance));
    for (std::size_t removals : r.per_machine_removals) CHECK(static_cast<long>(removals) <= profile.mu);
  }
}

TEST_CASE("removal leaves every machine within its cap") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::shrinking_stress;
    spec.m = 2 + seed % 5;
    spec.n = 500;
    spec.seed = seed;
    Instance instance = generate(spec);
    AlphaProfile profile = solve_alpha(instance.m);
    OptimalScheduler<Rational> s(profile);
    for (const Job& job : instance.jobs) s.accept(job);
    Rational bound = s.tracker().lower_bound();
    Rational lstar = s.tracker().lstar(profile.alpha);
    auto r = s.remove();
    for (std::size_t j = 1; j <= instance.m; ++j) {
      Rational cap = std::max<Rational>(profile.beta_of(j) * lstar, (profile.alpha - 1) * bound);
      CHECK(s.state().load(j) <= cap);
    }
    s.reassign(r);
    std::size_t placed = 0;
    for (const auto& machine : s.state().machines()) placed += machine.jobs.size();
    CHECK(placed == instance.size());
  }
}

TEST_CASE("float mode records instead of throwing") {
  RunOptions options;
  options.exact = false;
  RunReport r = run_alg_opt(jobs(3, {1, 2, 3, 4, 5, 6, 7}), options);
  CHECK_FALSE(r.exact);
  CHECK(r.makespan > 0);
}

TEST_CASE("accept after the migration phase is an error") {
  OptimalScheduler<Rational> s(solve_alpha(2));
  s.accept({1, 1});
  s.finalize();
  CHECK_THROWS_AS(s.accept({2, 1}), std::logic_error);
}
