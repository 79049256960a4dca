#include <random>
#include <sstream>

#include "doctest.h"
#include "migsched/bound_tracker.hpp"
#include "migsched/harness.hpp"
#include "migsched/instance_io.hpp"
#include "migsched/online.hpp"
#include "migsched/schedule.hpp"
#include "migsched/small_load_index.hpp"

using namespace migsched;

TEST_CASE("BoundTrackerOpt") {
  BoundTrackerOpt<Rational> t(2);
  CHECK_THROWS_AS(t.lower_bound(), std::logic_error);
  t.push(1);
  CHECK(t.lower_bound() == Rational(1, 2));
  for (int i = 0; i < 4; ++i) t.push(1);
  CHECK(t.lower_bound() == 3);

  BoundTrackerOpt<Rational> four(4);
  four.push(4);
  CHECK(four.lower_bound() == 1);

  BoundTrackerOpt<Rational> zero(2);
  zero.push(0);
  CHECK(zero.lower_bound() == 0);
  CHECK_THROWS_AS(zero.push(-1), std::invalid_argument);
}

TEST_CASE("BoundTrackerC") {
  BoundTrackerC<Rational> t(2);
  t.push(1);
  CHECK(t.lower_bound() == 1);
  BoundTrackerC<Rational> four(4);
  four.push(4);
  CHECK(four.lower_bound() == 4);
}

TEST_CASE("lstar ignores large jobs") {
  BoundTrackerOpt<Rational> a(2);
  a.push(1);
  a.push(1);
  CHECK(a.lower_bound() == 1);
  CHECK(a.lstar(Rational(4, 3)) == 0);

  BoundTrackerOpt<Rational> b(2);
  b.push(1);
  b.push(Rational(1, 4));
  CHECK(b.lower_bound() == Rational(5, 8));
  CHECK(b.lstar(Rational(4, 3)) == 0);

  BoundTrackerOpt<Rational> c(2);
  for (int i = 0; i < 8; ++i) c.push(1);
  // L = max(4, 3) = 4, threshold 4/3: nothing is large.
  CHECK(c.lstar(Rational(4, 3)) == 4);
}

TEST_CASE("lower bounds never decrease") {
  std::mt19937_64 rng(3);
  BoundTrackerOpt<Rational> opt(3);
  BoundTrackerC<Rational> c(3);
  Rational last_opt, last_c;
  for (int i = 0; i < 300; ++i) {
    Rational p(static_cast<unsigned long>(bounded(rng, 0, 50)), static_cast<unsigned long>(bounded(rng, 1, 7)));
    p.canonicalize();
    opt.push(p);
    c.push(p);
    CHECK(opt.lower_bound() >= last_opt);
    CHECK(c.lower_bound() >= last_c);
    last_opt = opt.lower_bound();
    last_c = c.lower_bound();
  }
}

TEST_CASE("small_load filters by threshold") {
  MachineState<Rational> empty;
  CHECK(small_load(empty, Rational(1)) == 0);
  MachineState<Rational> m;
  m.add({1, Rational(1, 2)});
  m.add({2, Rational(2)});
  CHECK(small_load(m, Rational(1)) == Rational(1, 2));
  CHECK(small_load(m, Rational(2)) == Rational(5, 2));
}

TEST_CASE("least_loaded breaks ties towards the smallest index") {
  ScheduleState<Rational> s(3);
  s.assign({1, 3}, 1);
  s.assign({2, 1}, 2);
  s.assign({3, 2}, 3);
  std::vector<std::size_t> all{1, 2, 3};
  CHECK(least_loaded(s, std::span<const std::size_t>(all)) == 2);

  ScheduleState<Rational> t(2);
  t.assign({1, 1}, 1);
  t.assign({2, 1}, 2);
  std::vector<std::size_t> both{1, 2};
  CHECK(least_loaded(t, std::span<const std::size_t>(both)) == 1);
  CHECK(least_loaded(t) == 1);

  std::vector<std::size_t> one{1};
  CHECK(least_loaded(t, std::span<const std::size_t>(one)) == 1);
  std::vector<std::size_t> none;
  CHECK_THROWS_AS(least_loaded(t, std::span<const std::size_t>(none)), std::invalid_argument);
}

TEST_CASE("remove_largest prefers the larger id on ties") {
  MachineState<Rational> m;
  m.add({1, 2});
  m.add({2, 2});
  m.add({3, 1});
  CHECK(m.remove_largest().id == 2);
  CHECK(m.load == 3);
}

TEST_CASE("SmallLoadIndex agrees with a full recomputation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t m = bounded(rng, 2, 5);
    SmallLoadIndex<Rational> index(m);
    ScheduleState<Rational> state(m);
    Rational threshold = 0;
    for (std::size_t id = 1; id <= 60; ++id) {
      Rational step(static_cast<unsigned long>(bounded(rng, 0, 3)), 2);
      step.canonicalize();
      threshold += step;
      index.advance(threshold);
      Rational p(static_cast<unsigned long>(bounded(rng, 0, 40)), 2);
      p.canonicalize();
      std::size_t target = bounded(rng, 1, m);
      state.assign({id, p}, target);
      index.add(target, p);
      std::size_t large = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        CHECK(index.small_load(j) == small_load(state.machine(j), threshold));
        for (const auto& job : state.machine(j).jobs) large += job.p > threshold ? 1 : 0;
      }
      CHECK(index.large_count() == large);
    }
    CHECK_THROWS_AS(index.advance(threshold - 1), std::logic_error);
  }
}

TEST_CASE("instance text format round-trips") {
  std::istringstream in("m 3\n# comment\n1\n5/2\n0.25\n\n7\n");
  Instance instance = read_instance(in);
  CHECK(instance.m == 3);
  REQUIRE(instance.size() == 4);
  CHECK(instance.jobs[1].p == Rational(5, 2));
  CHECK(instance.jobs[2].p == Rational(1, 4));
  CHECK(instance.jobs[3].id == 4);

  std::ostringstream out;
  write_instance(out, instance);
  CHECK(out.str() == "m 3\n1\n5/2\n1/4\n7\n");
  std::istringstream again(out.str());
  Instance copy = read_instance(again);
  CHECK(copy.size() == 4);
  CHECK(copy.jobs[2].p == Rational(1, 4));

  std::istringstream bad("m 1\n1\n");
  CHECK_THROWS_AS(read_instance(bad), std::invalid_argument);
  std::istringstream negative("m 2\n-1\n");
  CHECK_THROWS_AS(read_instance(negative), std::invalid_argument);
}

TEST_CASE("event log JSON lines") {
  Event a{Event::Kind::assign, 1, 0, 2};
  Event b{Event::Kind::migrate, 3, 1, 2};
  CHECK(event_to_json(a) == R"({"op":"assign","job":1,"to":2})");
  CHECK(event_to_json(b) == R"({"op":"migrate","job":3,"from":1,"to":2})");
  std::ostringstream out;
  std::vector<Event> events{a, b};
  write_events(out, events);
  std::istringstream in(out.str());
  CHECK(read_events(in) == events);
  CHECK_THROWS(event_from_json(R"({"op":"jump","job":1,"to":2})"));
}

TEST_CASE("replaying a run reproduces it") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.kind = seed % 2 ? GenSpec::Kind::uniform : GenSpec::Kind::shrinking_stress;
    spec.n = 30 + seed;
    spec.m = 2 + seed % 4;
    spec.seed = seed;
    Instance instance = generate(spec);
    for (const char* alg : {"opt", "c:5/3", "c:7/4", "list"}) {
      RunReport report = run_alg(parse_alg_spec(alg), instance);
      std::ostringstream log;
      write_events(log, report.events);
      std::istringstream back(log.str());
      ScheduleState<Rational> state = replay_events(instance, read_events(back));
      CHECK(state.makespan() == report.makespan);
      CHECK(state.migration_count() == report.migrations);
    }
  }
}

TEST_CASE("replay rejects inconsistent logs") {
  std::vector<Rational> sizes{1, 2};
  Instance instance = make_instance(2, sizes);
  std::vector<Event> twice{{Event::Kind::assign, 1, 0, 1}, {Event::Kind::assign, 1, 0, 2}};
  CHECK_THROWS_AS(replay_events(instance, twice), std::invalid_argument);
  std::vector<Event> wrong_from{{Event::Kind::assign, 1, 0, 1}, {Event::Kind::migrate, 1, 2, 1}};
  CHECK_THROWS_AS(replay_events(instance, wrong_from), std::invalid_argument);
  std::vector<Event> unknown{{Event::Kind::assign, 3, 0, 1}};
  CHECK_THROWS_AS(replay_events(instance, unknown), std::invalid_argument);
}
