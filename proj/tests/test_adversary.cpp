#include "doctest.h"
#include "migsched/adversary.hpp"
#include "migsched/alpha_profile.hpp"
#include "migsched/baselines.hpp"

using namespace migsched;

TEST_CASE("List on two machines") {
  auto list = make_scheduler(parse_alg_spec("list"), 2);
  AdversaryOutcome o = play_adversary(*list, 2, 100, Rational(1, 1000));
  CHECK(o.phase1_loads == std::vector<Rational>{1, 1});
  CHECK(o.branch == "profile-gap(1)");
  CHECK(*o.j0 == 1);
  CHECK(o.alg_makespan == 3);
  CHECK(o.opt_upper == 2);
  CHECK(o.ratio_lb == Rational(3, 2));
  CHECK(o.sequence.size() == 101);
}

TEST_CASE("n' = m is well formed") {
  auto s = make_scheduler(parse_alg_spec("opt"), 3);
  AdversaryOutcome o = play_adversary(*s, 3, 3, Rational(1, 100));
  CHECK(o.ratio_lb == o.alg_makespan / o.opt_upper);
  CHECK(o.sequence.size() == 3 + *o.j0);
  CHECK(o.opt_upper == Rational(5, 2));
}

TEST_CASE("preconditions") {
  auto s = make_scheduler(parse_alg_spec("list"), 2);
  CHECK_THROWS_AS(play_adversary(*s, 2, 101, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(play_adversary(*s, 2, 100, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(play_adversary(*s, 3, 99, Rational(1)), std::invalid_argument);
}

TEST_CASE("ALG(alpha_2) sweep grows towards 4/3") {
  AdversarySweep sweep = sweep_adversary(scheduler_factory(parse_alg_spec("opt")), 2, {10, 100, 1000}, Rational(1, 1000));
  REQUIRE(sweep.outcomes.size() == 3);
  CHECK(sweep.non_decreasing);
  CHECK(sweep.outcomes.back().ratio_lb <= Rational(4, 3));
  CHECK(sweep.outcomes.back().ratio_lb > Rational(4, 3) - Rational(1, 100));
}

TEST_CASE("ALG(alpha_3) at n' = 3000") {
  AdversarySweep sweep = sweep_adversary(scheduler_factory(parse_alg_spec("opt")), 3, {3000}, Rational(1, 1000));
  CHECK(sweep.outcomes.size() == 1);
  Rational gap = Rational(15, 11) - sweep.outcomes.front().ratio_lb;
  CHECK(abs(gap) < Rational(1, 100));
}

TEST_CASE("opt_upper bounds the optimum") {
  for (const char* alg : {"opt", "c:5/3", "list"}) {
    for (std::size_t m : {2, 3, 4}) {
      for (std::size_t n_prime = m; n_prime + m <= 20; n_prime += m) {
        auto s = make_scheduler(parse_alg_spec(alg), m);
        AdversaryOutcome o = play_adversary(*s, m, n_prime, Rational(1, 10));
        CHECK(opt_makespan(o.sequence, o.sequence.size()) <= o.opt_upper);
      }
    }
  }
}

TEST_CASE("fixed-budget schedulers approach alpha_m") {
  for (std::size_t m : {2, 3, 4}) {
    Rational alpha = solve_alpha(m).alpha;
    for (const char* alg : {"opt", "c:5/3", "list"}) {
      auto s = make_scheduler(parse_alg_spec(alg), m);
      AdversaryOutcome o = play_adversary(*s, m, 10000 - 10000 % m, Rational(1, 1000));
      CHECK(o.ratio_lb >= alpha - Rational(1, 50));
    }
  }
}

TEST_CASE("JSON output") {
  auto list = make_scheduler(parse_alg_spec("list"), 2);
  AdversaryOutcome o = play_adversary(*list, 2, 100, Rational(1, 1000));
  std::string json = outcome_to_json(o);
  CHECK(json.find("\"ratio_lb\": \"3/2\"") != std::string::npos);
  CHECK(json.find("\"branch\": \"profile-gap(1)\"") != std::string::npos);
}
