#include <cstdlib>

#include "doctest.h"
#include "migsched/baselines.hpp"

using namespace migsched;

namespace {

std::vector<Rational> sizes(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("List") {
  CHECK(run_list(make_instance(2, sizes({1, 1, 1}))).makespan == 2);
  CHECK(run_list(make_instance(3, sizes({7}))).makespan == 7);
  CHECK(run_list(make_instance(2, sizes({1}))).migrations == 0);
}

TEST_CASE("LPT") {
  CHECK(lpt_makespan(sizes({3, 3, 2, 2, 2}), 2) == 7);
  CHECK(run_lpt(make_instance(2, sizes({2, 2, 3, 3, 2}))).makespan == 7);
}

TEST_CASE("exact optimum") {
  CHECK(opt_makespan(sizes({3, 3, 2, 2, 2}), 2) == 6);
  CHECK(opt_makespan(sizes({1}), 5) == 1);
  CHECK(opt_makespan(sizes({1, 1}), 2) == 1);
  CHECK(opt_makespan(std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(1, 6)}, 2) == Rational(1, 2));
  CHECK(opt_makespan(sizes({}), 2) == 0);
}

TEST_CASE("oracle guard") {
  std::vector<Rational> many(23, Rational(1));
  CHECK_THROWS_AS(opt_makespan(many, 2), OracleGuardExceeded);
  CHECK(opt_makespan(many, 2, 23) == 12);
  setenv("MIGRATE_SCHED_ORACLE_GUARD", "30", 1);
  CHECK(default_oracle_guard() == 30);
  CHECK(opt_makespan(many, 2) == 12);
  unsetenv("MIGRATE_SCHED_ORACLE_GUARD");
  CHECK(default_oracle_guard() == 22);
}

TEST_CASE("pairing") {
  CHECK(pairing_opt(sizes({4, 3, 3, 2}), 2) == 6);
  CHECK(pairing_opt(sizes({5}), 3) == 5);
  CHECK(pairing_opt(sizes({1, 1}), 1) == 2);
  CHECK_THROWS_AS(pairing_opt(sizes({1, 1, 1}), 1), std::invalid_argument);
}
