#include <sstream>

#include "doctest.h"
#include "migsched/alpha_profile.hpp"
#include "migsched/harness.hpp"

using namespace migsched;

TEST_CASE("bounded draws stay in range and repeat per seed") {
  std::mt19937_64 a(1), b(1);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = bounded(a, 3, 9);
    CHECK(x >= 3);
    CHECK(x <= 9);
    CHECK(x == bounded(b, 3, 9));
  }
  CHECK_THROWS_AS(bounded(a, 2, 1), std::invalid_argument);
}

TEST_CASE("generation is deterministic") {
  GenSpec spec;
  spec.seed = 7;
  spec.n = 5;
  for (auto kind : {GenSpec::Kind::uniform, GenSpec::Kind::geometric, GenSpec::Kind::shrinking_stress,
                    GenSpec::Kind::adversarial}) {
    spec.kind = kind;
    Instance a = generate(spec);
    Instance b = generate(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.jobs[i].p == b.jobs[i].p);
  }
  spec.kind = GenSpec::Kind::uniform;
  CHECK(generate(spec).size() == 5);
}

TEST_CASE("single-job and invalid specs") {
  GenSpec spec;
  spec.n = 1;
  CHECK(generate(spec).size() == 1);
  spec.n = 0;
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
  spec.n = 3;
  spec.m = 1;
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
  CHECK_THROWS_AS(parse_kind("gaussian"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("den"), std::invalid_argument);
  CHECK(parse_params("max=5,den=2").at("den") == "2");
}

TEST_CASE("shrinking stress reclassifies jobs") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::shrinking_stress;
  spec.m = 2;
  spec.n = 200;
  spec.seed = 1;
  CHECK(shrunk_jobs(generate(spec)) >= 1);
}

TEST_CASE("batch of 100 uniform instances on three machines") {
  std::vector<LabeledInstance> items;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec spec;
    spec.m = 3;
    spec.n = 10;
    spec.seed = seed;
    items.push_back({"uniform:" + std::to_string(seed), generate(spec)});
  }
  std::vector<AlgSpec> algs{parse_alg_spec("opt"), parse_alg_spec("c:5/3"), parse_alg_spec("list")};
  BatchOptions options;
  options.check = true;
  options.threads = 2;
  BatchResult result = batch(algs, items, options);
  REQUIRE(result.rows.size() == 300);
  CHECK(result.exit_code() == 0);

  const Rational bounds[] = {Rational(15, 11), Rational(5, 3), Rational(5, 3)};
  const std::size_t budgets[] = {static_cast<std::size_t>(solve_alpha(3).mu) * 3, 12, 0};
  for (std::size_t k = 0; k < result.rows.size(); ++k) {
    const BatchRow& row = result.rows[k];
    CHECK(row.label == items[k / 3].label);
    CHECK(row.report.alg == algs[k % 3].name());
    REQUIRE(row.report.ratio_vs_opt.has_value());
    CHECK(*row.report.ratio_vs_opt <= bounds[k % 3]);
    CHECK(row.report.migrations <= budgets[k % 3]);
    CHECK(row.report.violations.empty());
    CHECK(row.check.failures.empty());
  }

  std::ostringstream csv;
  write_csv(csv, result);
  std::string header;
  std::getline(std::istringstream(csv.str()) >> std::ws, header);
  CHECK(header == csv_header());
}

TEST_CASE("exit codes") {
  GenSpec spec;
  spec.n = 30;
  std::vector<LabeledInstance> items{{"big", generate(spec)}};
  std::vector<AlgSpec> algs{parse_alg_spec("list")};
  BatchOptions options;
  options.require_opt = true;
  options.threads = 1;
  BatchResult result = batch(algs, items, options);
  CHECK(result.any_guard_exceeded());
  CHECK(result.exit_code() == 3);
  options.require_opt = false;
  CHECK(batch(algs, items, options).exit_code() == 0);
}

TEST_CASE("check_report catches a tampered report") {
  GenSpec spec;
  spec.n = 8;
  Instance instance = generate(spec);
  RunReport report = run_alg(parse_alg_spec("opt"), instance);
  report.makespan += 1;
  CheckOutcome check = check_report(report, instance);
  CHECK_FALSE(check.failures.empty());
}

TEST_CASE("float mode batch") {
  GenSpec spec;
  spec.n = 10;
  spec.params = {{"den", "3"}};
  std::vector<LabeledInstance> items{{"x", generate(spec)}};
  std::vector<AlgSpec> algs{parse_alg_spec("opt"), parse_alg_spec("c:7/4")};
  BatchOptions options;
  options.exact = false;
  options.check = true;
  options.threads = 1;
  BatchResult result = batch(algs, items, options);
  CHECK(result.rows.size() == 2);
  for (const auto& row : result.rows) CHECK_FALSE(row.report.exact);
}

TEST_CASE("CSV quoting") {
  BatchRow row;
  row.label = "a,b";
  row.report.alg = "opt";
  row.report.violations = {"x: lost 8 jobs, mu=7"};
  std::string line = csv_row(row);
  CHECK(line.find("\"a,b\"") != std::string::npos);
  CHECK(line.find("\"x: lost 8 jobs, mu=7\"") != std::string::npos);
}
