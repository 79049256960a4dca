#include "migsched/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "migsched/adversary.hpp"
#include "migsched/alg_budget.hpp"
#include "migsched/alg_optimal.hpp"
#include "migsched/alpha_profile.hpp"
#include "migsched/baselines.hpp"
#include "migsched/harness.hpp"

namespace migsched {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Keeps the first few failure messages and counts the rest.
struct Failures {
  std::size_t count = 0;
  std::vector<std::string> samples;

  void add(const std::string& message) {
    if (samples.size() < 3) samples.push_back(message);
    ++count;
  }

  std::string summary(const std::string& ok) const {
    if (count == 0) return ok;
    std::string out = std::to_string(count) + " failure(s)";
    for (const auto& s : samples) out += "; " + s;
    return out;
  }
};

std::string frac(const Rational& q) { return to_fraction(q); }

CriterionResult table_reproduction() {
  auto start = Clock::now();
  const std::vector<Rational> alphas = {
      Rational(4, 3),      Rational(15, 11),     Rational(11, 8),      Rational(125, 89),  Rational(137, 97),
      Rational(273, 193),  Rational(586, 411),   Rational(1863, 1303), Rational(5029, 3517),
      Rational(58091, 40451)};
  const std::vector<long> mus = {10, 9, 9, 8, 8, 8, 8, 8, 8, 7};
  Failures failures;
  for (std::size_t m = 2; m <= 11; ++m) {
    AlphaProfile profile = solve_alpha(m);
    if (profile.alpha != alphas[m - 2]) {
      failures.add("m=" + std::to_string(m) + " alpha " + frac(profile.alpha));
    }
    if (profile.mu != mus[m - 2]) failures.add("m=" + std::to_string(m) + " mu " + std::to_string(profile.mu));
  }
  double seconds = since(start);
  if (seconds >= 1.0) failures.add("took " + std::to_string(seconds) + " s");
  return {1, "table reproduction", failures.count == 0, failures.summary("m=2..11 exact"), seconds};
}

CriterionResult limit_constant_check() {
  auto start = Clock::now();
  Failures failures;
  LimitConstant limit = limit_constant(6);
  Rational previous = 0;
  Rational alpha2000;
  for (std::size_t m = 2; m <= 2000; ++m) {
    Rational alpha = solve_alpha(m).alpha;
    if (alpha < previous) failures.add("alpha drops at m=" + std::to_string(m));
    previous = alpha;
    if (m == 2000) alpha2000 = alpha;
  }
  Rational gap = limit.rounded - alpha2000;
  if (!(gap > 0 && gap < Rational(1, 1000))) failures.add("gap " + to_significant(gap, 6));
  double seconds = since(start);
  if (seconds >= 30.0) failures.add("took " + std::to_string(seconds) + " s");
  return {2, "limit constant", failures.count == 0,
          failures.summary("limit " + limit.decimal + ", alpha_2000 " + to_significant(alpha2000, 8) +
                           ", gap " + to_significant(gap, 4)),
          seconds};
}

CriterionResult f_properties() {
  auto start = Clock::now();
  Failures failures;
  for (std::size_t m = 2; m <= 500; ++m) {
    Rational left = 1 + Rational(1, 3 * static_cast<unsigned long>(m));
    if (!(f_m(m, left) < 1)) failures.add("f(1+1/3m) >= 1 at m=" + std::to_string(m));
    if (!(f_m(m, Rational(2)) >= 1)) failures.add("f(2) < 1 at m=" + std::to_string(m));
  }
  for (std::size_t m : {2, 3, 5, 10, 50}) {
    Rational previous;
    for (unsigned long i = 1; i <= 50; ++i) {
      Rational value = f_m(m, 1 + Rational(i, 50));
      if (i > 1 && !(value > previous)) {
        failures.add("not increasing at m=" + std::to_string(m) + ", alpha=" + frac(1 + Rational(i, 50)));
      }
      previous = value;
    }
  }
  return {3, "f_m properties", failures.count == 0,
          failures.summary("m=2..500 endpoints, 5 grids of 50 points"), since(start)};
}

struct Sample {
  Instance instance;
  Rational opt;
};

std::vector<Sample> random_samples(std::size_t count) {
  std::vector<Sample> out;
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec spec;
    spec.m = 2 + i % 4;
    spec.n = 1 + (i * 7) % 12;
    spec.seed = 1000 + i;
    if (i % 3 == 2) {
      spec.kind = GenSpec::Kind::geometric;
      spec.params = {{"ratio", "3/2"}, {"levels", "6"}, {"scale", "64"}};
    } else {
      spec.kind = GenSpec::Kind::uniform;
      spec.params = {{"max", "60"}, {"den", std::to_string(1 + i % 6)}};
    }
    Instance instance = generate(spec);
    Rational opt = opt_makespan(instance);
    out.push_back({std::move(instance), opt});
  }
  return out;
}

std::vector<Instance> stress_samples(std::size_t count) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::shrinking_stress;
    spec.m = 2 + i % 7;
    spec.n = 10000 * (i + 1) / count;
    spec.seed = 5000 + i;
    out.push_back(generate(spec));
  }
  return out;
}

std::string where(const Instance& instance, const std::string& alg) {
  return alg + " on m=" + std::to_string(instance.m) + ", n=" + std::to_string(instance.size());
}

// Checks the small-load profile invariant from scratch after every arrival,
// without the scheduler's incremental bookkeeping.
void observe_profile(const Instance& instance, Failures& failures) {
  AlphaProfile profile = solve_alpha(instance.m);
  OptimalScheduler<Rational> scheduler(profile, false);
  BoundTrackerOpt<Rational> tracker(instance.m);
  Rational excess = profile.alpha - 1;
  for (const Job& job : instance.jobs) {
    tracker.push(job.p);
    Rational threshold = excess * tracker.lower_bound();
    Rational lstar = tracker.lstar(profile.alpha);
    bool found = false;
    for (std::size_t j = 1; j <= instance.m && !found; ++j) {
      Rational load = small_load(scheduler.state().machine(j), threshold);
      found = load <= profile.beta_of(j) * lstar;
    }
    if (!found) failures.add("profile gap at t=" + std::to_string(job.id) + ", " + where(instance, "opt"));
    scheduler.accept(job);
  }
}

void check_budgets(const RunReport& report, const Instance& instance, Failures& failures) {
  std::size_t m = instance.m;
  const auto& removals = report.per_machine_removals;
  std::size_t total = 0;
  for (std::size_t r : removals) total += r;
  if (total != report.migrations) failures.add("migration count mismatch, " + where(instance, report.alg));
  if (report.alg == "opt") {
    long mu = solve_alpha(m).mu;
    for (std::size_t r : removals) {
      if (static_cast<long>(r) > mu) failures.add("per-machine removals > mu, " + where(instance, report.alg));
    }
    if (static_cast<long>(total) > mu * static_cast<long>(m)) {
      failures.add("total > mu*m, " + where(instance, report.alg));
    }
  } else {
    bool five_thirds = report.alg == "c=5/3";
    std::size_t per_a = five_thirds ? 7 : 4;
    for (std::size_t j = 1; j <= m / 2; ++j) {
      if (removals[j - 1] > per_a) failures.add("A-machine removals, " + where(instance, report.alg));
    }
    bool over = five_thirds ? total > 4 * m : 2 * total > 5 * m;
    if (over) failures.add("total migrations " + std::to_string(total) + ", " + where(instance, report.alg));
  }
  for (const auto& v : report.violations) failures.add(v + " (" + where(instance, report.alg) + ")");
}

void count_profile_violations(const RunReport& report, const Instance& instance, Failures& failures) {
  for (const auto& v : report.violations) {
    if (v.rfind("profile_gap", 0) == 0) failures.add(v + " (" + where(instance, "opt") + ")");
  }
}

CriterionResult adversary_check() {
  auto start = Clock::now();
  Failures failures;
  Rational eps(1, 1000);
  std::string detail;
  for (std::size_t m : {2, 3}) {
    std::vector<std::size_t> n_primes;
    for (std::size_t n : {100, 1000, 10000}) n_primes.push_back(n - n % m);
    AdversarySweep sweep = sweep_adversary(scheduler_factory(parse_alg_spec("opt")), m, n_primes, eps);
    Rational alpha = solve_alpha(m).alpha;
    const AdversaryOutcome& last = sweep.outcomes.back();
    if (!sweep.non_decreasing) failures.add("ratio_lb decreases for m=" + std::to_string(m));
    if (!(last.ratio_lb >= alpha - Rational(1, 50))) {
      failures.add("m=" + std::to_string(m) + " ratio_lb " + to_significant(last.ratio_lb, 6));
    }
    detail += (detail.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + ":";
    for (const auto& o : sweep.outcomes) detail += " " + to_significant(o.ratio_lb, 6);

    if (m == 2) {
      const AdversaryOutcome& first = sweep.outcomes.front();
      Rational opt = opt_makespan(first.sequence, first.sequence.size());
      if (opt > first.opt_upper) failures.add("opt_upper " + frac(first.opt_upper) + " < OPT " + frac(opt));
      detail += " (OPT " + frac(opt) + " <= " + frac(first.opt_upper) + ")";
    }
  }
  return {7, "adversary tightness", failures.count == 0, failures.summary(detail), since(start)};
}

CriterionResult cesaro_check() {
  auto start = Clock::now();
  Failures failures;
  std::string detail;
  for (std::size_t m : {1, 10, 100, 1000}) {
    Enclosure gap = cesaro_gap(m, 50);
    auto mm = static_cast<unsigned long>(m);
    Rational bound(1, 6 * mm * (mm + 1));
    if (!(gap.lower > 0 && gap.upper < bound)) failures.add("m=" + std::to_string(m));
    detail += (detail.empty() ? "m=" : ", m=") + std::to_string(m) + " gap*6m(m+1) " +
              to_significant(gap.upper / bound, 6);
  }
  return {9, "Cesaro bound", failures.count == 0, failures.summary(detail), since(start)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  results.push_back(table_reproduction());
  results.push_back(limit_constant_check());
  results.push_back(f_properties());

  auto start4 = Clock::now();
  std::vector<Sample> samples = random_samples(options.random_instances);
  Failures ratio_failures, budget_failures, profile_failures, oracle_failures;
  const AlgSpec opt_alg = parse_alg_spec("opt");
  const AlgSpec c53 = parse_alg_spec("c:5/3");
  const AlgSpec c74 = parse_alg_spec("c:7/4");
  const RunOptions recording{true, false};

  for (const Sample& s : samples) {
    for (const AlgSpec& alg : {opt_alg, c53, c74}) {
      RunReport report = run_alg(alg, s.instance, recording);
      if (report.makespan > report.competitive_bound * s.opt) {
        ratio_failures.add(where(s.instance, report.alg) + " makespan " + frac(report.makespan) + " vs OPT " +
                           frac(s.opt));
      }
      for (const auto& v : report.violations) ratio_failures.add(v);
      check_budgets(report, s.instance, budget_failures);
      if (alg.kind == AlgSpec::Kind::opt) count_profile_violations(report, s.instance, profile_failures);
    }
    observe_profile(s.instance, profile_failures);
  }
  double seconds4 = since(start4);
  if (seconds4 >= 300.0) ratio_failures.add("took " + std::to_string(seconds4) + " s");
  results.push_back({4, "competitiveness", ratio_failures.count == 0,
                     ratio_failures.summary(std::to_string(samples.size()) + " instances x 3 algorithms"),
                     seconds4});

  auto start5 = Clock::now();
  std::size_t shrunk = 0;
  std::vector<Instance> stress = stress_samples(options.stress_instances);
  for (const Instance& instance : stress) {
    shrunk += shrunk_jobs(instance);
    for (const AlgSpec& alg : {opt_alg, c53, c74}) {
      RunReport report = run_alg(alg, instance, recording);
      check_budgets(report, instance, budget_failures);
      if (alg.kind == AlgSpec::Kind::opt) count_profile_violations(report, instance, profile_failures);
    }
    if (instance.size() <= 1000) observe_profile(instance, profile_failures);
  }
  double seconds5 = since(start5);
  results.push_back({5, "migration budgets", budget_failures.count == 0,
                     budget_failures.summary(std::to_string(samples.size() + stress.size()) + " instances, " +
                                             std::to_string(shrunk) + " shrunk jobs in stress set"),
                     seconds5});
  results.push_back({6, "profile invariant", profile_failures.count == 0,
                     profile_failures.summary("live check on every run, recomputed check on " +
                                              std::to_string(samples.size()) + "+ instances"),
                     0.0});

  results.push_back(adversary_check());

  auto start8 = Clock::now();
  std::mt19937_64 rng(8);
  std::size_t accepted = 0;
  while (accepted < options.pairing_instances) {
    std::size_t m = bounded(rng, 2, 4);
    std::size_t k = bounded(rng, 1, 2 * m);
    std::vector<Rational> sizes;
    for (std::size_t i = 0; i < k; ++i) {
      Rational p(static_cast<unsigned long>(bounded(rng, 60, 120)), static_cast<unsigned long>(bounded(rng, 1, 4)));
      p.canonicalize();
      sizes.push_back(p);
    }
    Rational opt = opt_makespan(sizes, m);
    if (!(3 * *std::min_element(sizes.begin(), sizes.end()) > opt)) continue;
    ++accepted;
    Rational paired = pairing_opt(sizes, m);
    if (paired != opt) oracle_failures.add("pairing " + frac(paired) + " vs OPT " + frac(opt));
  }
  for (const Sample& s : samples) {
    RunReport list = run_list(s.instance);
    if (list.makespan > list.competitive_bound * s.opt) oracle_failures.add(where(s.instance, "list"));
    if (s.instance.jobs.empty()) continue;
    BoundTrackerOpt<Rational> bound_opt(s.instance.m);
    BoundTrackerC<Rational> bound_c(s.instance.m);
    for (const Job& job : s.instance.jobs) {
      bound_opt.push(job.p);
      bound_c.push(job.p);
    }
    if (bound_opt.lower_bound() > s.opt || bound_c.lower_bound() > s.opt) {
      oracle_failures.add("lower bound above OPT, m=" + std::to_string(s.instance.m));
    }
  }
  results.push_back({8, "oracle cross-checks", oracle_failures.count == 0,
                     oracle_failures.summary(std::to_string(accepted) + " pairing instances, " +
                                             std::to_string(samples.size()) + " List/L checks"),
                     since(start8)});

  results.push_back(cesaro_check());
  return results;
}

void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << " (" << std::fixed
        << std::setprecision(2) << r.seconds << " s): " << r.detail << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace migsched
