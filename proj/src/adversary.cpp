#include "migsched/adversary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "migsched/alpha_profile.hpp"

namespace migsched {

namespace {

void feed(OnlineScheduler& scheduler, Instance& sequence, const Rational& p, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    Job job{sequence.jobs.size() + 1, p};
    sequence.jobs.push_back(job);
    scheduler.accept(job);
  }
}

}  // namespace

AdversaryOutcome play_adversary(OnlineScheduler& scheduler, std::size_t m, std::size_t n_prime,
                                const Rational& eps_prime) {
  if (m < 2) throw std::invalid_argument("adversary needs m >= 2");
  if (n_prime < m || n_prime % m != 0) {
    throw std::invalid_argument("n' must be a positive multiple of m");
  }
  if (eps_prime <= 0) throw std::invalid_argument("eps' must be positive");
  if (scheduler.machines() != m) throw std::invalid_argument("scheduler has the wrong machine count");
  if (!scheduler.events().empty()) throw std::invalid_argument("scheduler has already seen jobs");

  AlphaProfile profile = solve_alpha(m);
  auto mm = static_cast<unsigned long>(m);

  AdversaryOutcome out;
  out.alg = scheduler.name();
  out.m = m;
  out.n_prime = n_prime;
  out.eps_prime = eps_prime;
  out.sequence.m = m;

  Rational p1(mm, static_cast<unsigned long>(n_prime));
  p1.canonicalize();
  feed(scheduler, out.sequence, p1, n_prime);
  out.phase1_loads = scheduler.loads();

  bool overloaded = std::any_of(out.phase1_loads.begin(), out.phase1_loads.end(),
                                [&](const Rational& load) { return load >= profile.alpha; });
  if (overloaded) {
    out.branch = "overloaded";
    Rational p2 = eps_prime / Rational(mm);
    feed(scheduler, out.sequence, p2, m);
    out.opt_upper = 1 + p2;
  } else {
    std::vector<Rational> sorted = out.phase1_loads;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 1; j < m; ++j) {
      if (sorted[j - 1] >= profile.beta_of(j)) {
        out.j0 = j;
        break;
      }
    }
    if (!out.j0) {
      throw std::logic_error("no machine reaches its profile bound although all loads stay below alpha");
    }
    std::size_t j0 = *out.j0;
    out.branch = "profile-gap(" + std::to_string(j0) + ")";
    Rational p2(mm, static_cast<unsigned long>(m - j0));
    p2.canonicalize();
    feed(scheduler, out.sequence, p2, j0);
    out.opt_upper = p2;
    if (n_prime % (m - j0) != 0) out.opt_upper += p1;
  }

  scheduler.finalize();
  ScheduleState<Rational> replayed = replay_events(out.sequence, scheduler.events());
  out.alg_makespan = replayed.makespan();
  std::vector<Rational> reported = scheduler.loads();
  if (replayed.loads() != reported) {
    throw std::logic_error("scheduler loads disagree with its event log");
  }
  out.migrations = replayed.migration_count();
  out.ratio_lb = out.alg_makespan / out.opt_upper;
  return out;
}

AdversarySweep sweep_adversary(const SchedulerFactory& factory, std::size_t m,
                               const std::vector<std::size_t>& n_primes, const Rational& eps_prime) {
  if (n_primes.empty()) throw std::invalid_argument("sweep needs at least one n'");
  AdversarySweep sweep;
  for (std::size_t n_prime : n_primes) {
    auto scheduler = factory(m);
    sweep.outcomes.push_back(play_adversary(*scheduler, m, n_prime, eps_prime));
    std::size_t k = sweep.outcomes.size();
    if (k > 1 && sweep.outcomes[k - 1].ratio_lb < sweep.outcomes[k - 2].ratio_lb) {
      sweep.non_decreasing = false;
    }
  }
  return sweep;
}

std::string outcome_to_json(const AdversaryOutcome& outcome) {
  nlohmann::ordered_json j;
  j["alg"] = outcome.alg;
  j["m"] = outcome.m;
  j["nprime"] = outcome.n_prime;
  j["eps"] = to_fraction(outcome.eps_prime);
  j["n"] = outcome.sequence.size();
  j["branch"] = outcome.branch;
  if (outcome.j0) {
    j["j0"] = *outcome.j0;
  } else {
    j["j0"] = nullptr;
  }
  std::vector<std::string> loads;
  for (const Rational& load : outcome.phase1_loads) loads.push_back(to_fraction(load));
  j["phase1_loads"] = loads;
  j["alg_makespan"] = to_fraction(outcome.alg_makespan);
  j["opt_upper"] = to_fraction(outcome.opt_upper);
  j["ratio_lb"] = to_fraction(outcome.ratio_lb);
  j["ratio_lb_dec"] = to_significant(outcome.ratio_lb, 10);
  j["migrations"] = outcome.migrations;
  return j.dump(2);
}

}  // namespace migsched
