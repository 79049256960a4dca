#include "migsched/harness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "migsched/adversary.hpp"
#include "migsched/alpha_profile.hpp"
#include "migsched/baselines.hpp"
#include "migsched/bound_tracker.hpp"

namespace migsched {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("bounded: empty range");
  std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  std::uint64_t range = span + 1;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + draw % range;
}

std::string kind_name(GenSpec::Kind kind) {
  switch (kind) {
    case GenSpec::Kind::uniform:
      return "uniform";
    case GenSpec::Kind::geometric:
      return "geometric";
    case GenSpec::Kind::shrinking_stress:
      return "shrinking-stress";
    case GenSpec::Kind::adversarial:
      return "adversarial";
  }
  return {};
}

GenSpec::Kind parse_kind(std::string_view text) {
  if (text == "uniform") return GenSpec::Kind::uniform;
  if (text == "geometric") return GenSpec::Kind::geometric;
  if (text == "shrinking-stress") return GenSpec::Kind::shrinking_stress;
  if (text == "adversarial") return GenSpec::Kind::adversarial;
  throw std::invalid_argument("unknown generator kind '" + std::string(text) + "'");
}

std::map<std::string, std::string> parse_params(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw std::invalid_argument("parameter '" + std::string(item) + "' is not key=value");
      }
      out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    }
    start = end + 1;
  }
  return out;
}

namespace {

Rational param(const GenSpec& spec, const std::string& key, const Rational& fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : parse_rational(it->second);
}

std::uint64_t int_param(const GenSpec& spec, const std::string& key, std::uint64_t fallback) {
  Rational value = param(spec, key, Rational(static_cast<unsigned long>(fallback)));
  if (value.get_den() != 1 || value < 0 || !value.get_num().fits_ulong_p()) {
    throw std::invalid_argument("parameter " + key + " must be a nonnegative integer");
  }
  return value.get_num().get_ui();
}

std::vector<Rational> gen_uniform(const GenSpec& spec, std::mt19937_64& rng) {
  std::uint64_t max = int_param(spec, "max", 100);
  std::uint64_t den = int_param(spec, "den", 1);
  if (max < 1 || den < 1) throw std::invalid_argument("uniform needs max >= 1 and den >= 1");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < spec.n; ++i) {
    std::uint64_t a = bounded(rng, 1, max);
    std::uint64_t b = bounded(rng, 1, den);
    Rational p(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    p.canonicalize();
    out.push_back(p);
  }
  return out;
}

std::vector<Rational> gen_geometric(const GenSpec& spec, std::mt19937_64& rng) {
  Rational ratio = param(spec, "ratio", Rational(2));
  std::uint64_t levels = int_param(spec, "levels", 10);
  Rational scale = param(spec, "scale", Rational(1024));
  if (ratio <= 1 || scale <= 0) throw std::invalid_argument("geometric needs ratio > 1 and scale > 0");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < spec.n; ++i) {
    std::uint64_t k = bounded(rng, 0, levels);
    Rational p = scale;
    for (std::uint64_t j = 0; j < k; ++j) p /= ratio;
    out.push_back(p);
  }
  return out;
}

// Bursts of up to 2m jobs just above (alpha-1) L_t, then filler volume that
// raises L far enough for the burst to count as small later on.
std::vector<Rational> gen_shrinking(const GenSpec& spec, std::mt19937_64& rng) {
  std::uint64_t div = int_param(spec, "div", 10);
  if (div < 1) throw std::invalid_argument("shrinking-stress needs div >= 1");
  AlphaProfile profile = solve_alpha(spec.m);
  Rational excess = profile.alpha - 1;
  BoundTrackerOpt<Rational> tracker(spec.m);
  std::vector<Rational> out;

  auto push = [&](const Rational& p) {
    tracker.push(p);
    out.push_back(p);
  };

  while (out.size() < spec.n) {
    std::uint64_t burst = bounded(rng, 1, 2 * spec.m);
    for (std::uint64_t b = 0; b < burst && out.size() < spec.n; ++b) {
      if (tracker.count() == 0) {
        push(Rational(static_cast<unsigned long>(bounded(rng, 1000, 1999))));
        continue;
      }
      Rational p = Rational(floor(excess * tracker.lower_bound()) + 1);
      for (int iter = 0; iter < 64; ++iter) {
        BoundTrackerOpt<Rational> probe = tracker;
        probe.push(p);
        Rational threshold = excess * probe.lower_bound();
        if (p > threshold) break;
        p = Rational(floor(threshold) + 1);
      }
      push(p);
    }

    Rational target = tracker.total() * Rational(static_cast<unsigned long>(bounded(rng, 120, 200)), 100);
    while (tracker.total() < target && out.size() < spec.n) {
      Integer cap = floor(excess * tracker.lower_bound() / Rational(static_cast<unsigned long>(div)));
      std::uint64_t hi = cap.fits_ulong_p() && cap > 1 ? cap.get_ui() : 1;
      push(Rational(static_cast<unsigned long>(bounded(rng, 1, hi))));
    }
  }
  return out;
}

std::vector<Rational> gen_adversarial(const GenSpec& spec) {
  Rational eps = param(spec, "eps", Rational(1, 1000));
  auto it = spec.params.find("alg");
  AlgSpec alg = parse_alg_spec(it == spec.params.end() ? "opt" : it->second);
  std::size_t n_prime = std::max(spec.m, spec.n - spec.n % spec.m);
  auto scheduler = make_scheduler(alg, spec.m, false);
  AdversaryOutcome outcome = play_adversary(*scheduler, spec.m, n_prime, eps);
  std::vector<Rational> out;
  for (const Job& job : outcome.sequence.jobs) out.push_back(job.p);
  return out;
}

}  // namespace

Instance generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (spec.m < 2) throw std::invalid_argument("generator needs m >= 2");
  std::mt19937_64 rng(spec.seed);
  std::vector<Rational> sizes;
  switch (spec.kind) {
    case GenSpec::Kind::uniform:
      sizes = gen_uniform(spec, rng);
      break;
    case GenSpec::Kind::geometric:
      sizes = gen_geometric(spec, rng);
      break;
    case GenSpec::Kind::shrinking_stress:
      sizes = gen_shrinking(spec, rng);
      break;
    case GenSpec::Kind::adversarial:
      sizes = gen_adversarial(spec);
      break;
  }
  return make_instance(spec.m, sizes);
}

std::size_t shrunk_jobs(const Instance& instance) {
  if (instance.jobs.empty()) return 0;
  Rational excess = solve_alpha(instance.m).alpha - 1;
  BoundTrackerOpt<Rational> tracker(instance.m);
  std::vector<Rational> large_at_arrival;
  for (const Job& job : instance.jobs) {
    tracker.push(job.p);
    if (job.p > excess * tracker.lower_bound()) large_at_arrival.push_back(job.p);
  }
  Rational final_threshold = excess * tracker.lower_bound();
  return static_cast<std::size_t>(std::count_if(large_at_arrival.begin(), large_at_arrival.end(),
                                                [&](const Rational& p) { return p <= final_threshold; }));
}

namespace {

bool within(const Rational& value, const Rational& limit, bool exact) {
  if (exact) return value <= limit;
  return value <= limit * Rational(1000000001, 1000000000);
}

}  // namespace

CheckOutcome check_report(RunReport& report, const Instance& instance, std::optional<std::size_t> guard) {
  CheckOutcome out;
  try {
    ScheduleState<Rational> replayed = replay_events(instance, report.events);
    std::size_t placed = 0;
    for (const auto& machine : replayed.machines()) placed += machine.jobs.size();
    if (placed != instance.size()) {
      out.failures.push_back("replay_jobs: " + std::to_string(placed) + " of " +
                             std::to_string(instance.size()) + " jobs placed");
    }
    bool same = report.exact ? replayed.makespan() == report.makespan
                             : within(replayed.makespan(), report.makespan, false) &&
                                   within(report.makespan, replayed.makespan(), false);
    if (!same) {
      out.failures.push_back("replay_makespan: log gives " + to_fraction(replayed.makespan()) +
                             ", report says " + to_fraction(report.makespan));
    }
    if (replayed.migration_count() != report.migrations) {
      out.failures.push_back("replay_migrations: log has " + std::to_string(replayed.migration_count()) +
                             ", report says " + std::to_string(report.migrations));
    }
  } catch (const std::invalid_argument& e) {
    out.failures.push_back(std::string("replay_log: ") + e.what());
  }

  Rational opt;
  try {
    opt = opt_makespan(instance, guard);
    out.oracle_ran = true;
  } catch (const OracleGuardExceeded&) {
    out.guard_exceeded = true;
    return out;
  }
  attach_opt(report, opt);
  if (!within(report.makespan, report.competitive_bound * opt, report.exact)) {
    out.failures.push_back("competitive_ratio: makespan " + to_fraction(report.makespan) + " > " +
                           to_fraction(report.competitive_bound) + " * OPT " + to_fraction(opt));
  }
  if (!instance.jobs.empty()) {
    BoundTrackerOpt<Rational> bound_opt(instance.m);
    BoundTrackerC<Rational> bound_c(instance.m);
    for (const Job& job : instance.jobs) {
      bound_opt.push(job.p);
      bound_c.push(job.p);
    }
    if (bound_opt.lower_bound() > opt) {
      out.failures.push_back("lower_bound_opt: " + to_fraction(bound_opt.lower_bound()) + " > OPT");
    }
    if (bound_c.lower_bound() > opt) {
      out.failures.push_back("lower_bound_c: " + to_fraction(bound_c.lower_bound()) + " > OPT");
    }
  }
  if (report.largest_pair && !within(*report.largest_pair, opt, report.exact)) {
    out.failures.push_back("pair_total: " + to_fraction(*report.largest_pair) + " > OPT");
  }
  return out;
}

bool BatchResult::any_violation() const {
  return std::any_of(rows.begin(), rows.end(), [](const BatchRow& row) {
    return !row.error.empty() || !row.report.violations.empty() || !row.check.failures.empty();
  });
}

bool BatchResult::any_guard_exceeded() const {
  return std::any_of(rows.begin(), rows.end(), [](const BatchRow& row) { return row.check.guard_exceeded; });
}

int BatchResult::exit_code() const {
  if (any_violation()) return 2;
  if (require_opt && any_guard_exceeded()) return 3;
  return 0;
}

BatchResult batch(const std::vector<AlgSpec>& algs, const std::vector<LabeledInstance>& instances,
                  const BatchOptions& options) {
  if (algs.empty() || instances.empty()) throw std::invalid_argument("batch needs algorithms and instances");
  BatchResult result;
  result.require_opt = options.require_opt;
  result.rows.resize(algs.size() * instances.size());
  bool check = options.check || options.require_opt;

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < result.rows.size(); k = next++) {
      const LabeledInstance& item = instances[k / algs.size()];
      const AlgSpec& alg = algs[k % algs.size()];
      BatchRow& row = result.rows[k];
      row.label = item.label;
      row.report.alg = alg.name();
      row.report.m = item.instance.m;
      row.report.n = item.instance.size();
      try {
        row.report = run_alg(alg, item.instance, RunOptions{options.exact, false});
        if (check) row.check = check_report(row.report, item.instance, options.guard);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, result.rows.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& thread : pool) thread.join();
  return result;
}

namespace {

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_json(const RunReport& report, const CheckOutcome& check) {
  auto optional_fraction = [](const std::optional<Rational>& q) -> nlohmann::ordered_json {
    if (q) return to_fraction(*q);
    return nullptr;
  };
  nlohmann::ordered_json j;
  j["alg"] = report.alg;
  j["m"] = report.m;
  j["n"] = report.n;
  j["exact"] = report.exact;
  j["makespan"] = to_fraction(report.makespan);
  j["lower_bound"] = to_fraction(report.lower_bound);
  j["opt"] = optional_fraction(report.opt);
  j["ratio_vs_lb"] = to_fraction(report.ratio_vs_lb);
  j["ratio_vs_opt"] = optional_fraction(report.ratio_vs_opt);
  j["competitive_bound"] = to_fraction(report.competitive_bound);
  j["migrations"] = report.migrations;
  j["per_machine_removals"] = report.per_machine_removals;
  j["largest_pair"] = optional_fraction(report.largest_pair);
  std::vector<std::string> violations = report.violations;
  violations.insert(violations.end(), check.failures.begin(), check.failures.end());
  j["violations"] = violations;
  j["warnings"] = report.warnings;
  if (check.guard_exceeded) j["oracle"] = "guard exceeded";
  return j.dump(2);
}

std::string csv_header() {
  return "alg,m,n,instance,makespan,lower_bound,opt,ratio_vs_lb,ratio_vs_lb_dec,ratio_vs_opt,"
         "ratio_vs_opt_dec,competitive_bound,migrations,per_machine_removals,violations";
}

std::string csv_row(const BatchRow& row) {
  const RunReport& r = row.report;
  std::vector<std::string> problems = r.violations;
  problems.insert(problems.end(), row.check.failures.begin(), row.check.failures.end());
  if (!row.error.empty()) problems.push_back("error: " + row.error);
  std::string joined;
  for (const auto& p : problems) joined += (joined.empty() ? "" : " | ") + p;
  std::string removals;
  for (std::size_t x : r.per_machine_removals) removals += (removals.empty() ? "" : ";") + std::to_string(x);

  std::ostringstream out;
  out << csv_field(r.alg) << ',' << r.m << ',' << r.n << ',' << csv_field(row.label) << ',' << to_fraction(r.makespan)
      << ',' << to_fraction(r.lower_bound) << ',' << (r.opt ? to_fraction(*r.opt) : "") << ','
      << to_fraction(r.ratio_vs_lb) << ',' << to_significant(r.ratio_vs_lb, 10) << ','
      << (r.ratio_vs_opt ? to_fraction(*r.ratio_vs_opt) : "") << ','
      << (r.ratio_vs_opt ? to_significant(*r.ratio_vs_opt, 10) : "") << ',' << to_fraction(r.competitive_bound)
      << ',' << r.migrations << ',' << removals << ',' << csv_field(joined);
  return out.str();
}

void write_csv(std::ostream& out, const BatchResult& result) {
  out << csv_header() << '\n';
  for (const auto& row : result.rows) out << csv_row(row) << '\n';
}

}  // namespace migsched
