#include "migsched/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <type_traits>
#include <vector>

namespace migsched {

namespace {

template <class Scalar>
RunReport run_list_impl(const Instance& instance) {
  using Traits = ScalarTraits<Scalar>;
  ListScheduler<Scalar> scheduler(instance.m);
  for (const auto& job : convert_jobs<Scalar>(instance.jobs)) scheduler.accept(job);

  RunReport report;
  report.alg = "list";
  report.m = instance.m;
  report.n = instance.size();
  report.exact = Traits::exact;
  report.makespan = Traits::to_rational(scheduler.state().makespan());
  if (scheduler.tracker().count() > 0) {
    report.lower_bound = Traits::to_rational(scheduler.tracker().lower_bound());
  }
  report.ratio_vs_lb = safe_ratio(report.makespan, report.lower_bound);
  report.competitive_bound = 2 - Rational(1, static_cast<unsigned long>(instance.m));
  report.per_machine_removals.assign(instance.m, 0);
  report.events = scheduler.state().events();
  return report;
}

std::vector<Rational> sorted_desc(std::span<const Rational> sizes) {
  std::vector<Rational> out(sizes.begin(), sizes.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

template <class T>
T ceil_div(const T& total, std::size_t m) {
  if constexpr (std::is_integral_v<T>) {
    auto mm = static_cast<T>(m);
    return (total + mm - 1) / mm;
  } else {
    return total / T(static_cast<unsigned long>(m));
  }
}

template <class T>
class BranchAndBound {
 public:
  BranchAndBound(std::vector<T> sizes, std::size_t m, T upper) : sizes_(std::move(sizes)), loads_(m, T{}), best_(upper) {
    T total{};
    for (const T& p : sizes_) total += p;
    lower_ = ceil_div(total, m);
    if (!sizes_.empty() && sizes_.front() > lower_) lower_ = sizes_.front();
  }

  T solve() {
    if (best_ > lower_) search(0, T{});
    return best_;
  }

 private:
  void search(std::size_t i, const T& current) {
    if (i == sizes_.size()) {
      if (current < best_) best_ = current;
      return;
    }
    for (std::size_t j = 0; j < loads_.size(); ++j) {
      // Machines with equal load are interchangeable.
      bool seen = false;
      for (std::size_t k = 0; k < j && !seen; ++k) seen = loads_[k] == loads_[j];
      if (seen) continue;
      T next = loads_[j] + sizes_[i];
      if (next >= best_) continue;
      T saved = loads_[j];
      loads_[j] = next;
      search(i + 1, next > current ? next : current);
      loads_[j] = saved;
      if (best_ == lower_) return;
    }
  }

  std::vector<T> sizes_;
  std::vector<T> loads_;
  T best_;
  T lower_{};
};

}  // namespace

RunReport run_list(const Instance& instance, const RunOptions& options) {
  validate(instance);
  return options.exact ? run_list_impl<Rational>(instance) : run_list_impl<double>(instance);
}

Rational lpt_makespan(std::span<const Rational> sizes, std::size_t m) {
  if (m == 0) throw std::invalid_argument("lpt needs at least one machine");
  std::vector<Rational> loads(m, Rational(0));
  for (const Rational& p : sorted_desc(sizes)) {
    auto it = std::min_element(loads.begin(), loads.end());
    *it += p;
  }
  return *std::max_element(loads.begin(), loads.end());
}

RunReport run_lpt(const Instance& instance) {
  validate(instance);
  std::vector<Job> order = instance.jobs;
  std::stable_sort(order.begin(), order.end(), [](const Job& a, const Job& b) { return a.p > b.p; });
  ScheduleState<Rational> state(instance.m);
  BoundTrackerC<Rational> tracker(instance.m);
  for (const Job& job : order) {
    tracker.push(job.p);
    state.assign(job, least_loaded(state));
  }
  RunReport report;
  report.alg = "lpt";
  report.m = instance.m;
  report.n = instance.size();
  report.makespan = state.makespan();
  if (tracker.count() > 0) report.lower_bound = tracker.lower_bound();
  report.ratio_vs_lb = safe_ratio(report.makespan, report.lower_bound);
  report.competitive_bound = Rational(4, 3) - Rational(1, 3 * static_cast<unsigned long>(instance.m));
  report.per_machine_removals.assign(instance.m, 0);
  report.events = state.events();
  return report;
}

std::size_t default_oracle_guard() {
  if (const char* text = std::getenv("MIGRATE_SCHED_ORACLE_GUARD"); text != nullptr && *text) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(text, &end, 10);
    if (end != nullptr && *end == '\0') return static_cast<std::size_t>(value);
  }
  return 22;
}

Rational opt_makespan(std::span<const Rational> sizes, std::size_t m, std::optional<std::size_t> guard) {
  if (m == 0) throw std::invalid_argument("oracle needs at least one machine");
  std::size_t limit = guard.value_or(default_oracle_guard());
  if (sizes.size() > limit) {
    throw OracleGuardExceeded("oracle guard: n=" + std::to_string(sizes.size()) + " > " +
                              std::to_string(limit));
  }
  if (sizes.empty()) return Rational(0);
  for (const Rational& p : sizes) {
    if (p < 0) throw std::invalid_argument("negative processing time");
  }

  std::vector<Rational> desc = sorted_desc(sizes);
  Rational upper = lpt_makespan(desc, m);

  // Scale to integers over the common denominator when the sums fit in 63 bits.
  Integer denom = 1;
  for (const Rational& p : desc) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), p.get_den_mpz_t());
  Integer scaled_total = 0;
  std::vector<Integer> scaled;
  for (const Rational& p : desc) {
    Integer s = p.get_num() * (denom / p.get_den());
    scaled_total += s;
    scaled.push_back(s);
  }
  if (scaled_total.fits_slong_p() && scaled_total < Integer(std::numeric_limits<long>::max() / 4)) {
    std::vector<long> ints;
    for (const Integer& s : scaled) ints.push_back(s.get_si());
    Rational scaled_upper = upper * Rational(denom);
    long best = BranchAndBound<long>(std::move(ints), m, floor(scaled_upper).get_si()).solve();
    Rational result(Integer(best), denom);
    result.canonicalize();
    return result;
  }
  return BranchAndBound<Rational>(std::move(desc), m, upper).solve();
}

Rational opt_makespan(const Instance& instance, std::optional<std::size_t> guard) {
  validate(instance);
  std::vector<Rational> sizes;
  for (const Job& job : instance.jobs) sizes.push_back(job.p);
  return opt_makespan(sizes, instance.m, guard);
}

Rational pairing_opt(std::span<const Rational> sizes, std::size_t m) {
  if (m == 0) throw std::invalid_argument("pairing needs at least one machine");
  if (sizes.size() > 2 * m) throw std::invalid_argument("pairing takes at most 2m jobs");
  std::vector<Rational> desc = sorted_desc(sizes);
  Rational best = 0;
  for (std::size_t i = 1; i <= m && i <= desc.size(); ++i) {
    Rational load = desc[i - 1];
    std::size_t partner = 2 * m + 1 - i;
    if (partner <= desc.size()) load += desc[partner - 1];
    if (load > best) best = load;
  }
  return best;
}

}  // namespace migsched
