#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "migsched/rational.hpp"
#include "migsched/report.hpp"
#include "migsched/schedule.hpp"

namespace migsched {

/// Exact-arithmetic scheduler driven one job at a time. Jobs only migrate
/// inside finalize().
class OnlineScheduler {
 public:
  virtual ~OnlineScheduler() = default;

  virtual std::string name() const = 0;
  virtual std::size_t machines() const = 0;
  virtual void accept(const Job& job) = 0;
  /// Runs the migration phase and returns the migrate events it produced.
  virtual std::vector<Event> finalize() = 0;
  virtual std::vector<Rational> loads() const = 0;
  /// Every assign and migrate event so far.
  virtual const std::vector<Event>& events() const = 0;
  virtual std::size_t migrations() const = 0;
};

using SchedulerFactory = std::function<std::unique_ptr<OnlineScheduler>(std::size_t m)>;

struct AlgSpec {
  enum class Kind { opt, c, list };
  Kind kind = Kind::opt;
  Rational c{5, 3};

  /// "opt", "list" or "c=num/den".
  std::string name() const;
};

/// Accepts "opt", "list", "c" (ratio 5/3), "c:<frac>" and "c=<frac>".
AlgSpec parse_alg_spec(std::string_view text);

std::unique_ptr<OnlineScheduler> make_scheduler(const AlgSpec& spec, std::size_t m, bool strict = true);
SchedulerFactory scheduler_factory(const AlgSpec& spec, bool strict = true);

RunReport run_alg(const AlgSpec& spec, const Instance& instance, const RunOptions& options = {});

}  // namespace migsched
