#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "migsched/online.hpp"
#include "migsched/report.hpp"
#include "migsched/schedule.hpp"

namespace migsched {

/// Uniform integer in [lo, hi] from raw 64-bit draws, identical on every
/// platform (std::uniform_int_distribution is not).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

struct GenSpec {
  enum class Kind { uniform, geometric, shrinking_stress, adversarial };
  Kind kind = Kind::uniform;
  std::size_t n = 1;
  std::size_t m = 2;
  std::uint64_t seed = 0;
  /// uniform: max (100), den (1). geometric: ratio (2), levels (10), scale (1024).
  /// shrinking-stress: div (10). adversarial: eps (1/1000), alg (opt).
  std::map<std::string, std::string> params;
};

std::string kind_name(GenSpec::Kind kind);
GenSpec::Kind parse_kind(std::string_view text);
/// "k=v,k=v" into a parameter map.
std::map<std::string, std::string> parse_params(std::string_view text);

/// Same spec, same instance. Throws std::invalid_argument for n < 1, m < 2
/// or malformed parameters.
Instance generate(const GenSpec& spec);

/// Jobs that were large, p > (alpha_m - 1) L_t, when they arrived but are
/// small with respect to the final bound L_n.
std::size_t shrunk_jobs(const Instance& instance);

struct CheckOutcome {
  std::vector<std::string> failures;
  bool oracle_ran = false;
  bool guard_exceeded = false;
};

/// Replays the event log, and when the oracle guard allows it compares the
/// makespan with the competitive bound times OPT, both lower bounds and the
/// largest pair with OPT. Attaches OPT to the report.
CheckOutcome check_report(RunReport& report, const Instance& instance,
                          std::optional<std::size_t> guard = std::nullopt);

struct LabeledInstance {
  std::string label;
  Instance instance;
};

struct BatchOptions {
  bool check = false;
  bool require_opt = false;
  bool exact = true;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::optional<std::size_t> guard;
};

struct BatchRow {
  std::string label;
  RunReport report;
  CheckOutcome check;
  std::string error;
};

struct BatchResult {
  std::vector<BatchRow> rows;
  bool require_opt = false;

  bool any_violation() const;
  bool any_guard_exceeded() const;
  /// 0 success, 2 invariant violation, 3 oracle guard exceeded under require_opt.
  int exit_code() const;
};

/// One row per (instance, alg) in input order, computed on a worker pool.
BatchResult batch(const std::vector<AlgSpec>& algs, const std::vector<LabeledInstance>& instances,
                  const BatchOptions& options);

/// Report plus check failures as a JSON object.
std::string report_to_json(const RunReport& report, const CheckOutcome& check = {});

std::string csv_header();
std::string csv_row(const BatchRow& row);
void write_csv(std::ostream& out, const BatchResult& result);

}  // namespace migsched
