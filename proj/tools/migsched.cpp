#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "migsched/acceptance.hpp"
#include "migsched/adversary.hpp"
#include "migsched/alpha_profile.hpp"
#include "migsched/baselines.hpp"
#include "migsched/harness.hpp"
#include "migsched/instance_io.hpp"
#include "migsched/invariants.hpp"

using namespace migsched;

namespace {

constexpr int kViolation = 2;
constexpr int kGuardExceeded = 3;

AlgSpec alg_from(const std::string& name, const std::string& c) {
  if (name == "c") return parse_alg_spec(c.empty() ? "c" : "c=" + c);
  return parse_alg_spec(name);
}

void print_alpha_row(std::size_t m) {
  AlphaProfile profile = solve_alpha(m);
  std::cout << m << ',' << profile.alpha.get_num().get_str() << ',' << profile.alpha.get_den().get_str() << ','
            << to_significant(profile.alpha, 10) << ',' << profile.mu << '\n';
}

int cmd_alpha(std::size_t m, bool table) {
  std::cout << "m,alpha_num,alpha_den,alpha_dec,mu\n";
  if (table) {
    for (std::size_t k = 2; k <= m; ++k) print_alpha_row(k);
  } else {
    print_alpha_row(m);
  }
  return 0;
}

int cmd_run(const std::string& alg, const std::string& c, const std::string& path, bool check,
            const std::string& trace, bool use_float) {
  Instance instance = load_instance(path);
  RunReport report = run_alg(alg_from(alg, c), instance, RunOptions{!use_float, false});
  CheckOutcome outcome;
  if (check) outcome = check_report(report, instance);
  if (!trace.empty()) {
    std::ofstream out(trace);
    if (!out) throw std::runtime_error("cannot write trace file " + trace);
    write_events(out, report.events);
  }
  std::cout << report_to_json(report, outcome) << '\n';
  return report.violations.empty() && outcome.failures.empty() ? 0 : kViolation;
}

int cmd_replay(const std::string& path, const std::string& trace) {
  Instance instance = load_instance(path);
  std::ifstream in(trace);
  if (!in) throw std::runtime_error("cannot open trace file " + trace);
  std::vector<Event> events = read_events(in);
  ScheduleState<Rational> state = replay_events(instance, events);
  std::cout << "makespan " << to_fraction(state.makespan()) << "\nmigrations " << state.migration_count() << '\n';
  return 0;
}

int cmd_gen(GenSpec spec, const std::string& out_path) {
  Instance instance = generate(spec);
  if (out_path.empty()) {
    write_instance(std::cout, instance);
  } else {
    save_instance(out_path, instance);
  }
  return 0;
}

struct BatchArgs {
  std::vector<std::string> algs{"opt", "c:5/3", "list"};
  std::vector<std::string> instances;
  std::string kind = "uniform";
  std::size_t count = 0;
  std::size_t n = 10;
  std::size_t m = 3;
  std::uint64_t seed = 1;
  std::string params;
  bool check = false;
  bool require_opt = false;
  bool use_float = false;
  std::size_t threads = 0;
  std::string out;
};

int cmd_batch(const BatchArgs& args) {
  std::vector<AlgSpec> algs;
  for (const auto& a : args.algs) algs.push_back(parse_alg_spec(a));
  std::vector<LabeledInstance> items;
  for (const auto& path : args.instances) items.push_back({path, load_instance(path)});
  for (std::size_t i = 0; i < args.count; ++i) {
    GenSpec spec;
    spec.kind = parse_kind(args.kind);
    spec.n = args.n;
    spec.m = args.m;
    spec.seed = args.seed + i;
    spec.params = parse_params(args.params);
    items.push_back({args.kind + ":" + std::to_string(spec.seed), generate(spec)});
  }
  if (items.empty()) throw std::invalid_argument("batch needs --instances or --count");

  BatchOptions options;
  options.check = args.check;
  options.require_opt = args.require_opt;
  options.exact = !args.use_float;
  options.threads = args.threads;
  BatchResult result = batch(algs, items, options);
  if (args.out.empty()) {
    write_csv(std::cout, result);
  } else {
    std::ofstream out(args.out);
    if (!out) throw std::runtime_error("cannot write " + args.out);
    write_csv(out, result);
  }
  int code = result.exit_code();
  if (code == kViolation) std::cerr << "invariant violations found\n";
  if (code == kGuardExceeded) std::cerr << "oracle guard exceeded\n";
  return code;
}

int cmd_verify() {
  auto results = run_acceptance();
  print_acceptance(std::cout, results);
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online makespan scheduling with bounded migration"};
  app.require_subcommand(1);

  std::size_t alpha_m = 2;
  bool alpha_table = false;
  auto* alpha = app.add_subcommand("alpha", "Exact competitive ratio alpha_m and removal cap mu");
  alpha->add_option("--m", alpha_m, "Number of machines")->required()->check(CLI::Range(2, 1000000));
  alpha->add_flag("--table", alpha_table, "Print every m from 2 up to --m");

  std::string alg = "opt", c, instance_path, trace;
  bool check = false, use_float = false;
  auto* run = app.add_subcommand("run", "Run one algorithm on an instance file");
  run->add_option("--alg", alg, "opt, c or list")->check(CLI::IsMember({"opt", "c", "list"}));
  run->add_option("--c", c, "Target ratio for --alg c, e.g. 5/3");
  run->add_option("--instance", instance_path, "Instance file")->required();
  run->add_flag("--check", check, "Replay the log and compare with the exact optimum");
  run->add_option("--trace", trace, "Write the event log as JSON lines");
  run->add_flag("--float", use_float, "Use binary doubles instead of exact rationals");

  std::string replay_instance, replay_trace;
  auto* replay = app.add_subcommand("replay", "Rebuild a schedule from a trace file");
  replay->add_option("--instance", replay_instance, "Instance file")->required();
  replay->add_option("--trace", replay_trace, "Trace file")->required();

  std::string opt_instance;
  auto* opt = app.add_subcommand("opt", "Exact optimal makespan");
  opt->add_option("--instance", opt_instance, "Instance file")->required();

  std::string adv_alg = "opt", adv_c, eps = "1/1000";
  std::size_t adv_m = 2, nprime = 100;
  auto* adversary = app.add_subcommand("adversary", "Play the lower-bound adversary");
  adversary->add_option("--alg", adv_alg, "opt, c or list")->check(CLI::IsMember({"opt", "c", "list"}));
  adversary->add_option("--c", adv_c, "Target ratio for --alg c");
  adversary->add_option("--m", adv_m, "Number of machines")->required();
  adversary->add_option("--nprime", nprime, "Phase-one job count, a multiple of m")->required();
  adversary->add_option("--eps", eps, "Size parameter of the overload branch");

  GenSpec gen_spec;
  std::string kind = "uniform", params, gen_out;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", kind, "uniform, geometric, shrinking-stress or adversarial");
  gen->add_option("--n", gen_spec.n, "Number of jobs");
  gen->add_option("--m", gen_spec.m, "Number of machines");
  gen->add_option("--seed", gen_spec.seed, "Random seed");
  gen->add_option("--params", params, "key=value,... generator parameters");
  gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

  BatchArgs batch_args;
  auto* batch_cmd = app.add_subcommand("batch", "Run algorithms over many instances, CSV out");
  batch_cmd->add_option("--algs", batch_args.algs, "Algorithms: opt, list, c:<frac>")->delimiter(',');
  batch_cmd->add_option("--instances", batch_args.instances, "Instance files");
  batch_cmd->add_option("--kind", batch_args.kind, "Generator kind for --count instances");
  batch_cmd->add_option("--count", batch_args.count, "Number of generated instances");
  batch_cmd->add_option("--n", batch_args.n, "Jobs per generated instance");
  batch_cmd->add_option("--m", batch_args.m, "Machines per generated instance");
  batch_cmd->add_option("--seed", batch_args.seed, "First seed");
  batch_cmd->add_option("--params", batch_args.params, "Generator parameters");
  batch_cmd->add_flag("--check", batch_args.check, "Run the invariant suite and the oracle");
  batch_cmd->add_flag("--require-opt", batch_args.require_opt, "Exit 3 when the oracle guard is exceeded");
  batch_cmd->add_flag("--float", batch_args.use_float, "Use binary doubles");
  batch_cmd->add_option("--threads", batch_args.threads, "Worker threads (0: all cores)");
  batch_cmd->add_option("--out", batch_args.out, "CSV file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*alpha) return cmd_alpha(alpha_m, alpha_table);
    if (*run) return cmd_run(alg, c, instance_path, check, trace, use_float);
    if (*replay) return cmd_replay(replay_instance, replay_trace);
    if (*opt) {
      std::cout << to_fraction(opt_makespan(load_instance(opt_instance))) << '\n';
      return 0;
    }
    if (*adversary) {
      auto scheduler = make_scheduler(alg_from(adv_alg, adv_c), adv_m);
      AdversaryOutcome outcome = play_adversary(*scheduler, adv_m, nprime, parse_rational(eps));
      std::cout << outcome_to_json(outcome) << '\n';
      return 0;
    }
    if (*gen) {
      gen_spec.kind = parse_kind(kind);
      gen_spec.params = parse_params(params);
      return cmd_gen(gen_spec, gen_out);
    }
    if (*batch_cmd) return cmd_batch(batch_args);
    if (*verify) return cmd_verify();
  } catch (const OracleGuardExceeded& e) {
    std::cerr << e.what() << '\n';
    return kGuardExceeded;
  } catch (const InvariantViolation& e) {
    std::cerr << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
