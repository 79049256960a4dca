#include "migsched/online.hpp"

#include <stdexcept>
#include <utility>

#include "migsched/alg_budget.hpp"
#include "migsched/alg_optimal.hpp"
#include "migsched/alpha_profile.hpp"
#include "migsched/baselines.hpp"

namespace migsched {

namespace {

template <class Inner>
class Adapter final : public OnlineScheduler {
 public:
  template <class... Args>
  Adapter(std::string name, Args&&... args) : name_(std::move(name)), inner_(std::forward<Args>(args)...) {}

  std::string name() const override { return name_; }
  std::size_t machines() const override { return inner_.state().machine_count(); }

  void accept(const Job& job) override {
    if (finalized_) throw std::logic_error("accept() after finalize()");
    inner_.accept(job);
  }

  std::vector<Event> finalize() override {
    if (finalized_) throw std::logic_error("finalize() called twice");
    finalized_ = true;
    std::size_t before = inner_.state().events().size();
    inner_.finalize();
    const auto& all = inner_.state().events();
    return {all.begin() + static_cast<std::ptrdiff_t>(before), all.end()};
  }

  std::vector<Rational> loads() const override { return inner_.state().loads(); }
  const std::vector<Event>& events() const override { return inner_.state().events(); }

  std::size_t migrations() const override {
    if constexpr (requires { inner_.migrations(); }) {
      return inner_.migrations();
    } else {
      return 0;
    }
  }

 private:
  std::string name_;
  Inner inner_;
  bool finalized_ = false;
};

}  // namespace

std::string AlgSpec::name() const {
  switch (kind) {
    case Kind::opt:
      return "opt";
    case Kind::list:
      return "list";
    case Kind::c:
      return "c=" + to_fraction(c);
  }
  return {};
}

AlgSpec parse_alg_spec(std::string_view text) {
  AlgSpec spec;
  if (text == "opt") {
    spec.kind = AlgSpec::Kind::opt;
  } else if (text == "list") {
    spec.kind = AlgSpec::Kind::list;
  } else if (text == "c") {
    spec.kind = AlgSpec::Kind::c;
  } else if (text.size() > 2 && text[0] == 'c' && (text[1] == ':' || text[1] == '=')) {
    spec.kind = AlgSpec::Kind::c;
    spec.c = parse_rational(text.substr(2));
    if (spec.c < Rational(5, 3) || spec.c > 2) {
      throw std::invalid_argument("c must lie in [5/3, 2]: " + std::string(text));
    }
  } else {
    throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
  }
  return spec;
}

std::unique_ptr<OnlineScheduler> make_scheduler(const AlgSpec& spec, std::size_t m, bool strict) {
  switch (spec.kind) {
    case AlgSpec::Kind::opt:
      return std::make_unique<Adapter<OptimalScheduler<Rational>>>(spec.name(), solve_alpha(m), strict);
    case AlgSpec::Kind::c:
      return std::make_unique<Adapter<BudgetScheduler<Rational>>>(spec.name(), make_budget_config(m, spec.c),
                                                                  strict);
    case AlgSpec::Kind::list:
      return std::make_unique<Adapter<ListScheduler<Rational>>>(spec.name(), m);
  }
  throw std::invalid_argument("unknown algorithm kind");
}

SchedulerFactory scheduler_factory(const AlgSpec& spec, bool strict) {
  return [spec, strict](std::size_t m) { return make_scheduler(spec, m, strict); };
}

RunReport run_alg(const AlgSpec& spec, const Instance& instance, const RunOptions& options) {
  switch (spec.kind) {
    case AlgSpec::Kind::opt:
      return run_alg_opt(instance, options);
    case AlgSpec::Kind::c:
      return run_alg_c(instance, spec.c, options);
    case AlgSpec::Kind::list:
      return run_list(instance, options);
  }
  throw std::invalid_argument("unknown algorithm kind");
}

}  // namespace migsched
