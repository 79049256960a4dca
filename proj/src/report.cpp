#include "migsched/report.hpp"

namespace migsched {

Rational safe_ratio(const Rational& makespan, const Rational& bound) {
  if (bound == 0) return makespan == 0 ? Rational(1) : Rational(0);
  return makespan / bound;
}

void attach_opt(RunReport& report, const Rational& opt) {
  report.opt = opt;
  report.ratio_vs_opt = safe_ratio(report.makespan, opt);
}

}  // namespace migsched
