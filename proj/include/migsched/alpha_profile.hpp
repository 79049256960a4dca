#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "migsched/rational.hpp"

namespace migsched {

/// Competitive-ratio constant for m machines together with the small-job
/// load profile that ALG(alpha_m) maintains.
struct AlphaProfile {
  std::size_t m = 0;
  Rational alpha;
  /// beta[j-1] is the profile coefficient of machine j, j = 1..m.
  std::vector<Rational> beta;
  /// Per-machine removal cap ceil((2 - alpha)/(alpha - 1)^2) + 4.
  long mu = 0;
  /// floor(m / alpha); machines 1..k_break follow the harmonic part.
  std::size_t k_break = 0;

  const Rational& beta_of(std::size_t machine) const { return beta.at(machine - 1); }
};

/// Exact H_k = 1 + 1/2 + ... + 1/k, H_0 = 0. Values are cached process-wide.
Rational harmonic(std::size_t k);

/// f_m(alpha) = (alpha-1)(H_{m-1} - H_{k-1}) + k*alpha/m with
/// k = ceil((1 - 1/alpha) m). Requires m >= 2 and alpha > 1.
Rational f_m(std::size_t m, const Rational& alpha);

/// The unique alpha with f_m(alpha) = 1, plus beta, mu and k_break.
AlphaProfile solve_alpha(std::size_t m);

/// Reference solver: tries every linear piece k = 1..m-1 in ascending order
/// and throws std::logic_error unless exactly one piece is consistent.
Rational solve_alpha_scan(std::size_t m);

/// Profile built around a known alpha (used by solve_alpha and by tests).
AlphaProfile make_profile(std::size_t m, const Rational& alpha);

/// Exact lower/upper endpoints of a verified enclosure.
struct Enclosure {
  Rational lower;
  Rational upper;
  Rational width() const { return upper - lower; }
};

struct LimitConstant {
  /// Encloses W_{-1}(-1/e^2) / (1 + W_{-1}(-1/e^2)).
  Enclosure alpha;
  /// Encloses the root x > 1 of x e + e = e^x; alpha = 1 + 1/x.
  Enclosure x;
  /// alpha rounded to `precision` significant digits.
  std::string decimal;
  Rational rounded;
};

/// Limit of alpha_m as m grows, found by bisection on x e + e = e^x over
/// [2, 3] under directed rounding. The alpha enclosure is narrower than
/// 10^-(precision+2).
LimitConstant limit_constant(int precision);

/// Encloses H_m - ln(m(m+1))/2 - gamma at `digits` decimal digits of working
/// precision.
Enclosure cesaro_gap(std::size_t m, int digits = 50);

}  // namespace migsched
