#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace migsched {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an integer, a fraction `num/den`, or a plain decimal such as
/// `0.125`. The result is exact and canonical. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always `num/den`, also for integers (`3/1`).
std::string to_fraction(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Rounds half away from zero to `digits` significant digits.
std::string to_significant(const Rational& value, int digits);

double to_double(const Rational& value);

// Scalar plumbing for the algorithm templates, which run over either exact
// rationals or binary doubles.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& value) { return value; }
  static Rational to_rational(const Rational& value) { return value; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& value) { return value.get_d(); }
  static Rational to_rational(double value) { return Rational(value); }
};

}  // namespace migsched
