#include "migsched/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace migsched {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer pow10(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)));
    Integer den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    Rational value(num, den);
    value.canonicalize();
    return value;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("not a decimal: '" + std::string(s) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    Rational value(Integer(digits, 10), pow10(frac.size()));
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }

  return Rational(parse_integer(s));
}

std::string to_fraction(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::string to_significant(const Rational& value, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (value == 0) return "0";

  Rational magnitude = abs(value);
  // Decimal exponent e with 10^e <= magnitude < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(floor(magnitude).get_mpz_t(), 10)) - 1;
  if (magnitude < 1) {
    e = -1;
    Rational probe = magnitude * 10;
    while (probe < 1) {
      probe *= 10;
      --e;
    }
  } else {
    while (Rational(pow10(static_cast<unsigned long>(e))) > magnitude) --e;
    while (Rational(pow10(static_cast<unsigned long>(e + 1))) <= magnitude) ++e;
  }

  // scaled = magnitude * 10^(digits-1-e), rounded half up.
  long shift = digits - 1 - e;
  Rational scaled = magnitude;
  if (shift >= 0) {
    scaled *= Rational(pow10(static_cast<unsigned long>(shift)));
  } else {
    scaled /= Rational(pow10(static_cast<unsigned long>(-shift)));
  }
  Integer rounded = floor(scaled + Rational(1, 2));
  std::string body = rounded.get_str();
  // Rounding may carry into a new digit (9.99 -> 10.0).
  if (static_cast<int>(body.size()) > digits) {
    body.pop_back();
    ++e;
    --shift;
  }

  std::string out;
  if (shift <= 0) {
    out = body + std::string(static_cast<std::size_t>(-shift), '0');
  } else if (static_cast<std::size_t>(shift) >= body.size()) {
    out = "0." + std::string(static_cast<std::size_t>(shift) - body.size(), '0') + body;
  } else {
    out = body.substr(0, body.size() - static_cast<std::size_t>(shift)) + "." +
          body.substr(body.size() - static_cast<std::size_t>(shift));
  }
  return value < 0 ? "-" + out : out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace migsched
