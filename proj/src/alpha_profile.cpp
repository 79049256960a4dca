#include "migsched/alpha_profile.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace migsched {

namespace {

std::mutex harmonic_mutex;
std::vector<Rational> harmonic_cache{Rational(0)};

// ceil((1 - 1/alpha) m)
Integer piece_index(std::size_t m, const Rational& alpha) {
  return ceil((1 - 1 / alpha) * Rational(static_cast<unsigned long>(m)));
}

// Value of the linear piece k at alpha.
Rational piece_value(std::size_t m, std::size_t k, const Rational& alpha) {
  Rational span = harmonic(m - 1) - harmonic(k - 1);
  Rational mm(static_cast<unsigned long>(m));
  Rational kk(static_cast<unsigned long>(k));
  return (alpha - 1) * span + kk * alpha / mm;
}

// Root of (alpha-1) S + k alpha / m = 1 on piece k, where S = H_{m-1} - H_{k-1}.
Rational piece_root(std::size_t m, std::size_t k) {
  Rational span = harmonic(m - 1) - harmonic(k - 1);
  Rational slope = span + Rational(static_cast<unsigned long>(k), static_cast<unsigned long>(m));
  slope.canonicalize();
  return (1 + span) / slope;
}

void require_machines(std::size_t m) {
  if (m < 2) throw std::invalid_argument("machine count must be at least 2");
}

// RAII holder for an MPFR number.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~BigFloat() { mpfr_clear(value_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
  }

 private:
  mpfr_t value_;
};

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

enum class Sign { negative, positive, unknown };

// Certified sign of g(x) = e^x - e (x + 1) for an exactly representable x.
Sign certified_sign(mpfr_srcptr x, mpfr_prec_t bits) {
  BigFloat one(bits), e_lo(bits), e_hi(bits), x1_lo(bits), x1_hi(bits);
  BigFloat exp_lo(bits), exp_hi(bits), t_lo(bits), t_hi(bits), g_lo(bits), g_hi(bits);

  mpfr_set_ui(one.get(), 1, MPFR_RNDN);
  mpfr_exp(e_lo.get(), one.get(), MPFR_RNDD);
  mpfr_exp(e_hi.get(), one.get(), MPFR_RNDU);
  mpfr_add_ui(x1_lo.get(), x, 1, MPFR_RNDD);
  mpfr_add_ui(x1_hi.get(), x, 1, MPFR_RNDU);
  mpfr_exp(exp_lo.get(), x, MPFR_RNDD);
  mpfr_exp(exp_hi.get(), x, MPFR_RNDU);
  // x + 1 > 0 on the search interval, so the products keep their rounding side.
  mpfr_mul(t_hi.get(), e_hi.get(), x1_hi.get(), MPFR_RNDU);
  mpfr_mul(t_lo.get(), e_lo.get(), x1_lo.get(), MPFR_RNDD);
  mpfr_sub(g_lo.get(), exp_lo.get(), t_hi.get(), MPFR_RNDD);
  mpfr_sub(g_hi.get(), exp_hi.get(), t_lo.get(), MPFR_RNDU);

  if (mpfr_sgn(g_lo.get()) > 0) return Sign::positive;
  if (mpfr_sgn(g_hi.get()) < 0) return Sign::negative;
  return Sign::unknown;
}

}  // namespace

Rational harmonic(std::size_t k) {
  std::lock_guard lock(harmonic_mutex);
  while (harmonic_cache.size() <= k) {
    auto i = static_cast<unsigned long>(harmonic_cache.size());
    harmonic_cache.push_back(harmonic_cache.back() + Rational(1, i));
  }
  return harmonic_cache[k];
}

Rational f_m(std::size_t m, const Rational& alpha) {
  require_machines(m);
  if (alpha <= 1) throw std::invalid_argument("f_m requires alpha > 1");
  Integer k = piece_index(m, alpha);
  return piece_value(m, k.get_ui(), alpha);
}

AlphaProfile make_profile(std::size_t m, const Rational& alpha) {
  require_machines(m);
  AlphaProfile profile;
  profile.m = m;
  profile.alpha = alpha;
  Rational mm(static_cast<unsigned long>(m));
  profile.k_break = floor(mm / alpha).get_ui();
  profile.beta.reserve(m);
  Rational excess = alpha - 1;
  for (std::size_t j = 1; j <= m; ++j) {
    if (j <= profile.k_break) {
      Rational scale(static_cast<unsigned long>(m), static_cast<unsigned long>(m - j));
      scale.canonicalize();
      profile.beta.push_back(excess * scale);
    } else {
      profile.beta.push_back(alpha);
    }
  }
  profile.mu = ceil((2 - alpha) / (excess * excess)).get_si() + 4;
  return profile;
}

AlphaProfile solve_alpha(std::size_t m) {
  require_machines(m);
  // Piece k covers alpha in (m/(m-k+1), m/(m-k)]. f_m is increasing, so the
  // root lies on the first piece whose right end already reaches 1.
  auto right_end_reaches_one = [m](std::size_t k) {
    Rational right(static_cast<unsigned long>(m), static_cast<unsigned long>(m - k));
    right.canonicalize();
    return piece_value(m, k, right) >= 1;
  };
  std::size_t lo = 1, hi = m - 1;
  if (!right_end_reaches_one(hi)) throw std::logic_error("f_m never reaches 1");
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (right_end_reaches_one(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Rational alpha = piece_root(m, lo);
  if (piece_index(m, alpha) != static_cast<unsigned long>(lo) || f_m(m, alpha) != 1) {
    throw std::logic_error("alpha_m solver produced an inconsistent piece");
  }
  return make_profile(m, alpha);
}

Rational solve_alpha_scan(std::size_t m) {
  require_machines(m);
  Rational found;
  int consistent = 0;
  for (std::size_t k = 1; k < m; ++k) {
    Rational candidate = piece_root(m, k);
    if (candidate > 1 && piece_index(m, candidate) == static_cast<unsigned long>(k)) {
      if (consistent == 0) found = candidate;
      ++consistent;
    }
  }
  if (consistent != 1) {
    throw std::logic_error("expected exactly one consistent piece, found " +
                           std::to_string(consistent));
  }
  return found;
}

LimitConstant limit_constant(int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");

  Rational target_width(1);
  for (int i = 0; i < precision + 2; ++i) target_width /= 10;

  for (int working = precision + 8;; working *= 2) {
    mpfr_prec_t bits = bits_for_digits(working);
    BigFloat lo(bits), hi(bits), mid(bits);
    mpfr_set_ui(lo.get(), 2, MPFR_RNDN);
    mpfr_set_ui(hi.get(), 3, MPFR_RNDN);
    if (certified_sign(lo.get(), bits) != Sign::negative ||
        certified_sign(hi.get(), bits) != Sign::positive) {
      throw std::logic_error("x e + e = e^x is not bracketed by [2, 3]");
    }

    LimitConstant result;
    for (;;) {
      // alpha = 1 + 1/x is decreasing in x.
      result.x = {lo.to_rational(), hi.to_rational()};
      result.alpha = {1 + 1 / result.x.upper, 1 + 1 / result.x.lower};
      if (result.alpha.width() < target_width) break;
      mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);  // exact at this precision
      Sign sign = certified_sign(mid.get(), bits);
      if (sign == Sign::unknown) break;
      mpfr_set(sign == Sign::positive ? hi.get() : lo.get(), mid.get(), MPFR_RNDN);
    }
    if (result.alpha.width() >= target_width) continue;  // retry with more bits

    Rational centre = (result.alpha.lower + result.alpha.upper) / 2;
    result.decimal = to_significant(centre, precision);
    result.rounded = parse_rational(result.decimal);
    return result;
  }
}

Enclosure cesaro_gap(std::size_t m, int digits) {
  if (m < 1) throw std::invalid_argument("cesaro_gap requires m >= 1");
  mpfr_prec_t bits = bits_for_digits(digits);
  Rational h = harmonic(m);

  BigFloat h_lo(bits), h_hi(bits), log_lo(bits), log_hi(bits), prod(bits);
  BigFloat gamma_lo(bits), gamma_hi(bits), lo(bits), hi(bits);

  mpfr_set_q(h_lo.get(), h.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h_hi.get(), h.get_mpq_t(), MPFR_RNDU);

  Integer product = Integer(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m + 1);
  mpfr_set_z(prod.get(), product.get_mpz_t(), MPFR_RNDN);
  if (mpfr_cmp_z(prod.get(), product.get_mpz_t()) != 0) {
    throw std::logic_error("m(m+1) not representable at working precision");
  }
  mpfr_log(log_lo.get(), prod.get(), MPFR_RNDD);
  mpfr_log(log_hi.get(), prod.get(), MPFR_RNDU);
  mpfr_div_2ui(log_lo.get(), log_lo.get(), 1, MPFR_RNDD);
  mpfr_div_2ui(log_hi.get(), log_hi.get(), 1, MPFR_RNDU);

  mpfr_const_euler(gamma_lo.get(), MPFR_RNDD);
  mpfr_const_euler(gamma_hi.get(), MPFR_RNDU);

  mpfr_sub(lo.get(), h_lo.get(), log_hi.get(), MPFR_RNDD);
  mpfr_sub(lo.get(), lo.get(), gamma_hi.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), h_hi.get(), log_lo.get(), MPFR_RNDU);
  mpfr_sub(hi.get(), hi.get(), gamma_lo.get(), MPFR_RNDU);

  return {lo.to_rational(), hi.to_rational()};
}

}  // namespace migsched
