#include "fracpde/mittag_leffler.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace fracpde {

namespace {

constexpr int kMaxTerms = 10000;
constexpr long kMaxBits = 16384;

// Peak of ln|z^k / Gamma(alpha k + beta)| over k, by direct scan of the
// log-envelope. Cheap (lgamma per candidate k) and robust.
double series_peak_log(double alpha, double beta, double absz) {
  if (absz <= 1.0) return 0.0;
  const double lz = std::log(absz);
  double peak = 0.0;
  double prev = -std::lgamma(beta);
  for (int k = 1; k < kMaxTerms; ++k) {
    double lt = k * lz - std::lgamma(alpha * k + beta);
    peak = std::max(peak, lt);
    if (lt < prev && lt < peak - 50.0) break;
    prev = lt;
  }
  return peak;
}

Complex sum_double(double alpha, double beta, Complex z) {
  Complex sum(0.0), comp(0.0);  // Kahan compensation
  Complex zk(1.0);
  for (int k = 0; k < kMaxTerms; ++k) {
    const double g = std::lgamma(alpha * k + beta);
    if (g > 700.0) break;  // term underflows regardless of z^k
    Complex term = zk * std::exp(-g);
    Complex y = term - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > 2) return sum;
    zk *= z;
    if (!std::isfinite(zk.real()) || !std::isfinite(zk.imag()))
      throw ConvergenceError("mittag_leffler: series overflow in double path");
  }
  return sum;
}

// Complex arithmetic on mpfr re/im pairs, just enough for the series.
struct MpComplex {
  mpfr_t re, im;
  explicit MpComplex(long prec) {
    mpfr_init2(re, prec);
    mpfr_init2(im, prec);
    mpfr_set_d(re, 0.0, MPFR_RNDN);
    mpfr_set_d(im, 0.0, MPFR_RNDN);
  }
  ~MpComplex() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
  MpComplex(const MpComplex&) = delete;
  MpComplex& operator=(const MpComplex&) = delete;
};

Complex sum_mpfr(double alpha, double beta, Complex z, long prec) {
  MpComplex sum(prec), zk(prec), term(prec);
  mpfr_t zre, zim, g, tmp1, tmp2, arg, alpha_mp;
  mpfr_inits2(prec, zre, zim, g, tmp1, tmp2, arg, alpha_mp, (mpfr_ptr) nullptr);
  mpfr_set_d(zre, z.real(), MPFR_RNDN);
  mpfr_set_d(zim, z.imag(), MPFR_RNDN);
  mpfr_set_d(zk.re, 1.0, MPFR_RNDN);
  mpfr_set_d(alpha_mp, alpha, MPFR_RNDN);

  const double lz = std::log(std::max(std::abs(z), 1e-300));
  bool converged = false;
  double env_peak = -1e300, env_prev = -1e300;
  for (int k = 0; k < kMaxTerms; ++k) {
    // term = zk / Gamma(alpha k + beta); the Gamma argument must be formed at
    // working precision -- a double-rounded alpha*k shifts Gamma by enough to
    // poison peak-sized terms.
    mpfr_mul_ui(arg, alpha_mp, static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_add_d(arg, arg, beta, MPFR_RNDN);
    mpfr_gamma(g, arg, MPFR_RNDN);
    mpfr_div(term.re, zk.re, g, MPFR_RNDN);
    mpfr_div(term.im, zk.im, g, MPFR_RNDN);
    mpfr_add(sum.re, sum.re, term.re, MPFR_RNDN);
    mpfr_add(sum.im, sum.im, term.im, MPFR_RNDN);

    // Stop once past the envelope peak and 80 bits below it.
    const double env = k * lz - std::lgamma(alpha * k + beta);
    env_peak = std::max(env_peak, env);
    if (k > 2 && env < env_prev && env < env_peak - 0.70 * prec) {
      converged = true;
      break;
    }
    env_prev = env;

    // zk *= z
    mpfr_mul(tmp1, zk.re, zre, MPFR_RNDN);
    mpfr_mul(tmp2, zk.im, zim, MPFR_RNDN);
    mpfr_sub(tmp1, tmp1, tmp2, MPFR_RNDN);
    mpfr_mul(tmp2, zk.re, zim, MPFR_RNDN);
    mpfr_mul(zk.im, zk.im, zre, MPFR_RNDN);
    mpfr_add(zk.im, zk.im, tmp2, MPFR_RNDN);
    mpfr_set(zk.re, tmp1, MPFR_RNDN);
  }
  Complex out(mpfr_get_d(sum.re, MPFR_RNDN), mpfr_get_d(sum.im, MPFR_RNDN));
  mpfr_clears(zre, zim, g, tmp1, tmp2, arg, alpha_mp, (mpfr_ptr) nullptr);
  if (!converged)
    throw ConvergenceError("mittag_leffler: series did not converge within 10^4 terms");
  return out;
}

}  // namespace

Complex mittag_leffler(double alpha, double beta, Complex z) {
  if (!(alpha > 0.0)) throw DomainError("mittag_leffler: alpha must be positive");
  if (!(beta > 0.0)) throw DomainError("mittag_leffler: beta must be positive");
  const double absz = std::abs(z);
  if (absz > 50.0)
    throw DomainError("mittag_leffler: |z| exceeds the oracle envelope (50)");
  if (absz == 0.0) return Complex(1.0 / std::tgamma(beta), 0.0);

  const double peak = series_peak_log(alpha, beta, absz);
  if (peak < 9.0) return sum_double(alpha, beta, z);

  const long prec = 96 + static_cast<long>(peak / std::log(2.0));
  if (prec > kMaxBits)
    throw ConvergenceError("mittag_leffler: cancellation exceeds the precision budget");
  return sum_mpfr(alpha, beta, z, prec);
}

}  // namespace fracpde
