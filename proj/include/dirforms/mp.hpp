#pragma once
// Arbitrary-precision real type and precision plumbing.  Real is an MPFR
// float with per-variable precision; arithmetic results take the larger
// operand precision, and fresh variables take the thread default.  Public
// operations set the default for their working scope via PrecisionGuard.

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "dirforms/rational.hpp"

namespace dirforms {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

struct PrecisionSpec {
  long digits = 50;  // requested output digits
  long guard = 20;   // extra working digits
  long total() const { return digits + guard; }
};

class PrecisionGuard {
 public:
  explicit PrecisionGuard(long digits10)
      : old_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits10 < 10 ? 10 : digits10));
  }
  ~PrecisionGuard() { Real::default_precision(old_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned old_;
};

inline Real to_real(const Rational& q, long digits10) {
  Real x(0, static_cast<unsigned>(digits10));
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

inline Real to_real(const Integer& z, long digits10) {
  Real x(0, static_cast<unsigned>(digits10));
  mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return x;
}

inline Real const_pi(long digits10) {
  Real x(0, static_cast<unsigned>(digits10));
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

// Deterministic scientific form with `digits` significant digits, e.g.
// "1.6449340668e+00".  Used for all numeric output.
inline std::string real_str(const Real& x, long digits) {
  char* s = nullptr;
  if (digits < 1) digits = 1;
  mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits - 1), x.backend().data());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

// Fixed-point form with exactly `places` digits after the decimal point.
inline std::string real_str_fixed(const Real& x, long places) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", static_cast<int>(places), x.backend().data());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

inline double to_double(const Real& x) { return x.convert_to<double>(); }

// log10 |x| as double; -inf for zero.  Safe for magnitudes far outside
// double range.
inline double log10_abs(const Real& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  mpfr_exp_t e = mpfr_get_exp(x.backend().data());
  // |x| = m * 2^e with m in [1/2, 1)
  Real m = abs(x);
  mpfr_div_2si(m.backend().data(), m.backend().data(), e, MPFR_RNDN);
  return std::log10(m.convert_to<double>()) + static_cast<double>(e) * std::log10(2.0);
}

}  // namespace dirforms
