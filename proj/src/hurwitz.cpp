#include "dirforms/hurwitz.hpp"

#include <cmath>
#include <stdexcept>

#include "dirforms/bernoulli.hpp"

namespace dirforms {

namespace {

// Direct summation with an integral tail bound; used when j is so large that
// the series converges geometrically on its own.
Real hurwitz_direct(long j, const Rational& x, long W, Real* error_bound) {
  PrecisionGuard guard(W);
  Real xr = to_real(x, W);
  Real sum = 0;
  Real eps = pow(Real(10), -Real(W - 5));
  long k = 0;
  for (;;) {
    Real base = xr + k;
    Real term = pow(base, -static_cast<long>(j));
    sum += term;
    // remaining tail <= next term + integral: (base+1)^(-j) (1 + (base+1)/(j-1))
    Real nb = base + 1;
    Real bound = pow(nb, -static_cast<long>(j)) * (1 + nb / (j - 1));
    if (bound < eps * sum) {
      if (error_bound) *error_bound = bound;
      return sum;
    }
    ++k;
    if (k > 8 * W + 64)
      throw std::logic_error("hurwitz_direct: no convergence (bad dispatch)");
  }
}

// One Euler-Maclaurin pass at working precision W.  Returns the value and a
// rigorous absolute truncation bound, or throws if the asymptotic series
// failed to reach the target before its terms turned around (caller then
// retries with a larger shift N).
struct EmResult {
  Real value;
  Real bound;
  bool ok;
};

EmResult hurwitz_em_pass(long j, const Rational& x, long N, long W) {
  PrecisionGuard guard(W);
  Real xr = to_real(x, W);
  Real sum = 0;
  for (long k = 0; k < N; ++k) sum += pow(xr + k, -static_cast<long>(j));

  Real z = xr + N;
  // integral head and half-term
  Real zpj = pow(z, -static_cast<long>(j));
  sum += z * zpj / (j - 1) + zpj / 2;

  Real eps = pow(Real(10), -Real(W - 5)) * abs(sum);
  Real inv_z2 = 1 / (z * z);
  // B_{2i}/(2i)! * (j)(j+1)...(j+2i-2) * z^(-j-2i+1)
  Integer poch(j);            // after i-th step: j...(j+2i-2)
  Integer fact(2);            // (2i)!
  Real zpow = zpj * z * inv_z2;  // z^(-j-1)
  Real prev_abs = -1;
  for (unsigned i = 1; i <= static_cast<unsigned>(8 * W + 64); ++i) {
    Rational coef = bernoulli_2k(i) * Rational(poch, fact);
    coef.canonicalize();
    Real term = to_real(coef, W) * zpow;
    Real ta = abs(term);
    if (prev_abs >= 0 && ta > prev_abs) {
      // divergence reached before target accuracy
      return {sum, ta, false};
    }
    if (ta < eps) {
      // first omitted term bounds the remainder
      return {sum, ta, true};
    }
    sum += term;
    prev_abs = ta;
    // advance: poch *= (j+2i-1)(j+2i), fact *= (2i+1)(2i+2), zpow *= z^-2
    poch *= Integer(j + 2 * i - 1) * Integer(j + 2 * i);
    fact *= Integer(2 * i + 1) * Integer(2 * i + 2);
    zpow *= inv_z2;
  }
  return {sum, Real(0), false};
}

Real hurwitz_impl(long j, const Rational& x, long W, Real* error_bound) {
  if (j >= 3 * W) return hurwitz_direct(j, x, W, error_bound);
  long N = std::max<long>(static_cast<long>(1.2 * W) + 8, 2);
  for (int tries = 0; tries < 6; ++tries) {
    EmResult r = hurwitz_em_pass(j, x, N, W);
    if (r.ok) {
      if (error_bound) *error_bound = r.bound;
      return r.value;
    }
    N *= 2;
  }
  throw std::logic_error("hurwitz_zeta: Euler-Maclaurin did not converge");
}

}  // namespace

Real hurwitz_zeta(long j, const Rational& x, const PrecisionSpec& prec,
                  Real* error_bound, bool validate) {
  if (j < 2) throw std::domain_error("hurwitz_zeta: exponent must be >= 2");
  if (x <= 0) throw std::domain_error("hurwitz_zeta: shift must be positive");
  long W = prec.total() + 10;
  Real v = hurwitz_impl(j, x, W, error_bound);
  if (validate) {
    Real v2 = hurwitz_impl(j, x, W + W / 2 + 10, nullptr);
    Real tol = pow(Real(10), -Real(prec.total())) * (abs(v2) + 1);
    if (abs(v - v2) > tol)
      throw std::logic_error("hurwitz_zeta: two-precision validation failed");
  }
  return v;
}

Real digamma(const Rational& x, const PrecisionSpec& prec) {
  if (x <= 0) throw std::domain_error("digamma: argument must be positive");
  long W = prec.total() + 10;
  PrecisionGuard guard(W);
  long N = std::max<long>(static_cast<long>(1.2 * W) + 8, 2);
  for (int tries = 0; tries < 6; ++tries, N *= 2) {
    Real xr = to_real(x, W);
    Real sum = 0;
    for (long k = 0; k < N; ++k) sum -= 1 / (xr + k);
    Real z = xr + N;
    sum += log(z) - 1 / (2 * z);
    Real eps = pow(Real(10), -Real(W - 5)) * (abs(sum) + 1);
    // - sum_i B_{2i} / (2i z^{2i}), remainder bounded by first omitted term
    Real inv_z2 = 1 / (z * z);
    Real zpow = inv_z2;
    Real prev_abs = -1;
    bool done = false;
    for (unsigned i = 1; i <= static_cast<unsigned>(8 * W + 64); ++i) {
      Rational coef = bernoulli_2k(i) / Rational(2 * static_cast<long>(i));
      coef.canonicalize();
      Real term = to_real(coef, W) * zpow;
      Real ta = abs(term);
      if (prev_abs >= 0 && ta > prev_abs) break;
      if (ta < eps) {
        done = true;
        break;
      }
      sum -= term;
      prev_abs = ta;
      zpow *= inv_z2;
    }
    if (done) return sum;
  }
  throw std::logic_error("digamma: Euler-Maclaurin did not converge");
}

Real zeta_m(long j, long m, long d, const PrecisionSpec& prec) {
  if (m < 1 || m > d) throw std::domain_error("zeta_m: need 1 <= m <= d");
  long W = prec.total() + 10;
  PrecisionGuard guard(W);
  Real v = hurwitz_zeta(j, Rational(m, d), prec, nullptr, false);
  return v * pow(to_real(Rational(1, d), W), static_cast<long>(j));
}

Real L_value_real(const PeriodicSeries& s, long j, const PrecisionSpec& prec) {
  s.validate();
  if (s.has_imag())
    throw std::domain_error("L_value_real: series has imaginary coefficients");
  if (j < 1) throw std::domain_error("L_value_real: exponent must be >= 1");
  long W = prec.total() + 10;
  PrecisionGuard guard(W);
  Real sum = 0;
  if (j == 1) {
    if (s.period_sum_re() != 0)
      throw std::domain_error(
          "L_value_real: weight 1 requires a vanishing period sum");
    for (long m = 1; m <= s.d; ++m) {
      const Rational& am = s.coeff_re(m);
      if (am == 0) continue;
      sum -= to_real(am, W) * digamma(Rational(m, s.d), prec);
    }
    return sum / s.d;
  }
  for (long m = 1; m <= s.d; ++m) {
    const Rational& am = s.coeff_re(m);
    if (am == 0) continue;
    sum += to_real(am, W) * zeta_m(j, m, s.d, prec);
  }
  return sum;
}

std::pair<Real, Real> L_value(const PeriodicSeries& s, long j,
                              const PrecisionSpec& prec) {
  RealifyResult parts = realify(s);
  long W = prec.total() + 10;
  Real re(0, static_cast<unsigned>(W)), im(0, static_cast<unsigned>(W));
  if (parts.real_nonzero) re = L_value_real(parts.real_part, j, prec);
  if (parts.imag_nonzero) im = L_value_real(parts.imag_part, j, prec);
  return {re, im};
}

}  // namespace dirforms
