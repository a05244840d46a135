#pragma once
// The two independent evaluation routes for the linear form
//   I(n) = sum_{k > dn} a_k P(k)
// and their cross-check.  Route one sums the tail itself (direct terms plus a
// certified acceleration of the remainder); route two assembles
// sum_j A_j L(j) - sum_m B_m a_m from the exact rational coefficients and
// high-precision series values.  Agreement of the two is the main functional
// test of the whole construction.

#include <vector>

#include "dirforms/forms.hpp"
#include "dirforms/hurwitz.hpp"
#include "dirforms/mp.hpp"
#include "dirforms/series.hpp"

namespace dirforms {

struct TailResult {
  Real value;
  Real truncation_bound;  // rigorous bound on everything dropped
  long working_digits = 0;
  long direct_terms = 0;
  long laurent_terms = 0;  // 0 when the majorant-extension bound was used
};

// Sum of a_k P(k) over k > dn, accurate to 10^-(digits+guard) relative.
// Requires a real series with the same period d as the form.
TailResult I_tail(const FormParams& p, const PeriodicSeries& s,
                  const PrecisionSpec& prec);

// Same quantity from the linear form side; cancellation between the huge
// rational coefficients is absorbed by a working-precision budget derived
// from the coefficient growth rate, then verified and retried if short.
Real I_from_coeffs(const LinearFormCoeffs& c, const PeriodicSeries& s,
                   const PrecisionSpec& prec);

struct EvalReport {
  long n = 0;
  Real i_tail;
  Real i_coeffs;
  Real truncation_bound;
  double agreement_digits = 0;
  bool pass = false;  // agreement_digits >= digits
};

EvalReport cross_check(const FormParams& p, const PeriodicSeries& s,
                       const PrecisionSpec& prec);

struct RatePoint {
  long n = 0;
  double log_abs_over_n = 0;  // log |I(n)| / n, natural log
};

std::vector<RatePoint> rate_empirical(long d, long a, long b,
                                      const PeriodicSeries& s,
                                      const std::vector<long>& ns,
                                      const PrecisionSpec& prec);

}  // namespace dirforms
