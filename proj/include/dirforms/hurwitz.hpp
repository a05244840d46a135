#pragma once
// Euler-Maclaurin evaluation of Hurwitz zeta at integer exponent, digamma,
// and the periodic Dirichlet series values built from them.  Remainders are
// bounded by the first omitted asymptotic term, which is valid here because
// the integrands are completely monotone.

#include <utility>

#include "dirforms/mp.hpp"
#include "dirforms/series.hpp"

namespace dirforms {

// zeta(j, x) = sum_{k>=0} (k+x)^(-j); j >= 2, x > 0 rational.
// error_bound (optional) receives a rigorous absolute bound on the
// truncation error.  validate=true recomputes at higher precision and
// cross-checks (throws std::logic_error on disagreement).
Real hurwitz_zeta(long j, const Rational& x, const PrecisionSpec& prec,
                  Real* error_bound = nullptr, bool validate = true);

// psi(x) = digamma, x > 0 rational.
Real digamma(const Rational& x, const PrecisionSpec& prec);

// d^(-j) * zeta(j, m/d): the sum of k^(-j) over k ≡ m (mod d), k > 0.
Real zeta_m(long j, long m, long d, const PrecisionSpec& prec);

// L(j) = sum_k a_k k^(-j) for a real-coefficient periodic series.
// j >= 2 always converges; j = 1 requires the period sum to vanish
// (conditional convergence) and is evaluated via the digamma identity
// L(1) = -(1/d) sum_m a_m psi(m/d).
Real L_value_real(const PeriodicSeries& s, long j, const PrecisionSpec& prec);

// Complex-coefficient version; returns (real part, imaginary part).
std::pair<Real, Real> L_value(const PeriodicSeries& s, long j,
                              const PrecisionSpec& prec);

}  // namespace dirforms
