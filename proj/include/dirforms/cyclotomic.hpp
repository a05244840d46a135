#pragma once
// Exact arithmetic in Q[x]/Phi_N(x), just enough to decide whether the
// oscillator sums b_lambda (rational combinations of 2d-th roots of unity)
// are exactly zero.  Numeric comparison can only say "small"; this says "is".

#include <vector>

#include "dirforms/cplx.hpp"
#include "dirforms/rational.hpp"
#include "dirforms/series.hpp"

namespace dirforms {

// Coefficients of the N-th cyclotomic polynomial, ascending, exact.
std::vector<Integer> cyclotomic_poly(long N);

// An element of Q[x]/Phi_N(x): rational coefficient vector of length
// deg Phi_N (ascending powers of the residue of x).
struct CycloElt {
  long N = 1;
  std::vector<Rational> c;
  bool is_zero() const;
};

// c * x^e reduced mod Phi_N.
CycloElt cyclo_monomial(long N, long e, const Rational& coeff);
CycloElt cyclo_add(const CycloElt& a, const CycloElt& b);

// Evaluate at x = exp(2 pi i / N) numerically (for cross-checking the exact
// representation against floating evaluation).
Complex cyclo_eval(const CycloElt& a, long digits);

}  // namespace dirforms
