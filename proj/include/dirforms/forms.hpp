#pragma once
// Exact construction of the rational functions P whose tails over arithmetic
// progressions produce rational linear forms in Dirichlet-type series values,
// plus their partial fraction data and the derived linear form coefficients.
// Everything in this module is exact rational arithmetic.

#include <map>
#include <vector>

#include "dirforms/rational.hpp"

namespace dirforms {

struct FormParams {
  long d = 1;  // modulus of the progressions
  long a = 2;  // pole order
  long b = 1;  // zero block half-width multiplier
  long n = 1;  // index of the form
  void validate() const;  // d >= 1, b >= 1, a >= 2b, n >= 1
};

// P(t) = scalar * prod_{dn < l <= (d+2b)n} (t - l)(t + l)
//              / prod_{-n <= l <= n} (t - dl)^a,
// scalar = ((2n)!)^(a-2b) * d^(2na).
struct RationalFunctionRep {
  FormParams p;
  Integer scalar;
  std::vector<long> zeros;  // the positive l; each contributes (t-l)(t+l)
  std::vector<long> poles;  // d*l for l in [-n, n], ascending
  long numerator_degree() const;    // 4bn
  long denominator_degree() const;  // a(2n+1)
  long degree_gap() const;          // 2(a-2b)n + a, always >= 2
};

RationalFunctionRep build_P(const FormParams& p);

// Exact evaluation; throws std::domain_error when t is one of the poles.
Rational eval_P_exact(const RationalFunctionRep& rep, const Rational& t);

// Full decomposition P(t) = sum_{l=-n..n} sum_{j=1..a} A[l][j] / (t - dl)^j.
struct PartialFractionTable {
  FormParams p;
  // A[l + n][j - 1] = A_{l,j}
  std::vector<std::vector<Rational>> A;
  const Rational& coeff(long l, long j) const;
};

PartialFractionTable partial_fractions(const RationalFunctionRep& rep);

// Reassemble the decomposition at a non-pole rational point.
Rational eval_from_table(const PartialFractionTable& t, const Rational& x);

// Identity checks, all exact:
//   residue sum:    sum_l A_{l,1} = 0  (P = O(t^{-2}) at infinity)
//   parity sums:    sum_l A_{l,j} = 0 whenever j and a differ in parity
//   reflection:     A_{-l,j} = (-1)^(a-j) A_{l,j}  (P is even)
bool check_residue_sum(const PartialFractionTable& t);
bool check_parity_sums(const PartialFractionTable& t);
bool check_reflection(const PartialFractionTable& t);

// The rational data of the linear form: tail sums of P over each progression
// class combine to  I = sum_j A_j * L(j) - sum_m B_m * a_m  with
//   A_j = sum_l A_{l,j}            (j = a, a-2, ..., down to 2)
//   B_m = sum_{l,j} A_{l,j} * sum_{K=0}^{n-l-1} (dK + m)^{-j}
// and D = lcm(1..2dn) clears all denominators: D^(a-j) A_{l,j} and
// D^a A_j, D^a B_m are integers.
struct LinearFormCoeffs {
  FormParams p;
  std::map<long, Rational> A;  // j -> A_j over j ≡ a (mod 2), 2 <= j <= a
  std::vector<Rational> B;     // B_1..B_d at index m-1
  Integer D;
  Rational scaled_A(long j) const;  // D^a * A_j
  Rational scaled_B(long m) const;  // D^a * B_m
};

LinearFormCoeffs linear_form_coeffs(const PartialFractionTable& t);

struct IntegralityReport {
  long checked = 0;
  long failures = 0;
  bool ok() const { return failures == 0; }
};
// Verifies D^(a-j) A_{l,j}, D^a A_j and D^a B_m are all integers.
IntegralityReport check_integrality(const PartialFractionTable& t,
                                    const LinearFormCoeffs& c);

// log of the absolute value as a double (0 maps to -inf).
double log_abs(const Rational& q);

// Analytic growth rate bound for max(log|A_j|, log|B_m|) / n:
//   2a log 2 + 4(b+d) log(b+d) - 4d log d.
double coeff_growth_bound(long d, long a, long b);

struct GrowthRow {
  long n = 0;
  double measured = 0;  // max(log|A_j|, log|B_m|) / n
  bool over_bound = false;
};
struct GrowthReport {
  double bound = 0;
  std::vector<GrowthRow> rows;
  bool any_over = false;  // measured > bound + 1.0 anywhere
};
GrowthReport growth_report(const std::vector<LinearFormCoeffs>& cs);

}  // namespace dirforms
