#pragma once
// Exact integer/rational arithmetic aliases and small helpers shared by all
// modules.  Everything here is GMP-backed and exact; no rounding anywhere.

#include <gmpxx.h>
#include <string>
#include <vector>

namespace dirforms {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// lcm(1, 2, ..., N) computed as the product over primes p <= N of the largest
// power of p not exceeding N.  N = 0 gives 1.
Integer lcm_upto(long N);

// Parse "p", "-p", "p/q" (q > 0 after canonicalization).  Throws
// std::invalid_argument on anything else, including q = 0.
Rational parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& q);

// true iff q is an integer.
bool is_integer(const Rational& q);

// Dense integer polynomials, coefficients ascending by degree.  Used for the
// exact expansion work in the evaluation module; kept here because they are
// plain arithmetic with no module-specific policy.
using IPoly = std::vector<Integer>;
IPoly poly_mul(const IPoly& a, const IPoly& b);
IPoly poly_pow(const IPoly& a, long e);

}  // namespace dirforms
