#pragma once
// Exact Bernoulli numbers B_{2k} through tangent numbers (Seidel style
// integer recurrence, no rational gcd churn).  Cached and grown on demand.

#include "dirforms/rational.hpp"

namespace dirforms {

// B_{2k} for k >= 1 (B_2 = 1/6, B_4 = -1/30, ...).
const Rational& bernoulli_2k(unsigned k);

}  // namespace dirforms
