#include "dirforms/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace dirforms {

namespace {

// Exact division of integer polynomials, ascending coefficients; the
// divisor must be monic up to sign and divide exactly.
std::vector<Integer> poly_divexact(std::vector<Integer> num,
                                   const std::vector<Integer>& den) {
  if (den.empty() || num.size() < den.size())
    throw std::logic_error("poly_divexact: bad degrees");
  std::vector<Integer> q(num.size() - den.size() + 1);
  const Integer& lead = den.back();
  for (size_t i = q.size(); i-- > 0;) {
    Integer qi = num[i + den.size() - 1] / lead;
    q[i] = qi;
    if (qi == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= qi * den[j];
  }
  for (const Integer& v : num)
    if (v != 0) throw std::logic_error("poly_divexact: nonzero remainder");
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_poly(long N) {
  static std::map<long, std::vector<Integer>> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  if (N < 1) throw std::invalid_argument("cyclotomic_poly: N must be >= 1");
  // x^N - 1 divided by the product of Phi_e over proper divisors e of N.
  std::vector<Integer> num(static_cast<size_t>(N) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<size_t>(N)] = 1;
  std::vector<Integer> out;
  if (N == 1) {
    out = {Integer(-1), Integer(1)};
  } else {
    out = num;
    for (long e = 1; e < N; ++e)
      if (N % e == 0) out = poly_divexact(out, cyclotomic_poly(e));
  }
  cache[N] = out;
  return out;
}

bool CycloElt::is_zero() const {
  for (const auto& q : c)
    if (q != 0) return false;
  return true;
}

CycloElt cyclo_monomial(long N, long e, const Rational& coeff) {
  std::vector<Integer> phi = cyclotomic_poly(N);
  long deg = static_cast<long>(phi.size()) - 1;
  CycloElt out;
  out.N = N;
  out.c.assign(static_cast<size_t>(deg), Rational(0));
  e %= N;
  if (e < 0) e += N;
  // dense polynomial x^e reduced mod Phi_N (monic), coefficients rational
  std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
  poly[static_cast<size_t>(e)] = coeff;
  for (long i = static_cast<long>(poly.size()) - 1; i >= deg; --i) {
    Rational lead = poly[static_cast<size_t>(i)];
    if (lead == 0) continue;
    poly[static_cast<size_t>(i)] = 0;
    for (long j = 0; j < deg; ++j)
      poly[static_cast<size_t>(i - deg + j)] -= lead * Rational(phi[static_cast<size_t>(j)]);
  }
  for (long j = 0; j < deg && j < static_cast<long>(poly.size()); ++j)
    out.c[static_cast<size_t>(j)] = poly[static_cast<size_t>(j)];
  return out;
}

CycloElt cyclo_add(const CycloElt& a, const CycloElt& b) {
  if (a.N != b.N) throw std::invalid_argument("cyclo_add: mixed moduli");
  CycloElt out = a;
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

Complex cyclo_eval(const CycloElt& a, long digits) {
  PrecisionGuard guard(digits + 10);
  Real two_pi = 2 * const_pi(digits + 10);
  Complex sum;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    Real ang = two_pi * Real(static_cast<long>(i)) / Real(a.N);
    Complex root(cos(ang), sin(ang));
    sum = sum + to_real(a.c[i], digits + 10) * root;
  }
  return sum;
}

}  // namespace dirforms
