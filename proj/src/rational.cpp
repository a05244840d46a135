#include "dirforms/rational.hpp"

#include <stdexcept>

namespace dirforms {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer lcm_upto(long N) {
  if (N < 0) throw std::invalid_argument("lcm_upto: negative bound");
  Integer acc = 1;
  if (N < 2) return acc;
  // Plain sieve; the bounds in play are a few thousand at most.
  std::vector<bool> composite(static_cast<size_t>(N) + 1, false);
  for (long p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    for (long q = p + p; q <= N; q += p) composite[q] = true;
    long pk = p;
    while (pk <= N / p) pk *= p;  // largest p^k <= N
    acc *= pk;
  }
  return acc;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  // mpq_set_str accepts forms like "12", "-3/4"; reject whitespace and
  // anything mpq can't digest, then canonicalize.
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("parse_rational: bad character in '" + s + "'");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: unparsable '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

IPoly poly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

IPoly poly_pow(const IPoly& a, long e) {
  IPoly r{Integer(1)};
  IPoly base = a;
  while (e > 0) {
    if (e & 1) r = poly_mul(r, base);
    e >>= 1;
    if (e) base = poly_mul(base, base);
  }
  return r;
}

}  // namespace dirforms
