#include "dirforms/forms.hpp"

#include <cmath>
#include <stdexcept>

namespace dirforms {

void FormParams::validate() const {
  if (d < 1) throw std::invalid_argument("params: d must be >= 1");
  if (b < 1) throw std::invalid_argument("params: b must be >= 1");
  if (a < 2 * b) throw std::invalid_argument("params: need a >= 2b");
  if (n < 1) throw std::invalid_argument("params: n must be >= 1");
}

long RationalFunctionRep::numerator_degree() const { return 4 * p.b * p.n; }
long RationalFunctionRep::denominator_degree() const {
  return p.a * (2 * p.n + 1);
}
long RationalFunctionRep::degree_gap() const {
  return denominator_degree() - numerator_degree();
}

RationalFunctionRep build_P(const FormParams& p) {
  p.validate();
  RationalFunctionRep rep;
  rep.p = p;
  Integer f2n = factorial(static_cast<unsigned long>(2 * p.n));
  Integer fpow, dpow;
  mpz_pow_ui(fpow.get_mpz_t(), f2n.get_mpz_t(),
             static_cast<unsigned long>(p.a - 2 * p.b));
  Integer dz(p.d);
  mpz_pow_ui(dpow.get_mpz_t(), dz.get_mpz_t(),
             static_cast<unsigned long>(2 * p.n * p.a));
  rep.scalar = fpow * dpow;
  for (long l = p.d * p.n + 1; l <= (p.d + 2 * p.b) * p.n; ++l)
    rep.zeros.push_back(l);
  for (long l = -p.n; l <= p.n; ++l) rep.poles.push_back(p.d * l);
  return rep;
}

Rational eval_P_exact(const RationalFunctionRep& rep, const Rational& t) {
  for (long c : rep.poles)
    if (t == c) throw std::domain_error("eval_P_exact: t is a pole");
  Rational num(rep.scalar);
  for (long l : rep.zeros) num *= (t - l) * (t + l);
  Rational den(1);
  for (long c : rep.poles) {
    Rational f = t - c;
    Rational fa(1);
    for (long j = 0; j < rep.p.a; ++j) fa *= f;
    den *= fa;
  }
  return num / den;
}

namespace {

// Truncated power series over Rational, fixed length `ord` (degrees 0..ord-1).
using Series = std::vector<Rational>;

Series series_mul(const Series& x, const Series& y, size_t ord) {
  Series z(ord, Rational(0));
  for (size_t i = 0; i < ord && i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j + i < ord && j < y.size(); ++j) z[i + j] += x[i] * y[j];
  }
  return z;
}

// (delta + eps)^(-a) = delta^(-a) * sum_i binom(a-1+i, i) (-eps/delta)^i.
Series inverse_power_series(const Integer& delta, long a, size_t ord) {
  Series s(ord);
  Rational inv_delta = Rational(-1) / Rational(delta);
  Rational base;
  {
    Integer dp;
    mpz_pow_ui(dp.get_mpz_t(), delta.get_mpz_t(), static_cast<unsigned long>(a));
    base = Rational(1) / Rational(dp);
  }
  Rational pw(1);
  for (size_t i = 0; i < ord; ++i) {
    s[i] = base * pw *
           Rational(binomial(static_cast<unsigned long>(a - 1 + i),
                             static_cast<unsigned long>(i)));
    pw *= inv_delta;
  }
  return s;
}

}  // namespace

PartialFractionTable partial_fractions(const RationalFunctionRep& rep) {
  const FormParams& p = rep.p;
  const size_t ord = static_cast<size_t>(p.a);
  PartialFractionTable tab;
  tab.p = p;
  tab.A.assign(static_cast<size_t>(2 * p.n + 1),
               std::vector<Rational>(ord, Rational(0)));

  for (long l0 = -p.n; l0 <= p.n; ++l0) {
    const long c = p.d * l0;
    // Expand F(eps) = P(c + eps) * eps^a to order a-1; the coefficient of
    // eps^(a-j) is A_{l0,j}.
    Series acc(ord, Rational(0));
    acc[0] = Rational(rep.scalar);
    for (long l : rep.zeros) {
      // multiply by (eps + (c - l)) and (eps + (c + l)); both linear, done
      // in place back to front
      for (long u : {c - l, c + l}) {
        for (size_t i = ord; i-- > 0;) {
          Rational v = acc[i] * u;
          if (i > 0) v += acc[i - 1];
          acc[i] = v;
        }
      }
    }
    for (long l = -p.n; l <= p.n; ++l) {
      if (l == l0) continue;
      acc = series_mul(acc, inverse_power_series(Integer(c - p.d * l), p.a, ord),
                       ord);
    }
    for (long j = 1; j <= p.a; ++j)
      tab.A[static_cast<size_t>(l0 + p.n)][static_cast<size_t>(j - 1)] =
          acc[static_cast<size_t>(p.a - j)];
  }
  return tab;
}

const Rational& PartialFractionTable::coeff(long l, long j) const {
  return A[static_cast<size_t>(l + p.n)][static_cast<size_t>(j - 1)];
}

Rational eval_from_table(const PartialFractionTable& t, const Rational& x) {
  Rational sum(0);
  for (long l = -t.p.n; l <= t.p.n; ++l) {
    Rational base = x - t.p.d * l;
    if (base == 0) throw std::domain_error("eval_from_table: x is a pole");
    Rational inv = Rational(1) / base;
    Rational pw = inv;
    for (long j = 1; j <= t.p.a; ++j) {
      sum += t.coeff(l, j) * pw;
      pw *= inv;
    }
  }
  return sum;
}

bool check_residue_sum(const PartialFractionTable& t) {
  Rational s(0);
  for (long l = -t.p.n; l <= t.p.n; ++l) s += t.coeff(l, 1);
  return s == 0;
}

bool check_parity_sums(const PartialFractionTable& t) {
  for (long j = 1; j <= t.p.a; ++j) {
    if ((j - t.p.a) % 2 == 0) continue;
    Rational s(0);
    for (long l = -t.p.n; l <= t.p.n; ++l) s += t.coeff(l, j);
    if (s != 0) return false;
  }
  return true;
}

bool check_reflection(const PartialFractionTable& t) {
  for (long l = 1; l <= t.p.n; ++l)
    for (long j = 1; j <= t.p.a; ++j) {
      Rational rhs = t.coeff(l, j);
      if ((t.p.a - j) % 2 != 0) rhs = -rhs;
      if (t.coeff(-l, j) != rhs) return false;
    }
  return true;
}

LinearFormCoeffs linear_form_coeffs(const PartialFractionTable& t) {
  const FormParams& p = t.p;
  LinearFormCoeffs c;
  c.p = p;
  c.D = lcm_upto(2 * p.d * p.n);
  for (long j = 2; j <= p.a; ++j) {
    if ((j - p.a) % 2 != 0) continue;
    Rational s(0);
    for (long l = -p.n; l <= p.n; ++l) s += t.coeff(l, j);
    c.A[j] = s;
  }
  c.B.assign(static_cast<size_t>(p.d), Rational(0));
  for (long m = 1; m <= p.d; ++m) {
    Rational bm(0);
    for (long l = -p.n; l <= p.n; ++l) {
      // sum over the first n-l terms of the class progression: K = 0..n-l-1
      for (long K = 0; K <= p.n - l - 1; ++K) {
        Integer base(p.d * K + m);
        Rational inv_pow = Rational(1) / Rational(base);
        Rational pw = inv_pow;
        for (long j = 1; j <= p.a; ++j) {
          bm += t.coeff(l, j) * pw;
          pw *= inv_pow;
        }
      }
    }
    c.B[static_cast<size_t>(m - 1)] = bm;
  }
  return c;
}

Rational LinearFormCoeffs::scaled_A(long j) const {
  Integer Dp;
  mpz_pow_ui(Dp.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(p.a));
  return A.at(j) * Rational(Dp);
}

Rational LinearFormCoeffs::scaled_B(long m) const {
  Integer Dp;
  mpz_pow_ui(Dp.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(p.a));
  return B.at(static_cast<size_t>(m - 1)) * Rational(Dp);
}

IntegralityReport check_integrality(const PartialFractionTable& t,
                                    const LinearFormCoeffs& c) {
  IntegralityReport rep;
  for (long l = -t.p.n; l <= t.p.n; ++l)
    for (long j = 1; j <= t.p.a; ++j) {
      Integer Dp;
      mpz_pow_ui(Dp.get_mpz_t(), c.D.get_mpz_t(),
                 static_cast<unsigned long>(t.p.a - j));
      ++rep.checked;
      if (!is_integer(t.coeff(l, j) * Rational(Dp))) ++rep.failures;
    }
  for (const auto& [j, v] : c.A) {
    (void)v;
    ++rep.checked;
    if (!is_integer(c.scaled_A(j))) ++rep.failures;
  }
  for (long m = 1; m <= t.p.d; ++m) {
    ++rep.checked;
    if (!is_integer(c.scaled_B(m))) ++rep.failures;
  }
  return rep;
}

double log_abs(const Rational& q) {
  if (q == 0) return -std::numeric_limits<double>::infinity();
  signed long en, ed;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
         std::log(2.0) * static_cast<double>(en - ed);
}

double coeff_growth_bound(long d, long a, long b) {
  return 2.0 * a * std::log(2.0) + 4.0 * (b + d) * std::log(double(b + d)) -
         4.0 * d * std::log(double(d));
}

GrowthReport growth_report(const std::vector<LinearFormCoeffs>& cs) {
  GrowthReport rep;
  if (cs.empty()) return rep;
  rep.bound = coeff_growth_bound(cs[0].p.d, cs[0].p.a, cs[0].p.b);
  for (const auto& c : cs) {
    GrowthRow row;
    row.n = c.p.n;
    double mx = -std::numeric_limits<double>::infinity();
    for (const auto& [j, v] : c.A) {
      (void)j;
      if (v != 0) mx = std::max(mx, log_abs(v));
    }
    for (const auto& v : c.B)
      if (v != 0) mx = std::max(mx, log_abs(v));
    row.measured = mx / static_cast<double>(c.p.n);
    row.over_bound = row.measured > rep.bound + 1.0;
    rep.any_over = rep.any_over || row.over_bound;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace dirforms
