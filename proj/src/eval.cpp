#include "dirforms/eval.hpp"

#include <cmath>
#include <stdexcept>

namespace dirforms {

namespace {

// Exact P(k) at a positive integer beyond the zero block, returned as a Real
// at precision W.  Numerator and denominator are exact integer products.
Real eval_P_integer(const RationalFunctionRep& rep, long k, long W) {
  Integer num = rep.scalar;
  for (long l : rep.zeros) num *= Integer(k - l) * Integer(k + l);
  Integer den = 1;
  for (long c : rep.poles) {
    Integer base(k - c);
    Integer bp;
    mpz_pow_ui(bp.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(rep.p.a));
    den *= bp;
  }
  return to_real(num, W) / to_real(den, W);
}

// Everything the acceleration needs that does not depend on the residue
// class m: the shared start index K0, the Cauchy radius and bound, and the
// degree gap.
struct AccelGeometry {
  long K0 = 0;
  long Kc = 0;
  long gap = 0;
  Real log2_Mc;  // log2 of the Cauchy bound M_c at |K| = Kc
};

AccelGeometry accel_geometry(const RationalFunctionRep& rep, long W) {
  const FormParams& p = rep.p;
  AccelGeometry geo;
  geo.Kc = 2 * (p.n + 1);
  long drn = (p.d + 2 * p.b) * p.n;
  long K1max = (drn - 1) / p.d + 1;  // first index for m = 1
  geo.K0 = std::max(K1max, 4 * (p.n + 1));
  geo.gap = rep.degree_gap();
  // |numerator factors| <= (d Kc + l)(d Kc + l + d) on the circle,
  // |denominator factors| >= d Kc - d(n+1) = d(n+1).
  PrecisionGuard guard(W);
  Real log2Mc = log2(to_real(rep.scalar, W));
  for (long l : rep.zeros)
    log2Mc += log2(Real(p.d * geo.Kc + l)) + log2(Real(p.d * geo.Kc + l + p.d));
  log2Mc -= Real(p.a * (2 * p.n + 1)) * log2(Real(p.d * (p.n + 1)));
  geo.log2_Mc = log2Mc;
  return geo;
}

// log2 of the Laurent remainder bound after keeping terms c_g..c_{g+J}:
//   E(J) = 2 M_c (Kc/K0)^(g+J+1) (1 + K0/(g+J)).
Real log2_laurent_bound(const AccelGeometry& geo, long J) {
  Real ratio = log2(Real(geo.Kc)) - log2(Real(geo.K0));
  return Real(1) + geo.log2_Mc + Real(geo.gap + J + 1) * ratio +
         log2(1 + Real(geo.K0) / Real(geo.gap + J));
}

// Monotone majorant of P(dK+m) for dK+m > drn:
//   U(K) = scalar (dK+m)^(4bn) / (dK+m-dn)^(a(2n+1)),
// with tail bound  sum_{K>=K2} U(K) <= U(K2) + integral comparison.
Real log2_majorant_tail(const RationalFunctionRep& rep, long m, long K2,
                        long W) {
  const FormParams& p = rep.p;
  PrecisionGuard guard(W);
  Real y = Real(p.d * K2 + m - p.d * p.n);
  Real t = Real(p.d * K2 + m);
  long nd = rep.numerator_degree();
  long dd = rep.denominator_degree();
  Real log2U = log2(to_real(rep.scalar, W)) + Real(nd) * log2(t) -
               Real(dd) * log2(y);
  // integral part: (1/d)(1 + dn/y)^(4bn) y^{-(gap-1)} / (gap-1)
  Real log2I = -log2(Real(p.d)) + Real(nd) * log2(1 + Real(p.d * p.n) / y) -
               Real(dd - nd - 1) * log2(y) - log2(Real(dd - nd - 1));
  Real mx = std::max(log2U, log2I);
  return mx + log2(pow(Real(2), log2U - mx) + pow(Real(2), log2I - mx));
}

// Laurent coefficients c_g..c_{g+J} of P(dK+m) as a series in 1/K, exact.
std::vector<Rational> laurent_coeffs(const RationalFunctionRep& rep, long m,
                                     long J) {
  const FormParams& p = rep.p;
  IPoly num{rep.scalar};
  for (long l : rep.zeros) {
    num = poly_mul(num, IPoly{Integer(m - l), Integer(p.d)});
    num = poly_mul(num, IPoly{Integer(m + l), Integer(p.d)});
  }
  IPoly base{};
  base = IPoly{Integer(1)};
  for (long l = -p.n; l <= p.n; ++l)
    base = poly_mul(base, IPoly{Integer(m - p.d * l), Integer(p.d)});
  IPoly den = poly_pow(base, p.a);

  const size_t degN = num.size() - 1, degD = den.size() - 1;
  // reversed coefficient sequences: nrev[i] = coeff of K^(degN-i)
  auto rev_at = [](const IPoly& q, size_t deg, size_t i) -> Integer {
    return i <= deg ? q[deg - i] : Integer(0);
  };
  std::vector<Rational> qq(static_cast<size_t>(J) + 1);
  Rational lead(rev_at(den, degD, 0));
  for (size_t i = 0; i <= static_cast<size_t>(J); ++i) {
    Rational acc(rev_at(num, degN, i));
    for (size_t t = 1; t <= i && t <= degD; ++t)
      acc -= Rational(rev_at(den, degD, t)) * qq[i - t];
    acc /= lead;
    acc.canonicalize();
    qq[i] = acc;
  }
  return qq;
}

struct ClassSum {
  Real direct;   // finite stretch, exact terms
  Real tail;     // accelerated remainder
  Real bound;    // certified bound on what was dropped
  long direct_terms = 0;
  long laurent_terms = 0;
};

constexpr long kLaurentMax = 2500;

}  // namespace

TailResult I_tail(const FormParams& p, const PeriodicSeries& s,
                  const PrecisionSpec& prec) {
  p.validate();
  s.validate();
  if (s.has_imag())
    throw std::domain_error("I_tail: series must have real coefficients");
  if (s.d != p.d)
    throw std::domain_error("I_tail: series period must equal the form's d");

  RationalFunctionRep rep = build_P(p);
  long drn = (p.d + 2 * p.b) * p.n;

  long W = prec.total() + 12;
  double extra_target_digits = 0;  // tightened when cross-class cancellation bites
  for (int attempt = 0; attempt < 5; ++attempt) {
    PrecisionGuard guard(W);
    AccelGeometry geo = accel_geometry(rep, W);

    // Per-class absolute target.  Scale by a cheap magnitude probe: the
    // largest direct term of any class (or the first kept term when the
    // direct stretch is empty).
    Real probe = 0;
    for (long m = 1; m <= p.d; ++m) {
      if (s.coeff_re(m) == 0) continue;
      long K1 = (drn - m) / p.d + 1;
      probe = std::max(probe, eval_P_integer(rep, p.d * K1 + m, W));
    }
    if (probe == 0) probe = 1;
    Real target = probe * pow(Real(10), -Real(W - 4) - Real(extra_target_digits));
    Real log2_target = log2(target);

    // Decide the route once (the Cauchy data is class-independent).
    long J = -1;
    {
      long lo = 0, hi = kLaurentMax;
      if (log2_laurent_bound(geo, hi) <= log2_target) {
        while (lo < hi) {  // smallest J meeting the target
          long mid = (lo + hi) / 2;
          if (log2_laurent_bound(geo, mid) <= log2_target)
            hi = mid;
          else
            lo = mid + 1;
        }
        J = lo;
      }
    }

    std::vector<Real> zetas;
    if (J >= 0) {
      zetas.resize(static_cast<size_t>(J) + 1);
      PrecisionSpec zspec{W, 10};
      for (long i = 0; i <= J; ++i)
        zetas[static_cast<size_t>(i)] =
            hurwitz_zeta(geo.gap + i, Rational(geo.K0), zspec, nullptr, false);
    }

    Real total = 0, total_bound = 0, max_contrib = 0;
    long direct_terms = 0, laurent_terms = 0;
    bool certified = true;
    for (long m = 1; m <= p.d; ++m) {
      const Rational& am = s.coeff_re(m);
      if (am == 0) continue;
      long K1 = (drn - m) / p.d + 1;
      ClassSum cs;
      cs.direct = 0;
      cs.tail = 0;
      cs.bound = 0;
      for (long K = K1; K < geo.K0; ++K) {
        cs.direct += eval_P_integer(rep, p.d * K + m, W);
        ++cs.direct_terms;
      }
      if (J >= 0) {
        std::vector<Rational> c = laurent_coeffs(rep, m, J);
        for (long i = 0; i <= J; ++i)
          cs.tail += to_real(c[static_cast<size_t>(i)], W) *
                     zetas[static_cast<size_t>(i)];
        cs.laurent_terms = J + 1;
        cs.bound = pow(Real(2), log2_laurent_bound(geo, J)) * Real(1.000001);
      } else {
        // Extend direct summation until the majorant certifies the rest.
        long K2 = geo.K0;
        long cap = geo.K0 * 64 + 200000;
        while (K2 < cap &&
               log2_majorant_tail(rep, m, K2, W) > log2_target) {
          long block = std::max<long>(K2 / 2, 64);
          for (long K = K2; K < K2 + block; ++K) {
            cs.direct += eval_P_integer(rep, p.d * K + m, W);
            ++cs.direct_terms;
          }
          K2 += block;
        }
        Real lb = log2_majorant_tail(rep, m, K2, W);
        if (lb > log2_target) certified = false;
        cs.bound = pow(Real(2), lb) * Real(1.000001);
      }
      Real contrib = to_real(am, W) * (cs.direct + cs.tail);
      total += contrib;
      total_bound += abs(to_real(am, W)) * cs.bound;
      max_contrib = std::max(max_contrib, abs(contrib));
      direct_terms += cs.direct_terms;
      laurent_terms += cs.laurent_terms;
    }

    if (!certified)
      throw std::runtime_error(
          "I_tail: could not certify the requested accuracy");

    // Enough working digits survived the cross-class cancellation, and the
    // dropped remainder is small relative to the value itself?
    double lost = (total == 0)
                      ? std::numeric_limits<double>::infinity()
                      : log10_abs(max_contrib) - log10_abs(total);
    bool digits_ok = W - lost >= prec.total() + 5;
    bool bound_ok =
        total != 0 &&
        log10_abs(total_bound) <= log10_abs(total) - prec.total();
    if (digits_ok && bound_ok) {
      TailResult out;
      out.value = total;
      out.truncation_bound = total_bound;
      out.working_digits = W;
      out.direct_terms = direct_terms;
      out.laurent_terms = laurent_terms;
      return out;
    }
    if (!digits_ok && std::isfinite(lost)) W = static_cast<long>(lost) + prec.total() + 20;
    else if (!digits_ok) W *= 2;
    if (!bound_ok)
      extra_target_digits +=
          (total == 0) ? 10 : std::max(5.0, -log10_abs(total) + 5);
  }
  throw std::runtime_error("I_tail: accuracy loop did not settle");
}

Real I_from_coeffs(const LinearFormCoeffs& c, const PeriodicSeries& s,
                   const PrecisionSpec& prec) {
  s.validate();
  if (s.has_imag())
    throw std::domain_error("I_from_coeffs: series must have real coefficients");
  if (s.d != c.p.d)
    throw std::domain_error("I_from_coeffs: series period must equal the form's d");

  const FormParams& p = c.p;
  // Budget for the cancellation between the rational coefficients: their
  // size grows like exp(n * growth) while the value shrinks like
  // exp(-n * |rate|); the closed-form rate estimate is enough for a first
  // guess, and the loop below verifies and retries if it was short.
  double r = double(p.d + 2 * p.b) / p.d, R = double(p.a + p.d) / p.d;
  double alpha_no = p.d * R *
                        ((r + 1) * std::log(r + 1) - (r - 1) * std::log(r - 1)) -
                    2.0 * p.a * (p.d + std::log(2.0)) -
                    4.0 * p.b * (std::log(double(p.d)) - std::log(2.0)) -
                    2.0 * p.d * r * std::log(2 * r);
  double rate = -2.0 * p.a * p.d - alpha_no;
  double lost_est =
      p.n * (coeff_growth_bound(p.d, p.a, p.b) + std::max(0.0, -rate)) /
      std::log(10.0);
  long W = prec.total() + static_cast<long>(lost_est) + 20;

  for (int attempt = 0; attempt < 4; ++attempt) {
    PrecisionGuard guard(W);
    PrecisionSpec inner{W - 15, 15};
    Real sum = 0, max_term = 0;
    for (const auto& [j, Aj] : c.A) {
      if (Aj == 0) continue;
      Real term = to_real(Aj, W) * L_value_real(s, j, inner);
      sum += term;
      max_term = std::max(max_term, abs(term));
    }
    for (long m = 1; m <= p.d; ++m) {
      const Rational& am = s.coeff_re(m);
      if (am == 0) continue;
      Real term = to_real(c.B[static_cast<size_t>(m - 1)], W) * to_real(am, W);
      sum -= term;
      max_term = std::max(max_term, abs(term));
    }
    double lost = (sum == 0) ? std::numeric_limits<double>::infinity()
                             : log10_abs(max_term) - log10_abs(sum);
    if (W - lost >= prec.total() + 5) return sum;
    W = (std::isfinite(lost) ? static_cast<long>(lost) : W) + prec.total() + 25;
  }
  throw std::runtime_error("I_from_coeffs: cancellation budget did not settle");
}

EvalReport cross_check(const FormParams& p, const PeriodicSeries& s,
                       const PrecisionSpec& prec) {
  EvalReport rep;
  rep.n = p.n;
  TailResult t = I_tail(p, s, prec);
  PartialFractionTable tab = partial_fractions(build_P(p));
  LinearFormCoeffs c = linear_form_coeffs(tab);
  rep.i_tail = t.value;
  rep.truncation_bound = t.truncation_bound;
  rep.i_coeffs = I_from_coeffs(c, s, prec);
  Real diff = abs(rep.i_tail - rep.i_coeffs);
  Real scale = std::max(Real(1), abs(rep.i_tail));
  if (diff == 0)
    rep.agreement_digits = static_cast<double>(t.working_digits);
  else
    rep.agreement_digits = -(log10_abs(diff) - log10_abs(scale));
  rep.pass = rep.agreement_digits >= static_cast<double>(prec.digits);
  return rep;
}

std::vector<RatePoint> rate_empirical(long d, long a, long b,
                                      const PeriodicSeries& s,
                                      const std::vector<long>& ns,
                                      const PrecisionSpec& prec) {
  std::vector<RatePoint> out;
  for (long n : ns) {
    FormParams p{d, a, b, n};
    TailResult t = I_tail(p, s, prec);
    RatePoint pt;
    pt.n = n;
    pt.log_abs_over_n = log10_abs(t.value) * std::log(10.0) / double(n);
    out.push_back(pt);
  }
  return out;
}

}  // namespace dirforms
