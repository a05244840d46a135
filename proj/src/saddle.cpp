#include "dirforms/saddle.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirforms {

namespace {

Real real_pow10(long e, long digits) {
  return pow(Real(10, digits), static_cast<int>(e));
}

Complex cis(const Real& theta) { return Complex(cos(theta), sin(theta)); }

void check_domain(const SaddleContext& c, const Complex& t) {
  if (!(t.re > 1)) throw std::domain_error("saddle: need Re t > 1");
  if (t.im == 0 && t.re == c.r)
    throw std::domain_error("saddle: branch point t = r");
}

// Real-axis specializations used by the bracketing solvers.  For x in (1, r)
// every log is real; for x > r the only imaginary content of f' is the
// constant -i d pi from log(r - x), so the real part below is Re f' on both
// rays and equals Re(f'(x) - i d pi) residual-wise above r.
Real fp_real_axis(const SaddleContext& c, const Real& x) {
  Real ad = Real(c.a + c.d);
  Real core = ad * (log(x - 1) - log(x + 1));
  if (x < c.r) return Real(c.d) * (log(x + c.r) - log(c.r - x)) + core;
  return Real(c.d) * (log(x + c.r) - log(x - c.r)) + core;
}

}  // namespace

SaddleContext make_saddle_context(long d, long a, long b,
                                  const PrecisionSpec& prec) {
  if (d < 1 || b < 1 || a < 2 * b)
    throw std::invalid_argument("saddle: need d >= 1, b >= 1, a >= 2b");
  SaddleContext c;
  c.d = d;
  c.a = a;
  c.b = b;
  c.prec = prec;
  double rd = double(d + 2 * b) / double(d);
  double Rd = double(a + d) / double(d);
  c.rho_log10_analytic = std::log10(2.5 * rd) - (Rd / rd) / std::log(10.0);
  // Size the working precision from the sharper first-order scale
  // 2r((r-1)/(r+1))^R, which can sit far below the analytic bound.
  double rho_log10_first =
      std::log10(2.0 * rd) +
      Rd * (std::log1p(-1.0 / rd) - std::log1p(1.0 / rd)) / std::log(10.0);
  double scale = std::min(c.rho_log10_analytic, rho_log10_first);
  long below = scale < 0 ? static_cast<long>(std::ceil(-scale)) : 0;
  c.work = prec.total() + below + 15;
  c.tiny = c.rho_log10_analytic < -8.0;
  PrecisionGuard pg(c.work);
  c.r = Real(d + 2 * b, c.work) / Real(d, c.work);
  c.R = Real(a + d, c.work) / Real(d, c.work);
  return c;
}

Complex log_r_minus_t(const SaddleContext& c, const Complex& t) {
  check_domain(c, t);
  Complex z = Complex(c.r, Real(0, c.work)) - t;
  if (t.im == 0 && t.re > c.r)
    return Complex(log(abs(z.re)), -const_pi(c.work));
  if (t.im == 0) return Complex(log(z.re), Real(0, c.work));
  return clog(z);  // principal: arg in (-pi,0) above the axis, (0,pi) below
}

Complex f_eval(const SaddleContext& c, const Complex& t) {
  check_domain(c, t);
  PrecisionGuard pg(c.work);
  Complex r(c.r, Real(0, c.work));
  Complex one(Real(1, c.work), Real(0, c.work));
  Complex lpr = clog(t + r);
  Complex lmr = log_r_minus_t(c, t);
  Complex lm1 = clog(t - one);
  Complex lp1 = clog(t + one);
  return (t + r) * lpr * Real(c.d) + (r - t) * lmr * Real(c.d) +
         ((t - one) * lm1 - (t + one) * lp1) * Real(c.a + c.d);
}

Complex f_prime(const SaddleContext& c, const Complex& t) {
  check_domain(c, t);
  PrecisionGuard pg(c.work);
  Complex r(c.r, Real(0, c.work));
  Complex one(Real(1, c.work), Real(0, c.work));
  return (clog(t + r) - log_r_minus_t(c, t)) * Real(c.d) +
         (clog(t - one) - clog(t + one)) * Real(c.a + c.d);
}

Complex f_second(const SaddleContext& c, const Complex& t) {
  check_domain(c, t);
  PrecisionGuard pg(c.work);
  Complex r(c.r, Real(0, c.work));
  Complex one(Real(1, c.work), Real(0, c.work));
  return (one / (t + r) + one / (r - t)) * Real(c.d) +
         (one / (t - one) - one / (t + one)) * Real(c.a + c.d);
}

Complex g_eval(const SaddleContext& c, const Complex& t) {
  check_domain(c, t);
  PrecisionGuard pg(c.work);
  Complex r(c.r, Real(0, c.work));
  Complex one(Real(1, c.work), Real(0, c.work));
  Real half = Real(1, c.work) / 2;
  Complex lg = (clog(t + r) + log_r_minus_t(c, t)) * half -
               (clog(t + one) + clog(t - one)) * (Real(c.a - 1) * half);
  return cexp(lg);
}

Complex h_eval(const SaddleContext& c, const Complex& t) {
  check_domain(c, t);
  PrecisionGuard pg(c.work);
  Complex r(c.r, Real(0, c.work));
  Complex one(Real(1, c.work), Real(0, c.work));
  return (clog(t + r) + log_r_minus_t(c, t)) * (Real(c.d) * c.r) -
         (clog(t - one) + clog(t + one)) * (Real(c.d) * c.R);
}

Real phi_log_abs(const SaddleContext& c, long n) {
  if (n < 1) throw std::invalid_argument("phi_log_abs: need n >= 1");
  PrecisionGuard pg(c.work);
  Real ln2 = log(Real(2, c.work));
  Real lpi = log(const_pi(c.work));
  Real lnn = log(Real(n, c.work));
  Real lnd = log(Real(c.d, c.work));
  long am2b = c.a - 2 * c.b;
  return lnn - ln2 + Real(2 * am2b * n + 1 + am2b) * ln2 +
         Real(am2b) / 2 * lpi + Real(4 * c.b * n + 2 - c.a) * lnd +
         Real(4 - c.a - 2 * c.b) / 2 * lnn;
}

namespace {

// Fixed point for the real distance scales near r.  sign = +1 iterates
// eps = (2r+eps)((r-1+eps)/(r+1+eps))^R  (the lambda = d point x1 = r+eps),
// sign = -1 iterates the mirrored form for x0 = r-eps.  Contraction factor
// is O(eps R / r^2), so this is only used when the scale is genuinely small.
Real real_fixed_point(const SaddleContext& c, int sign) {
  PrecisionGuard pg(c.work);
  Real s(sign);
  Real ln_eps = log(2 * c.r) + c.R * (log(c.r - 1) - log(c.r + 1));
  Real eps = exp(ln_eps);
  Real tol = real_pow10(-(c.work - 8), c.work);
  for (int it = 0; it < 400; ++it) {
    Real next = exp(log(2 * c.r + s * eps) +
                    c.R * (log(c.r - 1 + s * eps) - log(c.r + 1 + s * eps)));
    Real rel = abs(next - eps) / next;
    eps = next;
    if (rel < tol) return eps;
  }
  throw std::runtime_error("saddle: real fixed point did not converge");
}

}  // namespace

Real find_x0(const SaddleContext& c) {
  PrecisionGuard pg(c.work);
  if (c.tiny) return c.r - real_fixed_point(c, -1);
  // Expanding brackets on Re f' over (1, r): -inf at 1+, +inf at r-.
  Real span = c.r - 1;
  Real lo, hi;
  bool found = false;
  for (int k = 1; k < 300; ++k) {
    Real x = 1 + span / pow(Real(2, c.work), k);
    if (fp_real_axis(c, x) < 0) {
      lo = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("saddle: no negative bracket for x0");
  found = false;
  for (int k = 1; k < 300; ++k) {
    Real x = c.r - span / pow(Real(2, c.work), k);
    if (x > lo && fp_real_axis(c, x) > 0) {
      hi = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("saddle: no positive bracket for x0");
  long iters = static_cast<long>(3.33 * c.work) + 20;
  for (long it = 0; it < iters; ++it) {
    Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    (fp_real_axis(c, mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

Real rho_fixed_point(const SaddleContext& c) { return real_fixed_point(c, 1); }

RhoResult find_x1_rho(const SaddleContext& c) {
  PrecisionGuard pg(c.work);
  RhoResult res;
  res.analytic_bound = Real(5, c.work) * c.r / 2 * exp(-c.R / c.r);
  if (c.tiny) {
    res.rho = real_fixed_point(c, 1);
    res.x1 = c.r + res.rho;
    res.fixed_point = true;
    return res;
  }
  // Re f' - 0 is +inf at r+ and provably negative by r + (r-1)/2.
  Real hi = c.r + (c.r - 1) / 2;
  if (fp_real_axis(c, hi) >= 0)
    throw std::runtime_error("saddle: upper bracket for x1 not negative");
  Real lo;
  bool found = false;
  for (int k = 1; k < 300; ++k) {
    Real x = c.r + (c.r - 1) / pow(Real(2, c.work), k + 1);
    if (fp_real_axis(c, x) > 0) {
      lo = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("saddle: no positive bracket for x1");
  long iters = static_cast<long>(3.33 * c.work) + 20;
  for (long it = 0; it < iters; ++it) {
    Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    (fp_real_axis(c, mid) > 0 ? lo : hi) = mid;
  }
  res.x1 = (lo + hi) / 2;
  res.rho = res.x1 - c.r;
  res.fixed_point = false;
  return res;
}

namespace {

SaddlePoint make_point(const SaddleContext& c, long lambda, const Complex& t,
                       bool monotone) {
  PrecisionGuard pg(c.work);
  SaddlePoint sp;
  sp.lambda = lambda;
  sp.t = t;
  sp.eps = Complex(c.r, Real(0, c.work)) - t;
  Real pi = const_pi(c.work);
  Complex target(Real(0, c.work), Real(lambda) * pi);
  sp.residual = abs(f_prime(c, t) - target);
  sp.f2 = f_second(c, t);
  sp.g = g_eval(c, t);
  sp.h = h_eval(c, t);
  Real af2 = arg(sp.f2);
  if (af2 < -pi / 2) af2 += 2 * pi;  // keep (pi - arg)/2 inside [-pi/4, 3pi/4]
  sp.psi_const = (pi - af2) / 2 + arg(sp.g);
  sp.im_h = sp.h.im;
  sp.continuation_monotone = monotone;
  return sp;
}

// Interior saddles in the tiny regime: iterate the log-space fixed point
//   eps <- exp(log(2r-eps) + R[log(r-1-eps) - log(r+1-eps)] - i lambda pi/d)
// starting from the rotated real scale.  arg eps stays in (-pi, 0).
Complex complex_fixed_point(const SaddleContext& c, long lambda) {
  PrecisionGuard pg(c.work);
  Real pi = const_pi(c.work);
  Real ln_rho = log(2 * c.r) + c.R * (log(c.r - 1) - log(c.r + 1));
  Real theta = -Real(lambda) * pi / Real(c.d);
  Complex eps = cis(theta) * exp(ln_rho);
  Real tol = real_pow10(-(c.work - 8), c.work);
  Complex r(c.r, Real(0, c.work));
  Complex rot(Real(0, c.work), theta);
  for (int it = 0; it < 400; ++it) {
    Complex w = clog(r + r - eps) +
                (clog(r - 1 - eps) - clog(r + 1 - eps)) * c.R + rot;
    Complex next = cexp(w);
    Real rel = abs(next - eps) / abs(next);
    eps = next;
    if (rel < tol) return eps;
  }
  throw std::runtime_error("saddle: complex fixed point did not converge");
}

// Height of the curve Re f' = 0 above a given x in (x0, x1): bisection in y.
Real curve_height(const SaddleContext& c, const Real& x, const Real& rho) {
  PrecisionGuard pg(c.work);
  auto re_fp = [&](const Real& y) { return f_prime(c, Complex(x, y)).re; };
  Real ylo = rho / 2;
  int k = 0;
  while (re_fp(ylo) <= 0 && k < 120) {
    ylo /= 2;
    ++k;
  }
  if (k == 120) return ylo;  // effectively on the axis
  Real yhi = 2 * rho;
  k = 0;
  while (re_fp(yhi) >= 0 && k < 80) {
    yhi *= 2;
    ++k;
  }
  if (k == 80)
    throw std::runtime_error("saddle: Re f' stayed positive far above axis");
  for (int it = 0; it < 200; ++it) {
    Real mid = (ylo + yhi) / 2;
    if (mid == ylo || mid == yhi) break;
    (re_fp(mid) > 0 ? ylo : yhi) = mid;
    if ((yhi - ylo) < yhi * 1e-30) break;
  }
  return (ylo + yhi) / 2;
}

Complex newton_polish(const SaddleContext& c, long lambda, Complex t) {
  PrecisionGuard pg(c.work);
  Real pi = const_pi(c.work);
  Complex target(Real(0, c.work), Real(lambda) * pi);
  Real steptol = real_pow10(-(c.work - 8), c.work);
  for (int it = 0; it < 120; ++it) {
    Complex step = (f_prime(c, t) - target) / f_second(c, t);
    Complex next = t - step;
    int damp = 0;
    while ((!(next.re > 1) || (next.im == 0 && next.re == c.r)) && damp < 8) {
      step = step / Real(2);
      next = t - step;
      ++damp;
    }
    t = next;
    if (abs(step) < steptol * abs(t)) break;
  }
  return t;
}

}  // namespace

SaddlePoint find_t_lambda(const SaddleContext& c, long lambda) {
  if (lambda < 0 || lambda > c.d)
    throw std::invalid_argument("find_t_lambda: lambda out of [0, d]");
  PrecisionGuard pg(c.work);
  if (lambda == 0)
    return make_point(c, 0, Complex(find_x0(c), Real(0, c.work)), true);
  if (lambda == c.d) {
    RhoResult rr = find_x1_rho(c);
    return make_point(c, c.d, Complex(rr.x1, Real(0, c.work)), true);
  }
  if (c.tiny) {
    Complex eps = complex_fixed_point(c, lambda);
    Complex t = Complex(c.r, Real(0, c.work)) - eps;
    return make_point(c, lambda, t, true);
  }
  // Two-stage continuation: walk x from x0 to x1 along the curve
  // Re f' = 0 and bisect Im f' = lambda pi, then polish with Newton.
  Real x0 = find_x0(c);
  RhoResult rr = find_x1_rho(c);
  Real pi = const_pi(c.work);
  Real target = Real(lambda) * pi;
  auto G = [&](const Real& x) {
    Real y = curve_height(c, x, rr.rho);
    return f_prime(c, Complex(x, y)).im;
  };
  const int kScan = 32;
  Real span = rr.x1 - x0;
  std::vector<Real> xs, gs;
  bool monotone = true;
  for (int j = 1; j < kScan; ++j) {
    xs.push_back(x0 + span * j / kScan);
    gs.push_back(G(xs.back()));
    if (j > 1 && gs[j - 1] <= gs[j - 2]) monotone = false;
  }
  Real lo = x0, hi = rr.x1;
  for (size_t j = 0; j < xs.size(); ++j) {
    if (gs[j] < target) {
      lo = xs[j];
    } else {
      hi = xs[j];
      break;
    }
  }
  for (int it = 0; it < 60; ++it) {
    Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    (G(mid) < target ? lo : hi) = mid;
    if ((hi - lo) < span * 1e-10) break;
  }
  Real xb = (lo + hi) / 2;
  Complex t0(xb, curve_height(c, xb, rr.rho));
  Complex t = newton_polish(c, lambda, t0);
  return make_point(c, lambda, t, monotone);
}

SpectralData spectral_data(const PeriodicSeries& s, const PrecisionSpec& prec) {
  s.validate();
  SpectralData sd;
  sd.d = s.d;
  long d = s.d;
  long N = std::lcm(4L, 2 * d);
  long stretch = N / (2 * d);
  long digits = prec.total();
  PrecisionGuard pg(digits);
  Real pi = const_pi(digits);
  bool any = false;
  for (long lam = -d; lam <= d; lam += 2) {
    Complex acc(Real(0, digits), Real(0, digits));
    CycloElt elt = cyclo_monomial(N, 0, Rational(0));
    for (long m = 1; m <= d; ++m) {
      Rational sgn = (m % 2 == 1) ? Rational(-1) : Rational(1);
      Rational are = sgn * s.re[m - 1];
      Rational aim = s.im.empty() ? Rational(0) : sgn * s.im[m - 1];
      if (are == 0 && aim == 0) continue;
      Real theta = Real(m * lam, digits) * pi / Real(d, digits);
      Complex ph = cis(theta);
      acc = acc + ph * Complex(to_real(are, digits), to_real(aim, digits));
      long e2d = ((m * lam) % (2 * d) + 2 * d) % (2 * d);
      if (are != 0) elt = cyclo_add(elt, cyclo_monomial(N, e2d * stretch, are));
      if (aim != 0)
        elt = cyclo_add(
            elt, cyclo_monomial(N, (e2d * stretch + N / 4) % N, aim));
    }
    if (lam == d || lam == -d) acc = acc * (Real(1, digits) / 2);
    // halve the exact element as well so numeric and exact views agree
    if (lam == d || lam == -d) {
      CycloElt halved = elt;
      for (auto& q : halved.c) q /= 2;
      elt = halved;
    }
    sd.b[lam] = acc;
    sd.exact_zero[lam] = elt.is_zero();
    sd.exact.emplace(lam, std::move(elt));
    if (lam >= 0 && !sd.exact_zero[lam]) any = true;
  }
  if (!any)
    throw std::logic_error("spectral_data: all oscillator sums vanish");
  for (long lam = d; lam >= 0; lam -= 2) {
    if (!sd.exact_zero.at(lam)) {
      sd.lambda0 = lam;
      break;
    }
  }
  return sd;
}

RateResult rate_predicted(const SaddleContext& c, long lambda0) {
  PrecisionGuard pg(c.work);
  SaddlePoint sp = find_t_lambda(c, lambda0);
  RateResult rr;
  rr.lambda0 = lambda0;
  Real base = Real(2 * (c.a - 2 * c.b)) * log(Real(2, c.work)) +
              Real(4 * c.b) * log(Real(c.d, c.work));
  rr.direct_value = base + sp.h.re;
  Real main = Real(2 * c.d) * c.r * log(2 * c.r) +
              Real(c.d) * c.R *
                  ((c.r - 1) * log(c.r - 1) - (c.r + 1) * log(c.r + 1));
  rr.expansion_value = base + main - Real(c.d) * sp.eps.re;
  rr.expansion_bound = Real(4 * c.d) * c.R / c.r * norm(sp.eps);
  rr.value = c.tiny ? rr.expansion_value : rr.direct_value;
  return rr;
}

JAsymptotic J_asymptotic(const SaddleContext& c, const SaddlePoint& sp,
                         long n) {
  if (n < 1) throw std::invalid_argument("J_asymptotic: need n >= 1");
  PrecisionGuard pg(c.work);
  Real pi = const_pi(c.work);
  Real af2 = abs(sp.f2);
  if (af2 < real_pow10(-(c.work / 2), c.work))
    throw std::domain_error("J_asymptotic: degenerate saddle, |f''| ~ 0");
  JAsymptotic ja;
  ja.log_magnitude = Real(n) * sp.h.re + log(abs(sp.g)) +
                     log(2 * pi / (Real(n) * af2)) / 2;
  ja.phase = sp.psi(n);
  return ja;
}

Complex J_quadrature(const SaddleContext& c, long lambda, long n,
                     const Real* x_line) {
  if (n < 1) throw std::invalid_argument("J_quadrature: need n >= 1");
  if (lambda < -c.d || lambda > c.d)
    throw std::invalid_argument("J_quadrature: lambda out of [-d, d]");
  long digits = c.prec.digits + 8;
  long wq = c.prec.total() + 24 + n;
  SaddleContext cc = make_saddle_context(c.d, c.a, c.b,
                                         PrecisionSpec{wq, 16});
  PrecisionGuard pg(cc.work);
  Real pi = const_pi(cc.work);
  Real xq;
  if (x_line) {
    xq = Real(*x_line, cc.work);
  } else {
    xq = (find_x0(cc) + cc.r) / 2;
  }
  Real lp = Real(lambda) * pi;
  auto F = [&](const Real& y) {
    Complex t(xq, y);
    Complex expo = f_eval(cc, t) * Real(n);
    // times e^{-i lambda pi n t}: exponent -= i lambda pi n t
    expo = expo - Complex(Real(0, cc.work), lp * Real(n)) * t;
    return cexp(expo) * g_eval(cc, t);
  };
  // Establish the truncation range from the integrand magnitude profile.
  double cut = double(digits + cc.prec.guard + 8);
  auto scan = [&](int dir) {
    Real step = Real(1, cc.work) / 4;
    double maxlog = -1e300;
    int below = 0;
    long i = 0;
    const long cap = 400000;
    for (; i < cap; ++i) {
      Real y = step * Real(dir * i);
      double lg = log10_abs(abs(F(y)));
      if (lg > maxlog) maxlog = lg;
      if (lg < maxlog - cut) {
        if (++below >= 3 && i >= 8) break;
      } else {
        below = 0;
      }
    }
    if (i >= cap)
      throw std::runtime_error("J_quadrature: truncation range too wide");
    return step * Real(dir * i);
  };
  Real yhi = scan(+1);
  Real ylo = scan(-1);  // negative
  // Trapezoid sums with step halving; midpoints reuse previous work.
  Real h = Real(1, cc.work) / 4;
  long steps = static_cast<long>(to_double((yhi - ylo) / h)) + 1;
  Real width = h * Real(steps);
  yhi = ylo + width;
  Complex total = (F(ylo) + F(yhi)) * (Real(1, cc.work) / 2);
  for (long i = 1; i < steps; ++i) total = total + F(ylo + h * Real(i));
  Complex S = total * h;
  Real tol = real_pow10(-(digits + 2), cc.work);
  for (int halve = 0; halve < 18; ++halve) {
    Complex mids(Real(0, cc.work), Real(0, cc.work));
    for (long i = 0; i < steps; ++i)
      mids = mids + F(ylo + h * Real(i) + h / 2);
    total = total + mids;
    steps *= 2;
    h /= 2;
    Complex S2 = total * h;
    Real diff = abs(S2 - S);
    S = S2;
    if (diff <= tol * abs(S)) break;
    if (halve == 17)
      throw std::runtime_error("J_quadrature: trapezoid did not settle");
  }
  return Complex(Real(0, cc.work), Real(1, cc.work)) * S;
}

SubsequenceReport subsequence_select(const SaddleContext& c,
                                     const SpectralData& sd, long n_max) {
  if (n_max < 1) throw std::invalid_argument("subsequence_select: n_max >= 1");
  PrecisionGuard pg(c.work);
  SubsequenceReport rep;
  long lam0 = sd.lambda0;
  if (lam0 == 0 || lam0 == c.d) {
    rep.w = 0;
    rep.gap_bound = 1;
    for (long n = 1; n <= n_max; ++n) rep.ns.push_back(n);
    return rep;
  }
  Real pi = const_pi(c.work);
  SaddlePoint sp = find_t_lambda(c, lam0);
  Real argb = arg(sd.b.at(lam0));
  auto mod_pi = [&](const Real& v) {
    Real m = fmod(v, pi);
    if (m < 0) m += pi;
    return m;
  };
  for (long n = 1; n <= n_max; ++n) {
    Real theta = mod_pi(argb + sp.psi(n));
    if (theta >= pi / 6 && theta <= 5 * pi / 6) rep.ns.push_back(n);
  }
  rep.w = 0;
  for (long w = 1; w <= 10000; ++w) {
    Real v = mod_pi(Real(w) * sp.im_h);
    if (v >= pi / 3 && v <= 2 * pi / 3) {
      rep.w = w;
      break;
    }
  }
  if (rep.w == 0)
    throw std::runtime_error("subsequence_select: no phase step w found");
  rep.gap_bound = 1 + rep.w;
  return rep;
}

Eq24Caps hypothesis_caps(const SaddleContext& c, bool strict) {
  PrecisionGuard pg(c.work);
  Eq24Caps caps;
  Real pi = const_pi(c.work);
  caps.terms.push_back(c.r * pi / (Real(10 * c.d) * c.R));
  caps.terms.push_back(pi / Real(2 * c.d * c.d));
  if (strict) {
    Real half = pi / Real(2 * c.d);
    caps.terms.push_back(c.r / (4 * c.R) * sin(half));
    caps.terms.push_back(c.r / (38 * c.R) * (cos(half) - cos(3 * half)));
  }
  caps.min_cap = caps.terms[0];
  for (const Real& t : caps.terms)
    if (t < caps.min_cap) caps.min_cap = t;
  return caps;
}

LemmaReport lemma_suite(const SaddleContext& c) {
  PrecisionGuard pg(c.work);
  LemmaReport rep;
  Real pi = const_pi(c.work);
  RhoResult rr = find_x1_rho(c);
  rep.rho = rr.rho;
  for (long lam = 0; lam <= c.d; ++lam)
    rep.saddles.push_back(find_t_lambda(c, lam));

  rep.max_residual = Real(0, c.work);
  for (const auto& sp : rep.saddles)
    if (sp.residual > rep.max_residual) rep.max_residual = sp.residual;
  rep.residuals_ok = rep.max_residual < Real(1e-12, c.work);

  Real disc_slack = rr.rho * 1e-10 + real_pow10(-(c.work - 10), c.work);
  rep.in_disc_ok = true;
  for (const auto& sp : rep.saddles)
    if (abs(sp.eps) > rr.rho + disc_slack) rep.in_disc_ok = false;

  rep.reh_monotone_ok = true;
  for (size_t i = 0; i + 2 < rep.saddles.size(); ++i)
    if (!(rep.saddles[i].h.re < rep.saddles[i + 2].h.re))
      rep.reh_monotone_ok = false;

  Real ang_slack = real_pow10(-(c.prec.digits / 2), c.work);
  rep.arg_eps_ok = true;
  rep.imh_window_ok = true;
  rep.imh_offgrid_ok = true;
  for (const auto& sp : rep.saddles) {
    long lam = sp.lambda;
    Real ae = arg(sp.eps);
    if (sp.eps.im == 0 && sp.eps.re < 0) ae = -pi;  // lambda = d convention
    Real lo = -(Real(lam) + Real(1) / 2) * pi / Real(c.d) - ang_slack;
    Real hi = -(Real(lam) - Real(1) / 2) * pi / Real(c.d) + ang_slack;
    if (!(ae >= lo && ae <= hi)) rep.arg_eps_ok = false;
    Real center = -c.r * Real(lam) * pi;
    if (lam == 0 || lam == c.d) {
      if (!(abs(sp.im_h - center) <=
            ang_slack * (1 + abs(center))))
        rep.imh_window_ok = false;
    } else {
      // Interior saddles: -r lam pi < Im h < -r lam pi - 2d Im(eps),
      // with Im(eps) < 0; width 2d|Im eps| <= 2d rho < pi/d under the caps.
      if (!(sp.im_h > center && sp.im_h < center - 2 * Real(c.d) * sp.eps.im))
        rep.imh_window_ok = false;
      Real v = fmod(abs(sp.im_h), pi);
      Real dist = v < pi - v ? v : pi - v;
      if (!(dist > Real(1e-11, c.work))) rep.imh_offgrid_ok = false;
    }
  }

  // Branch rays: Im f' vanishes on (1, r), equals d pi on (r, inf), and
  // stays inside (0, (a+d)pi) in the open upper half plane.
  rep.imf_rays_ok = true;
  Real ray_tol = real_pow10(-(c.work - 12), c.work) * Real(c.a + c.d);
  for (int j = 1; j <= 5; ++j) {
    Real x = 1 + (c.r - 1) * j / 6;
    Real v = f_prime(c, Complex(x, Real(0, c.work))).im;
    if (abs(v) > ray_tol) rep.imf_rays_ok = false;
  }
  for (int j = 1; j <= 5; ++j) {
    Real x = c.r + (c.r - 1) * j / 3;
    Real v = f_prime(c, Complex(x, Real(0, c.work))).im;
    if (abs(v - Real(c.d) * pi) > ray_tol) rep.imf_rays_ok = false;
  }
  Real top = Real(c.a + c.d) * pi;
  for (int jx = 1; jx <= 4; ++jx) {
    for (int jy = 1; jy <= 3; ++jy) {
      Real x = 1 + (c.r - 1) * jx / 4;  // touches x = r at jx = 4
      Real y = (c.r - 1) * jy / 2;
      Real v = f_prime(c, Complex(x, y)).im;
      if (!(v > 0 && v < top)) rep.imf_rays_ok = false;
    }
  }

  // Re f' < 0 everywhere outside the rho-disc (Re t > 1, Im t >= 0):
  // points just off the disc boundary plus a coarse far grid.
  rep.ref_negative_ok = true;
  auto check_neg = [&](const Complex& t) {
    if (!(t.re > 1)) return;
    if (abs(Complex(c.r, Real(0, c.work)) - t) <= rr.rho * Real(1.05, c.work))
      return;
    if (!(f_prime(c, t).re < 0)) rep.ref_negative_ok = false;
  };
  Real edge = rr.rho * Real(1.1, c.work);
  for (int k = 0; k <= 6; ++k) {
    Real th = pi * k / 6;
    check_neg(Complex(c.r + edge * cos(th), edge * sin(th)));
  }
  for (int jx = 0; jx <= 4; ++jx) {
    for (int jy = 0; jy <= 2; ++jy) {
      Real x = 1 + (c.r - 1) * (1 + jx) / 3;  // spans (1, r) and beyond
      Real y = (c.r - 1) * jy;
      check_neg(Complex(x, y));
    }
  }
  return rep;
}

}  // namespace dirforms
