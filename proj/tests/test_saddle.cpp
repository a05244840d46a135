#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "dirforms/cplx.hpp"
#include "dirforms/mp.hpp"
#include "dirforms/saddle.hpp"
#include "dirforms/series.hpp"

using namespace dirforms;

namespace {
const PrecisionSpec kPrec{50, 20};

Real tol(const char* s) { return Real(s, 80); }
}  // namespace

TEST_CASE("context basics for d=1 a=9 b=1") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  CHECK(c.r == 3);
  CHECK(c.R == 10);
  CHECK(!c.tiny);

  Real x0 = find_x0(c);
  CHECK(x0 > Real("2.99"));
  CHECK(x0 < Real("2.999"));
  CHECK(abs(f_prime(c, Complex(x0, Real(0))).re) < tol("1e-40"));

  RhoResult rr = find_x1_rho(c);
  CHECK(to_double(rr.rho) == doctest::Approx(5.955e-3).epsilon(2e-3));
  CHECK(abs(rr.x1 - (c.r + rr.rho)) < tol("1e-40"));
  CHECK(to_double(rr.analytic_bound) == doctest::Approx(0.2676).epsilon(1e-3));
  CHECK(rr.rho < rr.analytic_bound);
}

TEST_CASE("bisection and fixed point locate the same x1") {
  SaddleContext c = make_saddle_context(1, 173, 11, kPrec);
  RhoResult rr = find_x1_rho(c);
  Real fp = rho_fixed_point(c);
  CHECK(abs(rr.rho - fp) < tol("1e-40"));
  CHECK(to_double(rr.rho) == doctest::Approx(1.2e-5).epsilon(0.05));
}

TEST_CASE("phase function identities") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  PrecisionGuard pg(c.work);

  // f(t) = t f'(t) + h(t) throughout the branch domain.
  for (const Complex& t :
       {Complex(Real(2), Real("0.5")), Complex(Real("1.3"), Real(2)),
        Complex(Real(5), Real("0.01")), Complex(Real("2.2"), Real("-0.7"))}) {
    Complex lhs = f_eval(c, t);
    Complex rhs = t * f_prime(c, t) + h_eval(c, t);
    CAPTURE(to_double(t.re));
    CAPTURE(to_double(t.im));
    CHECK(abs(lhs - rhs) < tol("1e-40"));
  }

  // Central differences reproduce f' and f''.
  Real delta("1e-12");
  Complex t(Real("2.3"), Real("0.7"));
  Complex fd1 = (f_eval(c, t + Complex(delta, Real(0))) -
                 f_eval(c, t - Complex(delta, Real(0)))) /
                (2 * delta);
  CHECK(abs(fd1 - f_prime(c, t)) < tol("1e-20"));
  Complex fd2 = (f_prime(c, t + Complex(delta, Real(0))) -
                 f_prime(c, t - Complex(delta, Real(0)))) /
                (2 * delta);
  CHECK(abs(fd2 - f_second(c, t)) < tol("1e-20"));
}

TEST_CASE("branch is continuous along an upper half plane polyline") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  PrecisionGuard pg(c.work);
  // March across Re t = r at height 0.3; f must not jump.
  Complex prev = f_eval(c, Complex(Real(2), Real("0.3")));
  for (long k = 1; k <= 2000; ++k) {
    Complex t(Real(2) + Real(k) / 1000, Real("0.3"));
    Complex cur = f_eval(c, t);
    CHECK(abs(cur - prev) < Real("0.1"));
    prev = cur;
  }
}

TEST_CASE("real axis rays of Im f'") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  PrecisionGuard pg(c.work);
  CHECK(abs(f_prime(c, Complex(Real(2), Real(0))).im) < tol("1e-40"));
  Real pi = const_pi(c.work);
  CHECK(abs(f_prime(c, Complex(Real(4), Real(0))).im - pi) < tol("1e-40"));
}

TEST_CASE("saddle points for the reference parameters") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  SaddlePoint s1 = find_t_lambda(c, 1);
  CHECK(s1.residual < tol("1e-12"));
  CHECK(s1.t.im == 0);

  // Re h(x1) = 3 log(rho) - 10 log(2r + rho) + 2dr log 2r ... spot value.
  CHECK(to_double(s1.h.re) == doctest::Approx(-30.8316).epsilon(1e-4));
  Real pi = const_pi(c.work);
  CHECK(abs(s1.h.im + 3 * pi) < tol("1e-30"));
  CHECK(abs(s1.psi_const + pi / 2) < tol("1e-30"));

  SaddlePoint s0 = find_t_lambda(c, 0);
  CHECK(s0.residual < tol("1e-12"));
  CHECK(s0.h.im == 0);
  CHECK(s0.h.re < s1.h.re);
}

TEST_CASE("interior saddles obey the window lemmas") {
  SaddleContext c = make_saddle_context(2, 88, 10, kPrec);
  LemmaReport lr = lemma_suite(c);
  CHECK(lr.max_residual < tol("1e-12"));
  CHECK(lr.residuals_ok);
  CHECK(lr.in_disc_ok);
  CHECK(lr.reh_monotone_ok);
  CHECK(lr.arg_eps_ok);
  CHECK(lr.imh_window_ok);
  CHECK(lr.imh_offgrid_ok);
  CHECK(lr.imf_rays_ok);
  CHECK(lr.ref_negative_ok);
  CHECK(lr.ok());

  // lambda = 1 saddle sits in the expected angular sector below the axis.
  const SaddlePoint& s1 = lr.saddles[1];
  Real pi = const_pi(c.work);
  Real ang = arg(s1.eps);
  CHECK(ang > -3 * pi / 4);
  CHECK(ang < -pi / 4);
  CHECK(s1.t.im > 0);
}

TEST_CASE("tiny rho regime solves by fixed point") {
  SaddleContext c = make_saddle_context(1, 1476727, 11735, kPrec);
  CHECK(c.tiny);
  RhoResult rr = find_x1_rho(c);
  CHECK(rr.fixed_point);
  CHECK(rr.rho > 0);
  CHECK(log10_abs(rr.rho) < -40);
  SaddlePoint sp = find_t_lambda(c, 1);
  CHECK(sp.residual < tol("1e-12"));
}

TEST_CASE("spectral data of the presets") {
  PeriodicSeries zeta = preset_series("zeta");
  SpectralData sz = spectral_data(zeta, kPrec);
  CHECK(sz.lambda0 == 1);
  CHECK(abs(sz.b.at(1) - Complex(Real(1) / 2)) < tol("1e-20"));
  CHECK(!sz.exact_zero.at(1));

  PeriodicSeries chi4 = preset_series("chi4");
  SpectralData s4 = spectral_data(chi4, kPrec);
  CHECK(s4.lambda0 == 2);
  CHECK(s4.exact_zero.at(4));
  CHECK(s4.exact_zero.at(0));
  CHECK(abs(s4.b.at(2) - Complex(Real(0), Real(-2))) < tol("1e-20"));
  CHECK(abs(s4.b.at(-2) - conj(s4.b.at(2))) < tol("1e-40"));
  CHECK(abs(s4.b.at(4).im) < tol("1e-60"));

  PeriodicSeries chi3 = preset_series("chi3");
  SpectralData s3 = spectral_data(chi3, kPrec);
  CHECK(s3.lambda0 == 1);
  CHECK(s3.exact_zero.at(3));
  CHECK(abs(s3.b.at(1) - Complex(Real(0), -sqrt(Real(3)))) < tol("1e-20"));

  // Exact cyclotomic representation matches the numeric sums.
  for (const auto& [lam, elt] : s3.exact) {
    CHECK(abs(cyclo_eval(elt, 60) - s3.b.at(lam)) < tol("1e-20"));
  }
}

TEST_CASE("predicted rate and its expansion") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  RateResult rate = rate_predicted(c, 1);
  CHECK(to_double(rate.value) == doctest::Approx(-21.1275).epsilon(1e-4));
  CHECK(abs(rate.direct_value - rate.expansion_value) <= rate.expansion_bound);
  CHECK(rate.value == rate.direct_value);  // moderate rho: direct evaluation

  SaddleContext ct = make_saddle_context(1, 1476727, 11735, kPrec);
  RateResult rt = rate_predicted(ct, 1);
  CHECK(rt.value == rt.expansion_value);  // tiny rho: expansion
  // Direct evaluation at t = r + rho cancels ~|log10 rho| digits computing
  // r - t, so allow rounding room on top of the truncation bound.
  Real round_slack = tol("1e-70") * (1 + abs(rt.direct_value));
  CHECK(abs(rt.direct_value - rt.expansion_value) <=
        rt.expansion_bound + round_slack);
}

TEST_CASE("normalization factor log magnitude") {
  PrecisionGuard pg(100);
  SaddleContext c = make_saddle_context(1, 2, 1, kPrec);
  CHECK(abs(phi_log_abs(c, 1)) < tol("1e-30"));

  // Slope in n is 2(a-2b) log 2 + 4b log d.
  SaddleContext c2 = make_saddle_context(3, 7, 2, kPrec);
  Real slope = phi_log_abs(c2, 21) - phi_log_abs(c2, 20);
  Real expect = 2 * (7 - 4) * log(Real(2)) + 8 * log(Real(3)) +
                (Real(4) - 7 - 4) / 2 * (log(Real(21)) - log(Real(20))) +
                log(Real(21)) - log(Real(20));
  CHECK(abs(slope - expect) < tol("1e-30"));
}

TEST_CASE("quadrature matches the saddle asymptotic and its symmetry") {
  SaddleContext c = make_saddle_context(1, 5, 1, kPrec);
  Complex j1 = J_quadrature(c, 1, 8);
  Complex jm1 = J_quadrature(c, -1, 8);
  CHECK(abs(jm1 + conj(j1)) < abs(j1) * tol("1e-30"));

  // The value does not depend on where the vertical line is placed.
  Real x0 = find_x0(c);
  Real alt = (x0 * 3 + c.r) / 4;
  Complex j1b = J_quadrature(c, 1, 8, &alt);
  CHECK(abs(j1b - j1) < abs(j1) * tol("1e-25"));

  // Magnitude growth between n=8 and n=16 tracks Re h at the saddle.
  Complex j2 = J_quadrature(c, 1, 16);
  SaddlePoint sp = find_t_lambda(c, 1);
  double measured = (log10_abs(abs(j2)) - log10_abs(abs(j1))) / 8.0 * 2.302585092994046;
  CHECK(measured == doctest::Approx(to_double(sp.h.re)).epsilon(0.1));

  JAsymptotic ja = J_asymptotic(c, sp, 16);
  double rel = std::abs(std::exp(to_double(ja.log_magnitude) -
                                 log10_abs(abs(j2)) * 2.302585092994046) -
                        1.0);
  CHECK(rel < 0.25);
}

TEST_CASE("subsequence selection") {
  PeriodicSeries zeta = preset_series("zeta");
  SaddleContext c1 = make_saddle_context(1, 9, 1, kPrec);
  SubsequenceReport r1 = subsequence_select(c1, spectral_data(zeta, kPrec), 30);
  CHECK(r1.w == 0);
  CHECK(r1.gap_bound == 1);
  CHECK(r1.ns.size() == 30);

  PeriodicSeries chi4 = preset_series("chi4");
  SaddleContext c4 = make_saddle_context(4, 17, 2, kPrec);
  SubsequenceReport r4 = subsequence_select(c4, spectral_data(chi4, kPrec), 50);
  CHECK(!r4.ns.empty());
  CHECK(r4.gap_bound == 1 + r4.w);
  long prev = 0;
  bool gaps_ok = true;
  for (long n : r4.ns) {
    if (n - prev > r4.gap_bound) gaps_ok = false;
    prev = n;
  }
  CHECK(gaps_ok);
}

TEST_CASE("hypothesis caps") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  Eq24Caps caps = hypothesis_caps(c, false);
  REQUIRE(caps.terms.size() == 2);
  Real pi = const_pi(c.work);
  CHECK(abs(caps.terms[0] - 3 * pi / 100) < tol("1e-40"));
  CHECK(abs(caps.terms[1] - pi / 2) < tol("1e-40"));
  CHECK(caps.min_cap == caps.terms[0]);

  SaddleContext c2 = make_saddle_context(2, 88, 10, kPrec);
  Eq24Caps caps2 = hypothesis_caps(c2, true);
  REQUIRE(caps2.terms.size() == 4);
  CHECK(to_double(caps2.min_cap) == doctest::Approx(0.009097).epsilon(1e-3));
}

TEST_CASE("domain guards") {
  SaddleContext c = make_saddle_context(1, 9, 1, kPrec);
  CHECK_THROWS_AS(f_eval(c, Complex(Real("0.5"), Real(1))), std::domain_error);
  CHECK_THROWS_AS(f_eval(c, Complex(c.r, Real(0))), std::domain_error);
  CHECK_THROWS_AS(find_t_lambda(c, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_t_lambda(c, -1), std::invalid_argument);
}
