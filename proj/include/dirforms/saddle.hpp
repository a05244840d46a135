#pragma once
// Saddle point analysis of the tail integrand.  The phase function
//   f(t) = d[(t+r)log(t+r) + (r-t)log(r-t)] + (a+d)[(t-1)log(t-1) - (t+1)log(t+1)]
// with r = (d+2b)/d lives on Re t > 1 with one non-principal branch:
// log(r-t) takes its argument in [-pi, 0] for Im t >= 0 (so it is -pi on the
// real ray t > r) and in [0, pi] for Im t < 0.  The saddles t_lambda solve
// f'(t) = i lambda pi for integer lambda in [0, d]; they cluster within rho
// of r, where rho = x1 - r and x1 is the unique real solution above r.

#include <map>
#include <vector>

#include "dirforms/cplx.hpp"
#include "dirforms/cyclotomic.hpp"
#include "dirforms/mp.hpp"
#include "dirforms/series.hpp"

namespace dirforms {

struct SaddleContext {
  long d = 1, a = 2, b = 1;
  PrecisionSpec prec;
  long work = 0;  // working digits, includes room below the rho scale
  Real r, R;
  double rho_log10_analytic = 0;  // log10 of the bound (5r/2) e^(-R/r)
  bool tiny = false;              // analytic bound < 1e-8: fixed-point solving
};

SaddleContext make_saddle_context(long d, long a, long b,
                                  const PrecisionSpec& prec);

// Branch-aware pieces.  All throw std::domain_error off the domain
// (Re t <= 1, or exactly at the branch point t = r on the real axis).
Complex log_r_minus_t(const SaddleContext& c, const Complex& t);
Complex f_eval(const SaddleContext& c, const Complex& t);
Complex f_prime(const SaddleContext& c, const Complex& t);
Complex f_second(const SaddleContext& c, const Complex& t);
Complex g_eval(const SaddleContext& c, const Complex& t);
Complex h_eval(const SaddleContext& c, const Complex& t);

// log |phi(n)| for the outer normalization factor
//   phi(n) = (-n/2i)(-1)^(dn) 2^(2(a-2b)n+1+a-2b) pi^((a-2b)/2)
//            d^(4bn+2-a) n^((4-a-2b)/2).
Real phi_log_abs(const SaddleContext& c, long n);

// Real saddle in (1, r): unique zero of Re f' there.
Real find_x0(const SaddleContext& c);

struct RhoResult {
  Real x1;
  Real rho;  // x1 - r
  bool fixed_point = false;
  Real analytic_bound;  // (5r/2) e^(-R/r)
};
RhoResult find_x1_rho(const SaddleContext& c);

// The real log-space fixed point for rho alone; converges whenever
// rho * R / r^2 is small.  Exposed for cross-checking against bisection.
Real rho_fixed_point(const SaddleContext& c);

struct SaddlePoint {
  long lambda = 0;
  Complex t;
  Complex eps;   // r - t
  Real residual; // |f'(t) - i lambda pi|
  Complex f2, g, h;
  Real psi_const;  // (pi - normalized arg f'')/2 + arg g
  Real im_h;
  bool continuation_monotone = true;
  Real psi(long n) const { return psi_const + Real(n) * im_h; }
};

SaddlePoint find_t_lambda(const SaddleContext& c, long lambda);

// Oscillator sums b_lambda = sum_m (-1)^m a_m e^(i m lambda pi / d), halved
// at lambda = +-d; lambda runs over -d..d with the parity of d.  Exact
// zero detection happens in the cyclotomic field Q(zeta_lcm(4,2d)).
struct SpectralData {
  long d = 1;
  std::map<long, Complex> b;
  std::map<long, bool> exact_zero;
  std::map<long, CycloElt> exact;  // the field representation per lambda
  long lambda0 = 0;                // largest lambda >= 0 with b_lambda != 0
};
SpectralData spectral_data(const PeriodicSeries& s, const PrecisionSpec& prec);

// Predicted exponential rate of |I(n)| along the dominant subsequence:
//   2(a-2b)log 2 + 4b log d + Re h(t_{lambda0}).
// In the tiny-rho regime `value` is the two-term expansion (the direct value
// is kept in direct_value); otherwise value is the direct evaluation.
struct RateResult {
  Real value;
  Real direct_value;     // Re h evaluated at the solved saddle
  Real expansion_value;  // two-term expansion of Re h near r
  Real expansion_bound;  // (4dR/r)|eps|^2, bounds |direct - expansion|
  long lambda0 = 0;
};
RateResult rate_predicted(const SaddleContext& c, long lambda0);

// Gaussian saddle approximation of J_lambda(n) in log-polar form:
//   log|J| = n Re h + log|g| + (1/2) log(2pi/(n|f''|)),
//   phase  = psi_lambda(n), with (pi - arg f'')/2 taken in [-pi/4, 3pi/4].
struct JAsymptotic {
  Real log_magnitude;
  Real phase;
};
JAsymptotic J_asymptotic(const SaddleContext& c, const SaddlePoint& sp,
                         long n);

// Independent check: direct trapezoid quadrature of the contour integral
// over the vertical line Re t = x_line (default midway between x0 and r).
// lambda may be negative here; J_{-lambda} = -conj(J_lambda).
Complex J_quadrature(const SaddleContext& c, long lambda, long n,
                     const Real* x_line = nullptr);

// Indices n <= n_max whose leading phase arg b_{lambda0} + psi_{lambda0}(n)
// stays in [pi/6, 5pi/6] mod pi, plus the proven gap bound 1 + w.
struct SubsequenceReport {
  std::vector<long> ns;
  long w = 0;          // 0 when every n qualifies (lambda0 = 0 or d)
  long gap_bound = 1;
};
SubsequenceReport subsequence_select(const SaddleContext& c,
                                     const SpectralData& sd, long n_max);

// The smallness caps on rho required by the contour estimates:
//   r pi/(10 R d), pi/(2 d^2), (r/4R) sin(pi/2d), (r/38R)(cos(pi/2d)-cos(3pi/2d)).
// strict=false (the d=1 convention) keeps only the first two.
struct Eq24Caps {
  std::vector<Real> terms;
  Real min_cap;
};
Eq24Caps hypothesis_caps(const SaddleContext& c, bool strict);

struct LemmaReport {
  Real rho;
  std::vector<SaddlePoint> saddles;  // lambda = 0..d
  Real max_residual;
  bool residuals_ok = false;    // all < 1e-12
  bool in_disc_ok = false;      // |t_lambda - r| <= rho (+ float slack)
  bool reh_monotone_ok = false; // Re h(t_lambda) < Re h(t_{lambda+2})
  bool arg_eps_ok = false;      // arg eps_lambda in [-(l+1/2)pi/d, -(l-1/2)pi/d]
  bool imh_window_ok = false;   // -r l pi - pi/d < Im h < -r l pi (interior l)
  bool imh_offgrid_ok = false;  // dist(Im h(t_l), pi Z) > 1e-11, interior l
  bool imf_rays_ok = false;     // Im f' = 0 on (1,r), d pi on (r,inf), in (0,(a+d)pi) above
  bool ref_negative_ok = false; // Re f' < 0 sampled outside the rho-disc
  bool ok() const {
    return residuals_ok && in_disc_ok && reh_monotone_ok && arg_eps_ok &&
           imh_window_ok && imh_offgrid_ok && imf_rays_ok && ref_negative_ok;
  }
};
LemmaReport lemma_suite(const SaddleContext& c);

}  // namespace dirforms
