#include "dirforms/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "dirforms/forms.hpp"

namespace dirforms {

std::string variant_name(BoundVariant v) {
  switch (v) {
    case BoundVariant::closed_with_slack: return "with-slack";
    case BoundVariant::closed_no_slack: return "no-slack";
    case BoundVariant::exact_saddle: return "exact";
  }
  throw std::logic_error("unknown variant");
}

BoundVariant parse_variant(const std::string& s) {
  if (s == "with-slack") return BoundVariant::closed_with_slack;
  if (s == "no-slack") return BoundVariant::closed_no_slack;
  if (s == "exact") return BoundVariant::exact_saddle;
  throw std::invalid_argument("unknown variant: " + s);
}

std::string mode_name(HypMode m) {
  return m == HypMode::analytic ? "analytic" : "numeric";
}

HypMode parse_mode(const std::string& s) {
  if (s == "analytic") return HypMode::analytic;
  if (s == "numeric") return HypMode::numeric;
  throw std::invalid_argument("unknown mode: " + s);
}

bool default_strict(long d) { return d >= 2; }

static void validate_abd(long d, long a, long b) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  if (a < 2 * b) throw std::invalid_argument("a must be >= 2b");
}

HypothesisReport hypothesis_check(long d, long a, long b, HypMode mode,
                                  bool strict, const PrecisionSpec& prec) {
  validate_abd(d, a, b);
  PrecisionGuard pg(prec.total());
  HypothesisReport rep;
  rep.d = d;
  rep.a = a;
  rep.b = b;
  rep.mode = mode;
  rep.strict = strict;

  SaddleContext c = make_saddle_context(d, a, b, prec);
  rep.r_ge_2 = c.r >= 2;
  rep.R_ge_3r = c.R >= 3 * c.r;

  Eq24Caps caps = hypothesis_caps(c, strict);
  rep.caps = caps.terms;
  rep.min_cap = caps.min_cap;

  if (mode == HypMode::analytic) {
    rep.rho_used = Real(5) * c.r / (Real(2) * exp(c.R / c.r));
    rep.rho_provenance = "analytic-bound";
  } else {
    rep.rho_used = find_x1_rho(c).rho;
    rep.rho_provenance = "computed-rho";
  }
  rep.rho_ok = rep.rho_used < rep.min_cap;
  rep.pass = rep.r_ge_2 && rep.R_ge_3r && rep.rho_ok;
  return rep;
}

Real beta_value(long d, long a, long b, const PrecisionSpec& prec) {
  validate_abd(d, a, b);
  PrecisionGuard pg(prec.total());
  Real log2 = log(Real(2));
  return Real(2 * a * d) + Real(2 * a) * log2 +
         Real(4 * (b + d)) * log(Real(b + d)) - Real(4 * d) * log(Real(d));
}

Real alpha_closed(long d, long a, long b, BoundVariant v,
                  const PrecisionSpec& prec) {
  validate_abd(d, a, b);
  if (v == BoundVariant::exact_saddle)
    throw std::invalid_argument("alpha_closed needs a closed variant");
  PrecisionGuard pg(prec.total());
  // r = (d+2b)/d, dR = a+d; keep the log arguments exact rationals.
  Real rp1 = to_real(Rational(2 * d + 2 * b, d), prec.total());
  Real rm1 = to_real(Rational(2 * b, d), prec.total());
  Real two_r = to_real(Rational(2 * (d + 2 * b), d), prec.total());
  Real log2 = log(Real(2));
  Real alpha = Real(a + d) * (rp1 * log(rp1) - rm1 * log(rm1)) -
               Real(2 * a) * (Real(d) + log2) -
               Real(4 * b) * (log(Real(d)) - log2) -
               Real(2 * (d + 2 * b)) * log(two_r);
  if (v == BoundVariant::closed_with_slack) alpha -= Real(1) / Real(3);
  return alpha;
}

Real alpha_exact(long d, long a, long b, long lambda0,
                 const PrecisionSpec& prec) {
  validate_abd(d, a, b);
  if (lambda0 < 0 || lambda0 > d)
    throw std::invalid_argument("lambda0 must lie in [0, d]");
  PrecisionGuard pg(prec.total());
  SaddleContext c = make_saddle_context(d, a, b, prec);
  RateResult rate = rate_predicted(c, lambda0);
  Real out = -(Real(2 * a * d) + rate.value);
  out.precision(static_cast<unsigned>(prec.total()));
  return out;
}

Real nesterenko_ratio(const Real& tau1, const Real& tau2) {
  Real denom = Real(1) + tau1 - tau2;
  if (denom <= 0) throw std::domain_error("ratio denominator must be positive");
  return (tau1 + Real(1)) / denom;
}

Real limit_form(const Real& alpha, const Real& beta) {
  if (beta <= 0) throw std::domain_error("beta must be positive");
  return Real(1) + alpha / beta;
}

static long ceil_long(const Real& x) {
  Real c = ceil(x);
  return c.convert_to<long>();
}

BoundReport delta_bound(long d, long a, long b, BoundVariant variant,
                        HypMode mode, bool strict, const PrecisionSpec& prec,
                        const PeriodicSeries* series) {
  validate_abd(d, a, b);
  PrecisionGuard pg(prec.total());
  BoundReport rep;
  rep.d = d;
  rep.a = a;
  rep.b = b;
  rep.variant = variant;
  rep.lambda0 = d;
  rep.hypothesis = hypothesis_check(d, a, b, mode, strict, prec);
  rep.rigorous = rep.hypothesis.pass;

  if (variant == BoundVariant::exact_saddle) {
    if (series != nullptr) {
      if (series->d != d)
        throw std::invalid_argument("series modulus differs from d");
      if (!series->has_imag()) {
        rep.lambda0 = spectral_data(*series, prec).lambda0;
      } else {
        // Complex coefficients: the bound holds for each real component,
        // so use the component with the smaller lambda0 (larger alpha).
        RealifyResult rr = realify(*series);
        long best = -1;
        if (rr.real_nonzero)
          best = spectral_data(rr.real_part, prec).lambda0;
        if (rr.imag_nonzero) {
          long lam = spectral_data(rr.imag_part, prec).lambda0;
          if (best < 0 || lam < best) best = lam;
        }
        if (best < 0) throw std::invalid_argument("series is identically zero");
        rep.lambda0 = best;
      }
    }
    rep.alpha = alpha_exact(d, a, b, rep.lambda0, prec);
  } else {
    rep.alpha = alpha_closed(d, a, b, variant, prec);
  }
  rep.beta = beta_value(d, a, b, prec);
  rep.value = limit_form(rep.alpha, rep.beta);
  rep.delta_threshold = ceil_long(rep.value);
  return rep;
}

namespace {

struct RefRow {
  long a, b;
  const char* value;
  long delta;
};

const RefRow kRowsD1[] = {
    {9, 1, "1.08700873", 2},        {173, 11, "2.00305848", 3},
    {2187, 67, "3.00028164", 4},    {21609, 379, "4.00001320", 5},
    {186491, 2119, "5.00000046", 6}, {1476727, 11735, "6.00000012", 7},
};
const RefRow kRowsD2[] = {
    {88, 10, "1.00176867", 2},      {89, 10, "1.00412440", 2},
    {4936, 187, "2.00003131", 3},   {4937, 187, "2.00008696", 3},
    {159854, 2894, "3.00000007", 4}, {159855, 2894, "3.00000194", 4},
};
const RefRow kRowsD3[] = {
    {549, 48, "1.00024059", 2},     {550, 48, "1.00057135", 2},
    {78235, 2165, "2.00000009", 3}, {78236, 2165, "2.00000285", 3},
};
const RefRow kRowsD4[] = {
    {2594, 186, "1.00003443", 2},     {2595, 186, "1.00009445", 2},
    {990205, 21832, "2.00000005", 3}, {990206, 21832, "2.00000023", 3},
};

}  // namespace

std::vector<TableRow> reproduce_table(long d, const PrecisionSpec& prec) {
  const RefRow* rows = nullptr;
  size_t count = 0;
  switch (d) {
    case 1: rows = kRowsD1; count = std::size(kRowsD1); break;
    case 2: rows = kRowsD2; count = std::size(kRowsD2); break;
    case 3: rows = kRowsD3; count = std::size(kRowsD3); break;
    case 4: rows = kRowsD4; count = std::size(kRowsD4); break;
    default: throw std::invalid_argument("reference rows exist for d in 1..4");
  }
  PrecisionSpec ps = prec;
  ps.digits = std::max(ps.digits, 30L);
  PrecisionGuard pg(ps.total());

  std::vector<TableRow> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const RefRow& ref = rows[i];
    TableRow row;
    row.d = d;
    row.a = ref.a;
    row.b = ref.b;
    row.printed_value = ref.value;
    row.printed_delta = ref.delta;
    Real beta = beta_value(d, ref.a, ref.b, ps);
    row.with_slack =
        limit_form(alpha_closed(d, ref.a, ref.b,
                                BoundVariant::closed_with_slack, ps), beta);
    row.no_slack =
        limit_form(alpha_closed(d, ref.a, ref.b,
                                BoundVariant::closed_no_slack, ps), beta);
    Real printed(ref.value);
    Real diff_ws = abs(row.with_slack - printed);
    Real diff_ns = abs(row.no_slack - printed);
    const Real* matched_value;
    if (diff_ws <= diff_ns) {
      row.matched_variant = "with-slack";
      row.mismatch = diff_ws;
      matched_value = &row.with_slack;
    } else {
      row.matched_variant = "no-slack";
      row.mismatch = diff_ns;
      matched_value = &row.no_slack;
    }
    row.delta_recomputed = ceil_long(*matched_value);
    row.ok = row.mismatch <= Real("5e-7") &&
             row.delta_recomputed == row.printed_delta;
    if (!row.ok) row.matched_variant = "none";
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Double-precision replicas of the closed bound and hypothesis caps for the
// scan phase of the search; candidates are reconfirmed in multiprecision.
struct ScanResult {
  bool feasible = false;
  double value = 0;
};

ScanResult scan_pair(long d, long a, long b, bool strict) {
  ScanResult s;
  if (a < 2 * b) return s;
  double r = double(d + 2 * b) / double(d);
  double R = double(a + d) / double(d);
  if (r < 2 || R < 3 * r) return s;
  double pi = 3.14159265358979323846;
  double ln_cap = std::log(std::min(r * pi / (10 * R * d), pi / (2.0 * d * d)));
  if (strict) {
    ln_cap = std::min(ln_cap, std::log(r / (4 * R) * std::sin(pi / (2 * d))));
    double c4 = r / (38 * R) *
                (std::cos(pi / (2 * d)) - std::cos(3 * pi / (2 * d)));
    if (c4 > 0) ln_cap = std::min(ln_cap, std::log(c4));
  }
  // First-order saddle distance log(rho) ~ log(2r) + R log((r-1)/(r+1)).
  double ln_rho = std::log(2 * r) + R * (std::log(r - 1) - std::log(r + 1));
  if (ln_rho >= ln_cap) return s;
  double ln2 = std::log(2.0), lnd = std::log(double(d));
  double alpha = (a + d) * ((r + 1) * std::log(r + 1) -
                            (r - 1) * std::log(r - 1)) -
                 2.0 * a * (d + ln2) - 4.0 * b * (lnd - ln2) -
                 2.0 * d * r * std::log(2 * r) - 1.0 / 3.0;
  double beta = 2.0 * a * d + 2.0 * a * ln2 +
                4.0 * (b + d) * std::log(double(b + d)) - 4.0 * d * lnd;
  s.feasible = true;
  s.value = 1.0 + alpha / beta;
  return s;
}

}  // namespace

SearchResult search_min_params(long d, long target_dim, long a_limit,
                               const PrecisionSpec& prec) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (target_dim < 2) throw std::invalid_argument("target_dim must be >= 2");
  if (a_limit < 2) throw std::invalid_argument("a_limit must be >= 2");
  bool strict = default_strict(d);
  long b_min = (d + 1) / 2;  // r >= 2 needs 2b >= d
  if (b_min < 1) b_min = 1;
  for (long a = 2; a <= a_limit; ++a) {
    // Candidate b values at this a whose scanned value clears the target,
    // best first; the scan is a hair fuzzy so each is reconfirmed exactly.
    std::vector<std::pair<double, long>> cands;
    for (long b = b_min; 2 * b <= a; ++b) {
      ScanResult s = scan_pair(d, a, b, strict);
      if (s.feasible && s.value > target_dim - 1e-9)
        cands.emplace_back(s.value, b);
    }
    std::sort(cands.begin(), cands.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [val, b] : cands) {
      BoundReport rep = delta_bound(d, a, b, BoundVariant::closed_with_slack,
                                    HypMode::numeric, strict, prec);
      if (rep.rigorous && rep.value > target_dim) {
        SearchResult res;
        res.found = true;
        res.a = a;
        res.b = b;
        res.report = std::move(rep);
        return res;
      }
    }
  }
  return SearchResult{};
}

DemoReport asymptotic_demo(long d, double C, double mu,
                           const std::vector<long>& ts,
                           const PrecisionSpec& prec) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (!(mu > 1)) throw std::invalid_argument("mu must exceed 1");
  double floor_c = mu * (d + std::log(2.0));
  if (!(C > floor_c))
    throw std::invalid_argument("C must exceed mu*(d + log 2)");
  if (ts.empty()) throw std::invalid_argument("need at least one t");

  PrecisionGuard pg(prec.total());
  DemoReport rep;
  rep.d = d;
  rep.mu = mu;
  rep.C = C;
  Real d_log2 = Real(d) + log(Real(2));
  Real c_real(C);
  for (long t : ts) {
    if (t < 2) throw std::invalid_argument("each t must be >= 2");
    long a = static_cast<long>(std::floor(std::pow(double(t), mu)));
    long b = t;
    if (a < 2 * b)
      throw std::invalid_argument("t too small: floor(t^mu) < 2t");
    BoundReport br = delta_bound(d, a, b, BoundVariant::closed_with_slack,
                                 HypMode::numeric, default_strict(d), prec);
    DemoRow row;
    row.t = t;
    row.a = a;
    row.b = b;
    row.value = br.value;
    row.theorem_ref = log(Real(t)) / d_log2;
    row.headline_ref = log(Real(a)) / c_real;
    row.rigorous = br.rigorous;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace dirforms
