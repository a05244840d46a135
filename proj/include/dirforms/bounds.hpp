#pragma once
// Dimension lower bounds 1 + alpha/beta for the rational span of the series
// values, in two closed forms (with and without the 1/3 slack term) and an
// exact-saddle form, plus the smallness hypothesis checker, reference-table
// reproduction, parameter search, and the large-parameter growth demo.

#include <string>
#include <vector>

#include "dirforms/mp.hpp"
#include "dirforms/saddle.hpp"
#include "dirforms/series.hpp"

namespace dirforms {

enum class BoundVariant { closed_with_slack, closed_no_slack, exact_saddle };
enum class HypMode { analytic, numeric };

std::string variant_name(BoundVariant v);    // "with-slack" | "no-slack" | "exact"
BoundVariant parse_variant(const std::string& s);
std::string mode_name(HypMode m);
HypMode parse_mode(const std::string& s);

// Strictness convention: at d = 1 the two trigonometric cap terms are
// dropped (the fourth vanishes identically there), so strict defaults off.
bool default_strict(long d);

struct HypothesisReport {
  long d = 1, a = 2, b = 1;
  HypMode mode = HypMode::numeric;
  bool strict = true;
  bool r_ge_2 = false;
  bool R_ge_3r = false;
  Real rho_used;
  std::string rho_provenance;  // "analytic-bound" | "computed-rho"
  std::vector<Real> caps;
  Real min_cap;
  bool rho_ok = false;
  bool pass = false;
};

HypothesisReport hypothesis_check(long d, long a, long b, HypMode mode,
                                  bool strict, const PrecisionSpec& prec);

// beta = 2ad + 2a log2 + 4(b+d)log(b+d) - 4d log d.
Real beta_value(long d, long a, long b, const PrecisionSpec& prec);

// Closed alpha: dR[(r+1)log(r+1) - (r-1)log(r-1)] - 2a(d+log2)
//               - 4b(log d - log2) - 2dr log(2r), minus 1/3 with slack.
Real alpha_closed(long d, long a, long b, BoundVariant v,
                  const PrecisionSpec& prec);

// Exact alpha: -(2ad + 2(a-2b)log2 + 4b log d + Re h(t_{lambda0})).
Real alpha_exact(long d, long a, long b, long lambda0,
                 const PrecisionSpec& prec);

// The dimension ratio (tau1+1)/(1+tau1-tau2) of the underlying linear
// independence criterion, and its epsilon -> 0 limit form 1 + alpha/beta.
Real nesterenko_ratio(const Real& tau1, const Real& tau2);
Real limit_form(const Real& alpha, const Real& beta);

struct BoundReport {
  long d = 1, a = 2, b = 1;
  BoundVariant variant = BoundVariant::closed_with_slack;
  long lambda0 = 1;  // used by exact_saddle; d otherwise
  Real alpha, beta, value;
  long delta_threshold = 1;  // smallest integer >= value
  HypothesisReport hypothesis;
  bool rigorous = false;  // hypothesis.pass
};

// series may be null; with exact_saddle a supplied series sets lambda0
// from its spectrum, otherwise lambda0 = d (the worst case).
BoundReport delta_bound(long d, long a, long b, BoundVariant variant,
                        HypMode mode, bool strict, const PrecisionSpec& prec,
                        const PeriodicSeries* series = nullptr);

struct TableRow {
  long d = 1, a = 0, b = 0;
  std::string printed_value;  // 8-decimal reference string
  long printed_delta = 0;
  Real with_slack, no_slack;
  std::string matched_variant;  // "with-slack" | "no-slack" | "none"
  Real mismatch;                // |computed(matched) - printed|
  long delta_recomputed = 0;
  bool ok = false;  // matched within 5e-7 and delta agrees
};

// The printed reference rows for d in {1,2,3,4} and their reproduction.
std::vector<TableRow> reproduce_table(long d, const PrecisionSpec& prec);

struct SearchResult {
  bool found = false;
  long a = 0, b = 0;
  BoundReport report;
};

// Smallest a <= a_limit admitting some b with closed_with_slack value
// strictly above target_dim under a passing numeric hypothesis; b maximizes
// the value at that a.  Double-precision scan, multiprecision confirmation.
SearchResult search_min_params(long d, long target_dim, long a_limit,
                               const PrecisionSpec& prec);

struct DemoRow {
  long t = 0, a = 0, b = 0;
  Real value;         // closed_with_slack bound value
  Real theorem_ref;   // log(t)/(d + log 2)
  Real headline_ref;  // log(a)/C
  bool rigorous = false;
};

struct DemoReport {
  long d = 1;
  double mu = 1.5, C = 0;
  std::vector<DemoRow> rows;
};

// a = floor(t^mu), b = t for each sampled t; requires mu > 1 and
// C > mu(d + log 2) so both reference curves are meaningful.
DemoReport asymptotic_demo(long d, double C, double mu,
                           const std::vector<long>& ts,
                           const PrecisionSpec& prec);

}  // namespace dirforms
