#pragma once
// Periodic coefficient sequences a_1, a_2, ... with a_k = a_{k mod d}.  The
// Dirichlet characters used in the tests are instances, but any rational
// (optionally complex) period works.

#include "json.hpp"
#include <optional>
#include <string>
#include <vector>

#include "dirforms/rational.hpp"

namespace dirforms {

struct PeriodicSeries {
  long d = 1;
  std::vector<Rational> re;  // size d, entries a_1..a_d
  std::vector<Rational> im;  // empty for real series, else size d
  std::string label;

  bool has_imag() const;
  bool is_zero() const;
  // 1-indexed periodic access (k >= 1).
  const Rational& coeff_re(long k) const;
  Rational coeff_im(long k) const;  // 0 when no imaginary part
  Rational period_sum_re() const;
  Rational period_sum_im() const;

  // Throws std::invalid_argument if d < 1, sizes disagree, or all
  // coefficients vanish (the zero series defines nothing worth evaluating).
  void validate() const;
};

// Built-in test series: "zeta" (d=1, all ones) and the nontrivial real
// characters "chi3", "chi4" plus the even character "chi5" mod 5.
PeriodicSeries preset_series(const std::string& name);
bool is_preset_name(const std::string& name);

// JSON schema: {"d": int, "coeffs_re": ["p/q", ...], "coeffs_im": [...]?,
// "label": string?}.  Errors name the offending field.
PeriodicSeries series_from_json(const nlohmann::json& j);
nlohmann::json series_to_json(const PeriodicSeries& s);
PeriodicSeries load_series_file(const std::string& path);

// Split a complex series L into real-coefficient parts L = L_re + i*L_im.
// Either part may come back all-zero; callers check the flags before use.
struct RealifyResult {
  PeriodicSeries real_part;
  PeriodicSeries imag_part;
  bool real_nonzero = false;
  bool imag_nonzero = false;
};
RealifyResult realify(const PeriodicSeries& s);

}  // namespace dirforms
