#include "dirforms/series.hpp"

#include <fstream>
#include <stdexcept>

namespace dirforms {

bool PeriodicSeries::has_imag() const { return !im.empty(); }

bool PeriodicSeries::is_zero() const {
  for (const auto& q : re)
    if (q != 0) return false;
  for (const auto& q : im)
    if (q != 0) return false;
  return true;
}

const Rational& PeriodicSeries::coeff_re(long k) const {
  return re[static_cast<size_t>((k - 1) % d)];
}

Rational PeriodicSeries::coeff_im(long k) const {
  if (im.empty()) return Rational(0);
  return im[static_cast<size_t>((k - 1) % d)];
}

Rational PeriodicSeries::period_sum_re() const {
  Rational s = 0;
  for (const auto& q : re) s += q;
  return s;
}

Rational PeriodicSeries::period_sum_im() const {
  Rational s = 0;
  for (const auto& q : im) s += q;
  return s;
}

void PeriodicSeries::validate() const {
  if (d < 1) throw std::invalid_argument("series: period d must be >= 1");
  if (re.size() != static_cast<size_t>(d))
    throw std::invalid_argument("series: coeffs_re must have exactly d entries");
  if (!im.empty() && im.size() != static_cast<size_t>(d))
    throw std::invalid_argument("series: coeffs_im must have exactly d entries");
  if (is_zero()) throw std::invalid_argument("series: all coefficients are zero");
}

static PeriodicSeries make(long d, std::vector<long> c, std::string label) {
  PeriodicSeries s;
  s.d = d;
  for (long v : c) s.re.emplace_back(v);
  s.label = std::move(label);
  return s;
}

PeriodicSeries preset_series(const std::string& name) {
  if (name == "zeta") return make(1, {1}, "zeta");
  if (name == "chi3") return make(3, {1, -1, 0}, "chi3");
  if (name == "chi4") return make(4, {1, 0, -1, 0}, "chi4");
  if (name == "chi5") return make(5, {1, -1, -1, 1, 0}, "chi5");
  throw std::invalid_argument("unknown series preset '" + name + "'");
}

bool is_preset_name(const std::string& name) {
  return name == "zeta" || name == "chi3" || name == "chi4" || name == "chi5";
}

static std::vector<Rational> parse_coeff_array(const nlohmann::json& j,
                                               const char* field) {
  if (!j.is_array())
    throw std::invalid_argument(std::string("series field '") + field +
                                "' must be an array of rational strings");
  std::vector<Rational> out;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      out.emplace_back(static_cast<long>(e.get<long long>()));
    } else if (e.is_string()) {
      try {
        out.push_back(parse_rational(e.get<std::string>()));
      } catch (const std::invalid_argument& ex) {
        throw std::invalid_argument(std::string("series field '") + field +
                                    "': " + ex.what());
      }
    } else {
      throw std::invalid_argument(std::string("series field '") + field +
                                  "' entries must be strings or integers");
    }
  }
  return out;
}

PeriodicSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("series: top level must be an object");
  if (!j.contains("d") || !j["d"].is_number_integer())
    throw std::invalid_argument("series field 'd' missing or not an integer");
  if (!j.contains("coeffs_re"))
    throw std::invalid_argument("series field 'coeffs_re' missing");
  PeriodicSeries s;
  s.d = j["d"].get<long>();
  s.re = parse_coeff_array(j["coeffs_re"], "coeffs_re");
  if (j.contains("coeffs_im")) s.im = parse_coeff_array(j["coeffs_im"], "coeffs_im");
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw std::invalid_argument("series field 'label' must be a string");
    s.label = j["label"].get<std::string>();
  }
  s.validate();
  return s;
}

nlohmann::json series_to_json(const PeriodicSeries& s) {
  nlohmann::json j;
  j["d"] = s.d;
  nlohmann::json re = nlohmann::json::array();
  for (const auto& q : s.re) re.push_back(rational_str(q));
  j["coeffs_re"] = re;
  if (!s.im.empty()) {
    nlohmann::json im = nlohmann::json::array();
    for (const auto& q : s.im) im.push_back(rational_str(q));
    j["coeffs_im"] = im;
  }
  if (!s.label.empty()) j["label"] = s.label;
  return j;
}

PeriodicSeries load_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open series file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("series file '" + path + "': " + e.what());
  }
  return series_from_json(j);
}

RealifyResult realify(const PeriodicSeries& s) {
  RealifyResult r;
  r.real_part.d = s.d;
  r.real_part.re = s.re;
  r.real_part.label = s.label.empty() ? "re" : s.label + " (re)";
  r.imag_part.d = s.d;
  r.imag_part.re = s.im.empty() ? std::vector<Rational>(s.d, Rational(0)) : s.im;
  r.imag_part.label = s.label.empty() ? "im" : s.label + " (im)";
  r.real_nonzero = !r.real_part.is_zero();
  r.imag_nonzero = !r.imag_part.is_zero();
  return r;
}

}  // namespace dirforms
