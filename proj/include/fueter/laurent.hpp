#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>

#include <json.hpp>

#include "fueter/axial.hpp"
#include "fueter/errors.hpp"
#include "fueter/multivector.hpp"

namespace fueter {

// Holomorphic intrinsic function as a real-coefficient Laurent series at a
// real center.  Real coefficients at a real center are exactly the intrinsic
// condition; complex data is rejected at the JSON boundary.
struct LaurentSeries {
  double center = 0.0;
  std::map<int, double> coeffs;  // exponent -> real coefficient
  double inner_radius = 0.0;
  double outer_radius = std::numeric_limits<double>::infinity();

  int l_min() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
  int l_max() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

  void validate() const {
    if (!(inner_radius >= 0) || !(outer_radius > 0) || inner_radius >= outer_radius)
      throw config_error("laurent series: invalid annulus radii");
    if (l_min() < 0 && inner_radius <= 0)
      throw config_error("laurent series: negative exponents need inner_radius > 0");
  }

  bool in_annulus(double rho) const {
    if (rho < inner_radius || rho > outer_radius) return false;
    if (rho == 0 && l_min() < 0) return false;
    return true;
  }
};

inline nlohmann::json to_json(const LaurentSeries& s) {
  nlohmann::json j;
  j["schema"] = 1;
  j["center"] = s.center;
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [l, v] : s.coeffs) c[std::to_string(l)] = v;
  j["coeffs"] = c;
  j["inner_radius"] = s.inner_radius;
  if (std::isfinite(s.outer_radius)) j["outer_radius"] = s.outer_radius;
  return j;
}

inline LaurentSeries laurent_from_json(const nlohmann::json& j) {
  LaurentSeries s;
  try {
    s.center = j.value("center", 0.0);
    for (const auto& [key, val] : j.at("coeffs").items())
      s.coeffs[std::stoi(key)] = val.get<double>();
    s.inner_radius = j.value("inner_radius", 0.0);
    s.outer_radius = j.value("outer_radius", std::numeric_limits<double>::infinity());
  } catch (const std::exception& e) {
    throw config_error(std::string("laurent series json: ") + e.what());
  }
  s.validate();
  return s;
}

inline std::complex<double> eval_holo(const LaurentSeries& f, std::complex<double> z) {
  const std::complex<double> za = z - f.center;
  if (!f.in_annulus(std::abs(za)))
    throw regime_error("eval_holo: point outside the annulus of validity");
  std::complex<double> acc = 0;
  for (const auto& [l, c] : f.coeffs) acc += c * std::pow(za, l);
  return acc;
}

// Induced function on R^{n+1}: u(x0, r) + (x_/r) v(x0, r).
inline Paravector<double> induce(const LaurentSeries& f, const Paravector<double>& x) {
  double r2 = 0;
  for (double c : x.vec) r2 += c * c;
  const double r = std::sqrt(r2);
  const auto uv = eval_holo(f, {x.x0, r});
  Paravector<double> out(x.n);
  out.x0 = uv.real();
  if (r == 0.0) {
    // intrinsic series vanish on the axis; anything else is malformed input
    if (std::abs(uv.imag()) > 1e-12 * (1.0 + std::abs(uv.real())))
      throw domain_error("induce: nonzero imaginary part on the real axis");
    return out;
  }
  for (int j = 0; j < x.n; ++j) out.vec[j] = uv.imag() / r * x.vec[j];
  return out;
}

// Substitute x0 -> x0 - a in a polynomial axial pair.
inline BivariatePoly shift_x0_poly(const BivariatePoly& p, const Rational& a) {
  BivariatePoly out;
  for (const auto& [key, v] : p.terms()) {
    auto [dx, dr] = key;
    // (x0 - a)^dx expanded
    for (int k = 0; k <= dx; ++k) {
      Rational c = v * Rational(binomial_exact(dx, k));
      Rational apow(1);
      for (int i = 0; i < dx - k; ++i) apow *= -a;
      out.add_term(k, dr, c * apow);
    }
  }
  return out;
}

inline AxialPair shift_x0(const AxialPair& f, const Rational& a) {
  if (f.A.den_half() != 0 || f.B.den_half() != 0)
    throw domain_error("shift_x0 implemented for polynomial pairs only");
  return AxialPair(AxialRational(shift_x0_poly(f.A.num(), a), 0),
                   AxialRational(shift_x0_poly(f.B.num(), a), 0), f.n);
}

// Exact axial pair of a finite series: sum of a_l (x - a)^l pairs.  Negative
// exponents keep powers of x0^2 + r^2 in the denominator, so a shifted center
// is representable only for polynomial series.
inline AxialPair axial_of_series(const LaurentSeries& f, int n) {
  const Rational a = rational_from_double(f.center);
  if (a != 0 && f.l_min() < 0)
    throw domain_error("axial_of_series: shifted centers require a polynomial series");
  AxialPair acc(AxialRational(), AxialRational(), n);
  for (const auto& [l, c] : f.coeffs) {
    if (c == 0.0) continue;
    AxialPair term = pow_pair(l, n);
    if (a != 0) term = shift_x0(term, a);
    acc = acc + rational_from_double(c) * term;
  }
  return acc;
}

}  // namespace fueter
