#pragma once

#include <map>
#include <utility>

#include "fueter/errors.hpp"
#include "fueter/rational.hpp"

namespace fueter {

// Bivariate polynomial in (x0, r) over the rationals; the coefficient ring of
// the axial calculus.  Key = (degree in x0, degree in r).
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;

  BivariatePoly() = default;
  explicit BivariatePoly(Rational constant) {
    if (constant != 0) c_[{0, 0}] = std::move(constant);
  }

  static BivariatePoly monomial(int dx0, int dr, Rational coeff = Rational(1)) {
    BivariatePoly p;
    if (coeff != 0) p.c_[{dx0, dr}] = std::move(coeff);
    return p;
  }

  const std::map<Key, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  void add_term(int dx0, int dr, const Rational& v) {
    if (dx0 < 0 || dr < 0) throw domain_error("negative exponent in polynomial");
    auto it = c_.find({dx0, dr});
    if (it == c_.end()) {
      if (v != 0) c_[{dx0, dr}] = v;
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.c_ == b.c_; }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out = a;
    for (const auto& [k, v] : b.c_) out.add_term(k.first, k.second, v);
    return out;
  }

  BivariatePoly operator-() const {
    BivariatePoly out;
    for (const auto& [k, v] : c_) out.c_[k] = -v;
    return out;
  }

  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    return a + (-b);
  }

  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ka, va] : a.c_)
      for (const auto& [kb, vb] : b.c_)
        out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return out;
  }

  friend BivariatePoly operator*(const Rational& s, const BivariatePoly& a) {
    BivariatePoly out;
    if (s == 0) return out;
    for (const auto& [k, v] : a.c_) out.c_[k] = s * v;
    return out;
  }

  BivariatePoly d_x0() const {
    BivariatePoly out;
    for (const auto& [k, v] : c_)
      if (k.first > 0) out.add_term(k.first - 1, k.second, v * k.first);
    return out;
  }

  BivariatePoly d_r() const {
    BivariatePoly out;
    for (const auto& [k, v] : c_)
      if (k.second > 0) out.add_term(k.first, k.second - 1, v * k.second);
    return out;
  }

  // All r-exponents even / odd?
  bool even_in_r() const {
    for (const auto& [k, v] : c_)
      if (k.second % 2) return false;
    return true;
  }
  bool odd_in_r() const {
    for (const auto& [k, v] : c_)
      if (k.second % 2 == 0) return false;
    return true;
  }

  // Exact division by r; every term must carry a positive r power.
  BivariatePoly div_r() const {
    BivariatePoly out;
    for (const auto& [k, v] : c_) {
      if (k.second == 0) throw domain_error("polynomial not divisible by r");
      out.c_[{k.first, k.second - 1}] = v;
    }
    return out;
  }

  // Division by d = x0^2 + r^2, as polynomials in x0 over Q[r]; quotient and
  // remainder with deg_x0(rem) < 2.
  std::pair<BivariatePoly, BivariatePoly> divmod_d() const {
    BivariatePoly rem = *this, quot;
    while (true) {
      // leading x0 term of rem with degree >= 2
      int best = -1;
      for (const auto& [k, v] : rem.c_) best = std::max(best, k.first);
      if (best < 2) break;
      BivariatePoly lead;
      for (const auto& [k, v] : rem.c_)
        if (k.first == best) lead.add_term(best - 2, k.second, v);
      // rem -= lead * (x0^2 + r^2); quot += lead
      BivariatePoly d = monomial(2, 0) + monomial(0, 2);
      rem = rem - lead * d;
      quot = quot + lead;
    }
    return {quot, rem};
  }

  bool divisible_by_d() const { return divmod_d().second.is_zero(); }

  template <class T>
  T eval(const T& x0, const T& r) const {
    T acc(0);
    for (const auto& [k, v] : c_) {
      T t = coeff_as<T>(v);
      for (int i = 0; i < k.first; ++i) t = t * x0;
      for (int i = 0; i < k.second; ++i) t = t * r;
      acc += t;
    }
    return acc;
  }

  int degree() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
    return d;
  }

 private:
  template <class T>
  static T coeff_as(const Rational& v) {
    if constexpr (std::is_same_v<T, Rational>)
      return v;
    else
      return T(to_double(v));
  }

  std::map<Key, Rational> c_;
};

}  // namespace fueter
