#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "fueter/blades.hpp"
#include "fueter/errors.hpp"
#include "fueter/rational.hpp"

namespace fueter {

inline constexpr int kMaxDimension = 20;  // 2^n coefficients; keep sane

inline void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) throw dimension_error("dimension index out of range");
}

// Element of R_{0,n}, blade mask -> coefficient.  Zero coefficients are
// pruned, so the map form is canonical and usable for equality.
template <class S>
class Multivector {
 public:
  explicit Multivector(int n) : n_(n) { check_dimension(n); }
  Multivector(int n, S scalar) : n_(n) {
    check_dimension(n);
    set(kScalarBlade, std::move(scalar));
  }

  static Multivector basis_blade(int n, blade_mask m, S coeff = S(1)) {
    Multivector out(n);
    out.set(m, std::move(coeff));
    return out;
  }

  int dim() const { return n_; }
  const std::map<blade_mask, S>& coeffs() const { return c_; }

  S coeff(blade_mask m) const {
    auto it = c_.find(m);
    return it == c_.end() ? S(0) : it->second;
  }

  void set(blade_mask m, S v) {
    if ((m >> (n_ + 1)) != 0 || (m & 1u) != 0)
      throw dimension_error("blade mask uses generators outside 1..n");
    if (v == S(0))
      c_.erase(m);
    else
      c_[m] = std::move(v);
  }

  void add_to(blade_mask m, const S& v) { set(m, coeff(m) + v); }

  bool is_zero() const { return c_.empty(); }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  Multivector operator-() const {
    Multivector out(n_);
    for (const auto& [m, v] : c_) out.set(m, -v);
    return out;
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    if (a.n_ != b.n_) throw dimension_error("mismatched dimensions in +");
    Multivector out = a;
    for (const auto& [m, v] : b.c_) out.add_to(m, v);
    return out;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    if (a.n_ != b.n_) throw dimension_error("mismatched dimensions in *");
    Multivector out(a.n_);
    for (const auto& [ma, va] : a.c_)
      for (const auto& [mb, vb] : b.c_) {
        const auto p = blade_mul(ma, mb);
        S prod = va * vb;
        if (p.sign < 0) prod = -prod;
        out.add_to(p.mask, prod);
      }
    return out;
  }

  friend Multivector operator*(const S& s, const Multivector& a) {
    Multivector out(a.n_);
    for (const auto& [m, v] : a.c_) out.set(m, s * v);
    return out;
  }
  friend Multivector operator*(const Multivector& a, const S& s) { return s * a; }

  template <class F>
  Multivector grade_map(F&& sign_of) const {
    Multivector out(n_);
    for (const auto& [m, v] : c_) out.set(m, sign_of(m) > 0 ? v : -v);
    return out;
  }

  S scalar_part() const { return coeff(kScalarBlade); }

  S norm_sq() const {
    S s(0);
    for (const auto& [m, v] : c_) s += v * v;
    return s;
  }

 private:
  int n_;
  std::map<blade_mask, S> c_;
};

template <class S>
Multivector<S> main_involution(const Multivector<S>& a) {
  return a.grade_map([](blade_mask m) { return main_involution_sign(m); });
}

template <class S>
Multivector<S> reversion(const Multivector<S>& a) {
  return a.grade_map([](blade_mask m) { return reversion_sign(m); });
}

template <class S>
Multivector<S> conjugation(const Multivector<S>& a) {
  return a.grade_map([](blade_mask m) { return conjugation_sign(m); });
}

template <class S>
double norm(const Multivector<S>& a) {
  double s = 0;
  for (const auto& [m, v] : a.coeffs()) {
    const double d = static_cast<double>([&] {
      if constexpr (std::is_same_v<S, Rational>)
        return to_double(v);
      else
        return v;
    }());
    s += d * d;
  }
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Paravectors x = x0 + x1 e_1 + ... + xn e_n, identified with R^{n+1}.

template <class S>
struct Paravector {
  int n;
  S x0;
  std::vector<S> vec;  // components of the e_1..e_n part

  explicit Paravector(int n_) : n(n_), x0(0), vec(static_cast<size_t>(n_), S(0)) {
    check_dimension(n_);
  }
  Paravector(int n_, S x0_, std::vector<S> v) : n(n_), x0(std::move(x0_)), vec(std::move(v)) {
    check_dimension(n_);
    if (vec.size() != static_cast<size_t>(n)) throw dimension_error("paravector size");
  }

  S norm_sq() const {
    S s = x0 * x0;
    for (const auto& c : vec) s += c * c;
    return s;
  }

  friend bool operator==(const Paravector& a, const Paravector& b) {
    return a.n == b.n && a.x0 == b.x0 && a.vec == b.vec;
  }
};

template <class S>
Multivector<S> to_multivector(const Paravector<S>& x) {
  Multivector<S> out(x.n);
  out.set(kScalarBlade, x.x0);
  for (int j = 1; j <= x.n; ++j) out.set(blade_mask(1) << j, x.vec[j - 1]);
  return out;
}

// Extracts scalar + vector part; anything of higher grade must be absent.
template <class S>
Paravector<S> to_paravector(const Multivector<S>& a) {
  Paravector<S> out(a.dim());
  for (const auto& [m, v] : a.coeffs()) {
    if (m == kScalarBlade)
      out.x0 = v;
    else if (grade(m) == 1)
      out.vec[std::countr_zero(m) - 1] = v;
    else
      throw domain_error("multivector has grade >= 2 part, not a paravector");
  }
  return out;
}

template <class S>
Paravector<S> conjugate(const Paravector<S>& x) {
  Paravector<S> out = x;
  for (auto& c : out.vec) c = -c;
  return out;
}

template <class S>
double norm(const Paravector<S>& x) {
  if constexpr (std::is_same_v<S, Rational>)
    return std::sqrt(to_double(x.norm_sq()));
  else
    return std::sqrt(static_cast<double>(x.norm_sq()));
}

template <class S>
Paravector<S> inverse(const Paravector<S>& x) {
  const S d = x.norm_sq();
  if (d == S(0)) throw domain_error("paravector inverse at zero");
  Paravector<S> out(x.n);
  out.x0 = x.x0 / d;
  for (int j = 0; j < x.n; ++j) out.vec[j] = -x.vec[j] / d;
  return out;
}

template <class S>
S binomial_exact_as(long n, long k) {
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(binomial_exact(static_cast<int>(n), static_cast<int>(k)));
  } else {
    double r = 1;
    for (long i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return static_cast<S>(r);
  }
}

// x^l through the slice embedding z = x0 + i |x_|: real/imaginary parts of z^l
// are polynomials in x0 and |x_|^2, so everything stays in the scalar ring.
template <class S>
Paravector<S> pow(const Paravector<S>& x, long l) {
  if (l < 0) return pow(inverse(x), -l);
  S r2(0);
  for (const auto& c : x.vec) r2 += c * c;
  // (x0 + w r)^l with w^2 = -1: even k terms scalar, odd k terms parallel x_.
  S even(0), odd(0);  // x^l = even + odd * x_   (odd already divided by r)
  S x0pow(1);
  std::vector<S> x0powers(static_cast<size_t>(l) + 1, S(1));
  for (long k = 1; k <= l; ++k) x0powers[k] = x0powers[k - 1] * x.x0;
  for (long k = 0; k <= l; ++k) {
    S term = S(binomial_exact_as<S>(l, k)) * x0powers[l - k];
    S r2pow(1);
    for (long t = 0; t < k / 2; ++t) r2pow *= r2;
    term = term * r2pow;
    if (k % 4 == 2 || k % 4 == 3) term = -term;
    if (k % 2 == 0)
      even += term;
    else
      odd += term;
  }
  Paravector<S> out(x.n);
  out.x0 = even;
  for (int j = 0; j < x.n; ++j) out.vec[j] = odd * x.vec[j];
  return out;
}

}  // namespace fueter
