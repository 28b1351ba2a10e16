#pragma once

#include <complex>

#include "fueter/multivector.hpp"
#include "fueter/polynomial.hpp"

namespace fueter {

// Rational function N(x0, r) / (x0^2 + r^2)^{m/2}.  m may be any integer
// (negative m folds positive powers of d = x0^2 + r^2 into the value, odd m
// appears in even-dimension kernels).  Canonical form: N carries no d factor.
class AxialRational {
 public:
  AxialRational() = default;
  AxialRational(BivariatePoly num, int den_half) : num_(std::move(num)), den_half_(den_half) {
    normalize();
  }
  explicit AxialRational(Rational constant) : num_(BivariatePoly(std::move(constant))) {}

  const BivariatePoly& num() const { return num_; }
  int den_half() const { return den_half_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const AxialRational& a, const AxialRational& b) {
    return a.den_half_ == b.den_half_ && a.num_ == b.num_;
  }

  friend AxialRational operator+(const AxialRational& a, const AxialRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (((a.den_half_ - b.den_half_) % 2) != 0)
      throw domain_error("axial addition with mismatched half-power parity");
    const int m = std::max(a.den_half_, b.den_half_);
    return AxialRational(a.lift_num(m) + b.lift_num(m), m);
  }

  AxialRational operator-() const {
    AxialRational out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend AxialRational operator-(const AxialRational& a, const AxialRational& b) {
    return a + (-b);
  }

  friend AxialRational operator*(const AxialRational& a, const AxialRational& b) {
    return AxialRational(a.num_ * b.num_, a.den_half_ + b.den_half_);
  }

  friend AxialRational operator*(const Rational& s, const AxialRational& a) {
    if (s == 0) return AxialRational();
    AxialRational out = a;
    out.num_ = s * out.num_;
    return out;
  }

  // d(N d^{-m/2}) = [N_x0 d - m x0 N] d^{-(m+2)/2}
  AxialRational d_x0() const {
    BivariatePoly d = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 2);
    BivariatePoly top = num_.d_x0() * d - Rational(den_half_) * (BivariatePoly::monomial(1, 0) * num_);
    return AxialRational(std::move(top), den_half_ + 2);
  }

  AxialRational d_r() const {
    BivariatePoly d = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 2);
    BivariatePoly top = num_.d_r() * d - Rational(den_half_) * (BivariatePoly::monomial(0, 1) * num_);
    return AxialRational(std::move(top), den_half_ + 2);
  }

  // Exact division by r (numerator must be odd in r).
  AxialRational div_r() const { return AxialRational(num_.div_r(), den_half_); }

  bool even_in_r() const { return num_.even_in_r(); }
  bool odd_in_r() const { return num_.odd_in_r() || num_.is_zero(); }

  double eval(double x0, double r) const {
    const double d = x0 * x0 + r * r;
    return num_.eval<double>(x0, r) * std::pow(d, -den_half_ / 2.0);
  }

  // Exact evaluation; requires an integral power of d, i.e. even den_half.
  Rational eval_exact(const Rational& x0, const Rational& r) const {
    if (den_half_ % 2 != 0)
      throw domain_error("exact evaluation of a half-integer denominator power");
    const Rational d = x0 * x0 + r * r;
    Rational v = num_.eval<Rational>(x0, r);
    const int m = den_half_ / 2;
    if (m > 0 && d == 0) throw domain_error("evaluation at the origin");
    for (int i = 0; i < m; ++i) v /= d;
    for (int i = 0; i < -m; ++i) v *= d;
    return v;
  }

 private:
  BivariatePoly lift_num(int target_m) const {
    BivariatePoly d = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 2);
    BivariatePoly out = num_;
    for (int i = 0; i < (target_m - den_half_) / 2; ++i) out = out * d;
    return out;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_half_ = 0;
      return;
    }
    while (true) {
      auto [q, rem] = num_.divmod_d();
      if (!rem.is_zero()) break;
      num_ = q;
      den_half_ -= 2;
    }
  }

  BivariatePoly num_;
  int den_half_ = 0;
};

// Axial function A(x0, r) + omega B(x0, r); A even in r, B odd in r, so the
// 1/r and 1/r^2 pieces of the operators below stay polynomial.
struct AxialPair {
  AxialRational A, B;
  int n = 3;

  AxialPair() = default;
  AxialPair(AxialRational a, AxialRational b, int n_) : A(std::move(a)), B(std::move(b)), n(n_) {
    check_dimension(n_);
    if (!A.even_in_r() || !B.odd_in_r()) throw parity_error("axial pair parity violated");
  }

  bool is_zero() const { return A.is_zero() && B.is_zero(); }

  friend bool operator==(const AxialPair& a, const AxialPair& b) {
    return a.n == b.n && a.A == b.A && a.B == b.B;
  }

  friend AxialPair operator+(const AxialPair& a, const AxialPair& b) {
    if (a.n != b.n) throw dimension_error("axial pair dimension mismatch");
    return AxialPair(a.A + b.A, a.B + b.B, a.n);
  }
  friend AxialPair operator-(const AxialPair& a, const AxialPair& b) {
    return a + AxialPair(-b.A, -b.B, b.n);
  }
  friend AxialPair operator*(const Rational& s, const AxialPair& p) {
    return AxialPair(s * p.A, s * p.B, p.n);
  }

  // Product in the commutative slice algebra R + omega R (omega^2 = -1).
  friend AxialPair operator*(const AxialPair& a, const AxialPair& b) {
    if (a.n != b.n) throw dimension_error("axial pair dimension mismatch");
    return AxialPair(a.A * b.A - a.B * b.B, a.A * b.B + a.B * b.A, a.n);
  }

  std::complex<double> eval_slice(double x0, double r) const {
    return {A.eval(x0, r), B.eval(x0, r)};
  }

  // Value as a paravector at x = x0 + omega r with omega = x_/|x_|.
  Paravector<double> eval(const Paravector<double>& x) const {
    double r2 = 0;
    for (double c : x.vec) r2 += c * c;
    const double r = std::sqrt(r2);
    Paravector<double> out(x.n);
    out.x0 = A.eval(x.x0, r);
    if (r > 0) {
      const double b = B.eval(x.x0, r);
      for (int j = 0; j < x.n; ++j) out.vec[j] = b / r * x.vec[j];
    }
    return out;
  }
};

// D f = (dA/dx0 - dB/dr - (n-1) B/r) + omega (dB/dx0 + dA/dr)  (Vekua form).
inline AxialPair dirac_axial(const AxialPair& f) {
  const Rational nm1(f.n - 1);
  AxialRational scalar = f.A.d_x0() - f.B.d_r() - nm1 * f.B.div_r();
  AxialRational vector = f.B.d_x0() + f.A.d_r();
  return AxialPair(std::move(scalar), std::move(vector), f.n);
}

// Conjugate operator: (dA/dx0 + dB/dr + (n-1) B/r) + omega (dB/dx0 - dA/dr).
inline AxialPair dirac_conj_axial(const AxialPair& f) {
  const Rational nm1(f.n - 1);
  AxialRational scalar = f.A.d_x0() + f.B.d_r() + nm1 * f.B.div_r();
  AxialRational vector = f.B.d_x0() - f.A.d_r();
  return AxialPair(std::move(scalar), std::move(vector), f.n);
}

// Laplacian of R^{n+1} in axial coordinates.  The B part uses
// d/dr(B/r) = B_r/r - B/r^2 so everything stays polynomial.
inline AxialPair laplacian_axial(const AxialPair& f) {
  const Rational nm1(f.n - 1);
  AxialRational a = f.A.d_x0().d_x0() + f.A.d_r().d_r() + nm1 * f.A.d_r().div_r();
  AxialRational b = f.B.d_x0().d_x0() + f.B.d_r().d_r() + nm1 * f.B.div_r().d_r();
  return AxialPair(std::move(a), std::move(b), f.n);
}

// Exact axial pair of x^l (any integer l; l < 0 uses conj(x)^{|l|} / |x|^{2|l|}).
inline AxialPair pow_pair(long l, int n) {
  const long m = l < 0 ? -l : l;
  BivariatePoly A, B;
  for (long k = 0; k <= m; ++k) {
    Rational c(binomial_exact(static_cast<int>(m), static_cast<int>(k)));
    if (k % 4 >= 2) c = -c;  // w^k signs: 1, w, -1, -w
    if (k % 2 == 0)
      A.add_term(static_cast<int>(m - k), static_cast<int>(k), c);
    else
      B.add_term(static_cast<int>(m - k), static_cast<int>(k), c);
  }
  if (l >= 0) return AxialPair(AxialRational(std::move(A), 0), AxialRational(std::move(B), 0), n);
  // x^{-m} = conj(x)^m / d^m
  return AxialPair(AxialRational(std::move(A), 2 * static_cast<int>(m)),
                   AxialRational(-std::move(B), 2 * static_cast<int>(m)), n);
}

// beta(z^l) for odd n by the pointwise route: (-1)^{(n-1)/2} Delta^{(n-1)/2}
// applied to the axial pair of x^l.
inline AxialPair beta_pointwise_odd(long l, int n) {
  if (n < 1 || n % 2 == 0) throw domain_error("beta_pointwise_odd requires odd n");
  AxialPair f = pow_pair(l, n);
  const int half = (n - 1) / 2;
  for (int i = 0; i < half; ++i) f = laplacian_axial(f);
  return (half % 2) ? Rational(-1) * f : f;
}

}  // namespace fueter
