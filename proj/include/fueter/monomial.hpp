#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "fueter/axial.hpp"
#include "fueter/constants.hpp"
#include "fueter/laurent.hpp"
#include "fueter/multivector.hpp"

namespace fueter {

// All symbolic representations below are stored with rational coefficients by
// factoring out transcendental constants:
//   * the Cauchy kernel carries omega_n, so we work with  E_hat = omega_n E;
//   * the monomials P^{(m)} carry lambda_n, so we store  P^{(m)} / lambda_n.
// For odd n lambda_n is an exact rational and the full pair is recoverable.

// E_hat = conj(x) / |x|^{n+1}
inline AxialPair cauchy_pair_scaled(int n) {
  return AxialPair(AxialRational(BivariatePoly::monomial(1, 0), n + 1),
                   AxialRational(BivariatePoly::monomial(0, 1, Rational(-1)), n + 1), n);
}

// omega_n * (d/dx0)^k E, exact
inline AxialPair d0k_cauchy_scaled(int n, int k) {
  AxialPair e = cauchy_pair_scaled(n);
  for (int i = 0; i < k; ++i)
    e = AxialPair(e.A.d_x0(), e.B.d_x0(), n);
  return e;
}

// P^{(-k)} / lambda_n = (-1)^{k-1} / (k-1)! * omega_n d0^{k-1} E
inline AxialPair p_minus_scaled(int k, int n) {
  if (k < 1) throw domain_error("p_minus needs k >= 1");
  Rational c = Rational(1) / Rational(factorial_exact(k - 1));
  if ((k - 1) % 2) c = -c;
  return c * d0k_cauchy_scaled(n, k - 1);
}

// Kelvin inversion of an axial pair, symbolically:
//   I(f)(x) = (-1)^{n-1} omega_n E(x) f(1/x),
// where omega_n E is the rational pair E_hat, so rationality is preserved.
inline AxialRational subst_inverse(const AxialRational& f) {
  // N(x0/d, r/d) * d^{m/2}: each monomial x0^a r^b picks up d^{m/2-(a+b)}
  if (f.is_zero()) return f;
  const int m = f.den_half();
  int max_ab = 0;
  for (const auto& [key, v] : f.num().terms()) max_ab = std::max(max_ab, key.first + key.second);
  BivariatePoly d = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 2);
  BivariatePoly out;
  for (const auto& [key, v] : f.num().terms()) {
    auto [a, b] = key;
    BivariatePoly t = BivariatePoly::monomial(a, b, v);
    for (int i = 0; i < max_ab - (a + b); ++i) t = t * d;
    out = out + t;
  }
  return AxialRational(std::move(out), 2 * max_ab - m);
}

inline AxialPair kelvin_axial(const AxialPair& f) {
  // f(1/x): substitute and flip the omega component (omega_{1/x} = -omega_x)
  AxialPair finv(subst_inverse(f.A), -subst_inverse(f.B), f.n);
  AxialPair out = cauchy_pair_scaled(f.n) * finv;
  return ((f.n - 1) % 2) ? Rational(-1) * out : out;
}

// P^{(m)} / lambda_n for m >= 0, via Kelvin inversion of P^{(-(m+1))}.
// The |x|-powers must cancel completely: the result is a polynomial pair.
inline AxialPair p_plus_scaled(int m, int n) {
  if (m < 0) throw domain_error("p_plus needs m >= 0");
  AxialPair out = kelvin_axial(p_minus_scaled(m + 1, n));
  auto assert_poly = [](const AxialRational& g) {
    if (g.den_half() > 0 || (g.den_half() % 2) != 0)
      throw domain_error("kelvin inversion did not produce a polynomial");
  };
  assert_poly(out.A);
  assert_poly(out.B);
  return out;
}

enum class MonomialClass { zero, p_minus, p_plus };

// beta(z^l) up to the lambda_n factor, valid for every n >= 1:
//   l < 0        -> P^{(l)}
//   0..n-2       -> 0
//   l >= n-1     -> P^{(l+1-n)}
struct BetaMonomial {
  MonomialClass cls = MonomialClass::zero;
  long index = 0;  // m in P^{(m)}; unused for the zero class
  std::optional<AxialPair> scaled;

  bool is_zero() const { return cls == MonomialClass::zero; }
};

inline BetaMonomial beta_monomial(long l, int n) {
  check_dimension(n);
  BetaMonomial out;
  if (l >= 0 && l <= n - 2) return out;
  if (l < 0) {
    out.cls = MonomialClass::p_minus;
    out.index = l;
    out.scaled = p_minus_scaled(static_cast<int>(-l), n);
  } else {
    out.cls = MonomialClass::p_plus;
    out.index = l + 1 - n;
    out.scaled = p_plus_scaled(static_cast<int>(l + 1 - n), n);
  }
  return out;
}

// Full exact pair, available when lambda_n is rational (odd n).
inline AxialPair beta_monomial_exact(long l, int n) {
  if (n % 2 == 0) throw domain_error("exact beta pair needs odd n (lambda_n rational)");
  auto b = beta_monomial(l, n);
  if (b.is_zero()) return AxialPair(AxialRational(), AxialRational(), n);
  return lambda_exact(n) * *b.scaled;
}

// ---------------------------------------------------------------------------
// Numeric slice evaluators.  On the slice through x the value lives in the
// commutative plane R + omega R, encoded as std::complex (A + iB).  These are
// O(k) closed forms, used by the kernel series where symbolic pairs would be
// far too slow.

// omega_n (d0)^k E at (x0, r):
//   (-1)^k sum_j C(k,j) ((n+1)/2)_j ((n-1)/2)_{k-j} zbar^{2j-k+1} d^{-(n+1)/2-j}
// built multiplicatively downward from j = k (all term magnitudes are
// comparable since |zbar^2/d| = 1).
inline std::complex<double> d0k_cauchy_slice(int n, int k, double x0, double r) {
  const std::complex<double> zbar(x0, -r);
  const double d = x0 * x0 + r * r;
  if (d == 0.0) throw domain_error("cauchy kernel at the origin");
  double poch = 1.0;
  for (int t = 0; t < k; ++t) poch *= (n + 1) / 2.0 + t;
  std::complex<double> term = poch * std::pow(zbar, k + 1) * std::pow(d, -(n + 1) / 2.0 - k);
  std::complex<double> total = term;
  const std::complex<double> zb2 = zbar * zbar;
  for (int j = k; j > 0; --j) {
    term *= (double(j) / double(k - j + 1)) *
            (((n - 1) / 2.0 + (k - j)) / ((n + 1) / 2.0 + j - 1)) * d / zb2;
    total += term;
  }
  return (k % 2) ? -total : total;
}

inline std::complex<double> p_minus_slice(int n, int k, double x0, double r) {
  double c = DimensionConstants::make(n).lambda_n;
  for (int i = 1; i <= k - 1; ++i) c /= i;  // / (k-1)!
  if ((k - 1) % 2) c = -c;
  return c * d0k_cauchy_slice(n, k - 1, x0, r);
}

inline std::complex<double> p_plus_slice(int n, int m, double x0, double r) {
  const double d = x0 * x0 + r * r;
  if (d == 0.0) {
    // P^{(m)} is homogeneous of degree m; only the constant survives at 0
    if (m > 0) return 0.0;
    const double lam = DimensionConstants::make(n).lambda_n;
    return ((n - 1) % 2) ? -lam : lam;
  }
  std::complex<double> v = p_minus_slice(n, m + 1, x0 / d, r / d);
  v = std::conj(v);  // omega flips under inversion
  const std::complex<double> e_hat = std::complex<double>(x0, -r) * std::pow(d, -(n + 1) / 2.0);
  v *= e_hat;
  return ((n - 1) % 2) ? -v : v;
}

inline std::complex<double> beta_monomial_slice(int n, long l, double x0, double r) {
  if (l >= 0 && l <= n - 2) return 0.0;
  if (l < 0) return p_minus_slice(n, static_cast<int>(-l), x0, r);
  return p_plus_slice(n, static_cast<int>(l + 1 - n), x0, r);
}

// ---------------------------------------------------------------------------
// Kelvin inversion of an arbitrary evaluatable function, full Clifford product
// in the written order E(x) * f(1/x).
template <class S>
Paravector<S> kelvin(const std::function<Paravector<S>(const Paravector<S>&)>& f,
                     const Paravector<S>& x) {
  const auto fx = f(inverse(x));
  // omega_n E(x) = conj(x)/|x|^{n+1}; keep omega_n symbolic for S = Rational
  // by using the (-1)^{n-1} omega_n E form directly in scaled units.
  auto e_hat_mv = [&] {
    const S d = x.norm_sq();
    Paravector<S> e = conjugate(x);
    if constexpr (std::is_same_v<S, Rational>) {
      if ((x.n + 1) % 2 != 0)
        throw domain_error("exact kelvin needs integral |x|^{n+1}: odd n only");
      S dp(1);
      for (int i = 0; i < (x.n + 1) / 2; ++i) dp *= d;
      e.x0 = e.x0 / dp;
      for (auto& c : e.vec) c = c / dp;
    } else {
      const S dp = std::pow(d, (x.n + 1) / 2.0);
      e.x0 = e.x0 / dp;
      for (auto& c : e.vec) c = c / dp;
    }
    return to_multivector(e);
  }();
  auto prod = e_hat_mv * to_multivector(fx);
  auto out = to_paravector(prod);
  if ((x.n - 1) % 2) {
    out.x0 = -out.x0;
    for (auto& c : out.vec) c = -c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// beta on Laurent series: sum of a_l beta(z^l)(x - a), ascending |l|, slice
// evaluation; adaptive truncation with a hard cap.

struct SeriesTruncation {
  int max_terms = 10000;
  double tol = 1e-12;
};

inline std::complex<double> beta_series_slice(const LaurentSeries& f, int n, double x0, double r,
                                              SeriesTruncation t = {}) {
  const double sx0 = x0 - f.center;
  const double rho = std::sqrt(sx0 * sx0 + r * r);
  if (!f.in_annulus(rho))
    throw regime_error("beta_series: point outside the series' convergence region");
  // ascending |l| order, deterministic
  std::vector<int> order;
  for (const auto& [l, c] : f.coeffs)
    if (c != 0.0) order.push_back(l);
  std::sort(order.begin(), order.end(),
            [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
  std::complex<double> acc = 0;
  int small_run = 0, grow_run = 0;
  double prev = std::numeric_limits<double>::infinity();
  int used = 0;
  for (int l : order) {
    if (++used > t.max_terms) break;
    const std::complex<double> term = f.coeffs.at(l) * beta_monomial_slice(n, l, sx0, r);
    acc += term;
    const double mag = std::abs(term);
    if (mag < t.tol * std::max(std::abs(acc), 1e-300)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    if (mag > prev * 1.5 && mag > 1e6 * std::max(std::abs(acc), 1.0))
      if (++grow_run >= 5) throw regime_error("beta_series: diverging term growth");
    if (mag <= prev * 1.5) grow_run = 0;
    prev = mag;
  }
  return acc;
}

inline Paravector<double> beta_series(const LaurentSeries& f, int n, const Paravector<double>& x,
                                      SeriesTruncation t = {}) {
  double r2 = 0;
  for (double c : x.vec) r2 += c * c;
  const double r = std::sqrt(r2);
  const auto ab = beta_series_slice(f, n, x.x0, r, t);
  Paravector<double> out(x.n);
  out.x0 = ab.real();
  if (r > 0)
    for (int j = 0; j < x.n; ++j) out.vec[j] = ab.imag() / r * x.vec[j];
  return out;
}

}  // namespace fueter
