#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "fueter/errors.hpp"
#include "fueter/rational.hpp"

namespace fueter {

// omega_n  = 2 pi^{(n+1)/2} / Gamma((n+1)/2)        (area of S^n in R^{n+1})
// lambda_n = 2^{n-1} Gamma((n+1)/2)^2
// lambda'_n = (-1)^{n-1} lambda_n / (n-1)!
// C_n      = Gamma((n+1)/2) / (sqrt(pi) Gamma(n/2))
struct DimensionConstants {
  int n;
  double omega_n;
  double lambda_n;
  double lambda_prime_n;
  double C_n;

  static DimensionConstants make(int n) {
    if (n < 1) throw dimension_error("dimension constants need n >= 1");
    const double g = std::tgamma((n + 1) / 2.0);
    DimensionConstants c;
    c.n = n;
    c.omega_n = 2.0 * std::pow(std::numbers::pi, (n + 1) / 2.0) / g;
    c.lambda_n = std::ldexp(g * g, n - 1);
    c.lambda_prime_n = ((n - 1) % 2 ? -1.0 : 1.0) * c.lambda_n / std::tgamma(double(n));
    c.C_n = (n == 1) ? 1.0 / std::numbers::pi
                     : g / (std::sqrt(std::numbers::pi) * std::tgamma(n / 2.0));
    return c;
  }
};

// For odd n, Gamma((n+1)/2) = ((n-1)/2)! and lambda_n is an exact integer.
inline Rational lambda_exact(int n) {
  if (n < 1 || n % 2 == 0) throw domain_error("lambda_exact requires odd n");
  const BigInt g = factorial_exact((n - 1) / 2);
  return Rational(g * g * (BigInt(1) << (n - 1)));
}

inline Rational lambda_prime_exact(int n) {
  Rational lp = lambda_exact(n) / Rational(factorial_exact(n - 1));
  return ((n - 1) % 2) ? -lp : lp;
}

// gamma_{k,alpha} = i^k pi^{(n+1)/2-alpha} Gamma(k/2+alpha/2) / Gamma(k/2+(n+1)/2-alpha/2).
// Only k in {0,1} feeds the constants above; exposed for completeness.
inline std::complex<double> gamma_k_alpha(int k, double alpha, int n) {
  if (alpha <= 0.0 || alpha >= n + 1) throw domain_error("gamma_k_alpha: alpha out of (0, n+1)");
  const double mag = std::pow(std::numbers::pi, (n + 1) / 2.0 - alpha) *
                     std::tgamma(k / 2.0 + alpha / 2.0) /
                     std::tgamma(k / 2.0 + (n + 1) / 2.0 - alpha / 2.0);
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ipow[((k % 4) + 4) % 4] * mag;
}

inline double factorial(int k) { return std::tgamma(double(k) + 1.0); }

// a! / b! for b >= a, computed as a running product (no overflow for b - a small).
inline double factorial_ratio_inv(int a, int b) {
  double p = 1.0;
  for (int j = a + 1; j <= b; ++j) p *= j;
  return 1.0 / p;
}

}  // namespace fueter
