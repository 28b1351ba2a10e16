#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace fueter {

// Exact scalar used on all symbolic paths.  Numerators and denominators grow
// as needed; iterated Laplacians of rational functions stay exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Binary doubles are dyadic rationals, so this conversion is exact.
inline Rational rational_from_double(double x) {
  if (x == 0.0) return Rational(0);
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  // 53 doublings make the mantissa integral.
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rational q(mant);
  if (exp >= 0) {
    q *= Rational(BigInt(1) << exp);
  } else {
    q /= Rational(BigInt(1) << (-exp));
  }
  return q;
}

inline BigInt factorial_exact(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline BigInt binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace fueter
