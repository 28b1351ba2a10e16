#pragma once

#include <complex>

#include "fueter/monomial.hpp"
#include "fueter/quadrature.hpp"

namespace fueter {

struct QuadratureSpec {
  int node_count = 64;
};

inline constexpr double kSphereReject = 1e-9;   // distance to S^{n-1} in the slice
inline constexpr double kSeriesDelta = 1e-3;    // rejection annulus around |z| = 1

// ---------------------------------------------------------------------------
// Sphere-average kernels.  The surface integrals over S^{n-1} reduce to 1-D
// Gauss-Gegenbauer integrals in rho = <omega, x_/r> with weight
// (1 - rho^2)^{(n-3)/2} and denominator Q = x0^2 + 1 + r^2 - 2 r rho:
//   K+ = (w_{n-2}/w_n) int [x0 - (r - rho) omega_x] w(rho) Q^{-(n+1)/2} d rho
//   K- = (w_{n-2}/w_n) int [x0 rho omega_x + (r rho - 1)] w(rho) Q^{-(n+1)/2} d rho

inline void check_kernel_point(int n, double x0, double r) {
  if (n < 2) throw domain_error("sphere kernels need n >= 2");
  const double dist = std::hypot(r - 1.0, x0);
  if (dist < kSphereReject) throw regime_error("kernel evaluation on the unit sphere");
}

inline std::complex<double> k_plus_slice(int n, double x0, double r, QuadratureSpec q = {}) {
  check_kernel_point(n, x0, r);
  const auto& rule = cached_gegenbauer(q.node_count, (n - 3) / 2.0);
  const double c = DimensionConstants::make(n - 2).omega_n / DimensionConstants::make(n).omega_n;
  double A = 0, B = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = rule.nodes[i];
    const double Q = x0 * x0 + 1.0 + r * r - 2.0 * r * rho;
    const double f = rule.weights[i] * std::pow(Q, -(n + 1) / 2.0);
    A += x0 * f;
    B += -(r - rho) * f;
  }
  return {c * A, c * B};
}

inline std::complex<double> k_minus_slice(int n, double x0, double r, QuadratureSpec q = {}) {
  check_kernel_point(n, x0, r);
  const auto& rule = cached_gegenbauer(q.node_count, (n - 3) / 2.0);
  const double c = DimensionConstants::make(n - 2).omega_n / DimensionConstants::make(n).omega_n;
  double A = 0, B = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = rule.nodes[i];
    const double Q = x0 * x0 + 1.0 + r * r - 2.0 * r * rho;
    const double f = rule.weights[i] * std::pow(Q, -(n + 1) / 2.0);
    A += (r * rho - 1.0) * f;
    B += x0 * rho * f;
  }
  return {c * A, c * B};
}

inline Paravector<double> slice_to_paravector(std::complex<double> ab, const Paravector<double>& x) {
  Paravector<double> out(x.n);
  out.x0 = ab.real();
  double r2 = 0;
  for (double c : x.vec) r2 += c * c;
  const double r = std::sqrt(r2);
  if (r > 0)
    for (int j = 0; j < x.n; ++j) out.vec[j] = ab.imag() / r * x.vec[j];
  return out;
}

inline Paravector<double> k_plus(int n, const Paravector<double>& x, QuadratureSpec q = {}) {
  double r2 = 0;
  for (double c : x.vec) r2 += c * c;
  return slice_to_paravector(k_plus_slice(n, x.x0, std::sqrt(r2), q), x);
}

inline Paravector<double> k_minus(int n, const Paravector<double>& x, QuadratureSpec q = {}) {
  double r2 = 0;
  for (double c : x.vec) r2 += c * c;
  return slice_to_paravector(k_minus_slice(n, x.x0, std::sqrt(r2), q), x);
}

// Closed-form limits of K+- on the axis.
inline double k_plus_axis_limit(int n, double x0) {
  return DimensionConstants::make(n).C_n * x0 * std::pow(x0 * x0 + 1.0, -(n + 1) / 2.0);
}
inline double k_minus_axis_limit(int n, double x0) {
  return -DimensionConstants::make(n).C_n * std::pow(x0 * x0 + 1.0, -(n + 1) / 2.0);
}

// ---------------------------------------------------------------------------
// Intrinsic kernels P~+-_n as explicit series (the (n-1)-fold antiderivative
// realized through its printed coefficients), two regimes with a rejection
// annulus around |z| = 1:
//   outer: P~+ = C_n sum c_k (-1)^{n-1} (2k)!/(2k+n-1)! z^{-(2k+1)}
//          P~- = -C_n sum c_k (-1)^{n-1} (2k+1)!/(2k+n)! z^{-(2k+2)}
//   inner: P~+ = C_n sum c_k (2k+1)!/(2k+n)! z^{2k+n}
//          P~- = -C_n sum c_k (2k)!/(2k+n-1)! z^{2k+n-1}
// with c_k = binom(-(n+1)/2, k).  P+- = P~+- / lambda'_n.

struct PTildePair {
  std::complex<double> plus;
  std::complex<double> minus;
};

inline PTildePair p_tilde_pair(int n, std::complex<double> z, SeriesTruncation t = {},
                               double delta = kSeriesDelta) {
  if (n < 1) throw domain_error("p_tilde needs n >= 1");
  const double az = std::abs(z);
  if (az > 1.0 - delta && az < 1.0 + delta)
    throw regime_error("p_tilde: |z| inside the rejection annulus around 1");
  const double Cn = DimensionConstants::make(n).C_n;
  std::complex<double> sp = 0, sm = 0, tp, tm;
  const bool inner = az < 1.0;
  const std::complex<double> z2 = z * z;
  if (inner) {
    tp = std::pow(z, n) * factorial_ratio_inv(1, n);
    tm = -std::pow(z, n - 1) * factorial_ratio_inv(0, n - 1);
  } else {
    const double sgn = (n - 1) % 2 ? -1.0 : 1.0;
    tp = sgn * factorial_ratio_inv(0, n - 1) / z;
    tm = -sgn * factorial_ratio_inv(1, n) / z2;
  }
  double ck = 1.0;
  int small_run = 0;
  for (int k = 0; k < t.max_terms; ++k) {
    sp += ck * tp;
    sm += ck * tm;
    if (std::abs(tp) < t.tol * std::max(std::abs(sp), 1e-300)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    if (inner) {
      tp *= double(2 * k + 2) * double(2 * k + 3) /
            (double(2 * k + n + 1) * double(2 * k + n + 2)) * z2;
      tm *= double(2 * k + 1) * double(2 * k + 2) /
            (double(2 * k + n) * double(2 * k + n + 1)) * z2;
    } else {
      tp *= double(2 * k + 1) * double(2 * k + 2) /
            (double(2 * k + n) * double(2 * k + n + 1)) / z2;
      tm *= double(2 * k + 2) * double(2 * k + 3) /
            (double(2 * k + n + 1) * double(2 * k + n + 2)) / z2;
    }
    ck *= (-(n + 1) / 2.0 - k) / (k + 1);
  }
  return {Cn * sp, Cn * sm};
}

inline std::complex<double> p_tilde_plus(int n, std::complex<double> z, SeriesTruncation t = {}) {
  return p_tilde_pair(n, z, t).plus;
}
inline std::complex<double> p_tilde_minus(int n, std::complex<double> z, SeriesTruncation t = {}) {
  return p_tilde_pair(n, z, t).minus;
}

inline std::complex<double> p_plus_fn(int n, std::complex<double> z, SeriesTruncation t = {}) {
  return p_tilde_plus(n, z, t) / DimensionConstants::make(n).lambda_prime_n;
}
inline std::complex<double> p_minus_fn(int n, std::complex<double> z, SeriesTruncation t = {}) {
  return p_tilde_minus(n, z, t) / DimensionConstants::make(n).lambda_prime_n;
}

// ---------------------------------------------------------------------------
// Termwise beta of the kernel series: the second computational path to K+-.
//   outer: beta(P+) = (C_n/l'_n) sum c_k (-1)^{n-1} (2k)!/(2k+n-1)! P^{(-(2k+1))}
//   inner: beta(P+) = (C_n/l'_n) sum c_k (2k+1)!/(2k+n)! P^{(2k+1)}
// and the minus analogues with P^{(-(2k+2))} / P^{(2k)}.

inline std::complex<double> beta_p_kernel_slice(int n, bool plus, double x0, double r,
                                                SeriesTruncation t = {},
                                                double delta = kSeriesDelta) {
  const double az = std::hypot(x0, r);
  if (az > 1.0 - delta && az < 1.0 + delta)
    throw regime_error("beta_p: |x| inside the rejection annulus around 1");
  const bool inner = az < 1.0;
  const auto c = DimensionConstants::make(n);
  const double pref = c.C_n / c.lambda_prime_n;
  const double sgn = (n - 1) % 2 ? -1.0 : 1.0;
  std::complex<double> acc = 0;
  double ck = 1.0;
  int small_run = 0;
  for (int k = 0; k < t.max_terms; ++k) {
    double coef;
    std::complex<double> mono;
    if (plus) {
      if (inner) {
        coef = ck * factorial_ratio_inv(2 * k + 1, 2 * k + n);
        mono = p_plus_slice(n, 2 * k + 1, x0, r);
      } else {
        coef = ck * sgn * factorial_ratio_inv(2 * k, 2 * k + n - 1);
        mono = p_minus_slice(n, 2 * k + 1, x0, r);
      }
    } else {
      if (inner) {
        coef = -ck * factorial_ratio_inv(2 * k, 2 * k + n - 1);
        mono = p_plus_slice(n, 2 * k, x0, r);
      } else {
        coef = -ck * sgn * factorial_ratio_inv(2 * k + 1, 2 * k + n);
        mono = p_minus_slice(n, 2 * k + 2, x0, r);
      }
    }
    const std::complex<double> term = coef * mono;
    acc += term;
    if (std::abs(term) < t.tol * std::max(std::abs(acc), 1e-300)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    ck *= (-(n + 1) / 2.0 - k) / (k + 1);
  }
  return pref * acc;
}

inline Paravector<double> beta_p_plus(int n, const Paravector<double>& x, SeriesTruncation t = {}) {
  double r2 = 0;
  for (double c : x.vec) r2 += c * c;
  return slice_to_paravector(beta_p_kernel_slice(n, true, x.x0, std::sqrt(r2), t), x);
}

inline Paravector<double> beta_p_minus(int n, const Paravector<double>& x, SeriesTruncation t = {}) {
  double r2 = 0;
  for (double c : x.vec) r2 += c * c;
  return slice_to_paravector(beta_p_kernel_slice(n, false, x.x0, std::sqrt(r2), t), x);
}

// ---------------------------------------------------------------------------
// Branch-continued kernels: the analytic continuation of the outer series to
// the cut plane C \ [-i, i], via the iterated-antiderivative representation
//   P~+_n(w) = -C_n/(n-2)! w^n     int_0^1 (s-1)^{n-2}   phi(s)^{-(n+1)/2} ds
//   P~-_n(w) = +C_n/(n-2)! w^{n-1} int_0^1 (s-1)^{n-2} s phi(s)^{-(n+1)/2} ds
// with phi(s) = s^2 + w^2 and the power taken along the path by phase
// continuity from phi(0) = w^2.  Used by the inverse mapping, where the
// two-series form is unusable across the regime interface.

struct ContinuedKernels {
  std::complex<double> plus;   // P+ = P~+ / lambda'_n
  std::complex<double> minus;  // P- = P~- / lambda'_n
};

inline ContinuedKernels kernels_continued(int n, std::complex<double> w, int base_nodes = 48) {
  if (std::abs(w.real()) < 1e-14 && std::abs(w.imag()) <= 1.0 + 1e-14)
    throw regime_error("continued kernel on the cut segment [-i, i]");
  const auto c = DimensionConstants::make(n);
  if (n == 1) {
    const std::complex<double> den = 1.0 + w * w;
    return {c.C_n * w / den / c.lambda_prime_n, -c.C_n / den / c.lambda_prime_n};
  }
  // segment list: refine dyadically toward the zero of phi nearest [0,1]
  std::vector<double> cuts{0.0, 1.0};
  const double s0 = std::abs(w.imag());
  if (std::abs(w.real()) < 0.5 && s0 <= 1.0) {
    for (double d = 0.5; d > 1e-7; d *= 0.5) {
      if (s0 - d > 0.0) cuts.push_back(s0 - d);
      if (s0 + d < 1.0) cuts.push_back(s0 + d);
    }
    if (s0 > 0.0 && s0 < 1.0) cuts.push_back(s0);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::complex<double> Ip = 0, Im = 0;
  double theta_prev = 2.0 * std::arg(w);
  const bool multi = cuts.size() > 2;
  const auto& rule = cached_gegenbauer(multi ? 20 : base_nodes, 0.0);
  for (size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
    const double a = cuts[seg], b = cuts[seg + 1];
    if (b - a < 1e-300) continue;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double s = 0.5 * (b - a) * rule.nodes[i] + 0.5 * (a + b);
      const double wt = 0.5 * (b - a) * rule.weights[i];
      const std::complex<double> phi = s * s + w * w;
      double th = std::arg(phi);
      th += 2.0 * std::numbers::pi * std::round((theta_prev - th) / (2.0 * std::numbers::pi));
      theta_prev = th;
      const std::complex<double> pw =
          std::exp(-(n + 1) / 2.0 * std::complex<double>(std::log(std::abs(phi)), th));
      const std::complex<double> base = std::pow(s - 1.0, n - 2) * pw * wt;
      Ip += base;
      Im += base * s;
    }
  }
  const double pref = c.C_n / factorial(n - 2);
  const std::complex<double> pt_plus = -pref * std::pow(w, n) * Ip;
  const std::complex<double> pt_minus = pref * std::pow(w, n - 1) * Im;
  return {pt_plus / c.lambda_prime_n, pt_minus / c.lambda_prime_n};
}

}  // namespace fueter
