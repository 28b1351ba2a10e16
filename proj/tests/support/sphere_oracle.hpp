#pragma once

// Test-only oracle: brute-force surface integrals of E(x - omega) (dS) and
// E(x - omega) omega (dS) over S^{n-1} with a fixed-seed Monte-Carlo sampler.
// Never used on any production path.

#include <random>

#include "fueter/constants.hpp"
#include "fueter/multivector.hpp"

namespace fueter::testing {

struct SphereKernelSample {
  Paravector<double> value;     // full vector form, to expose non-axial noise
  double cross_norm;            // magnitude of the component orthogonal to x_
};

inline SphereKernelSample mc_sphere_kernel(int n, const Paravector<double>& x, bool with_omega,
                                           std::size_t samples = 4'000'000,
                                           std::uint32_t seed = 20240817) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double wn = DimensionConstants::make(n).omega_n;
  const double area = DimensionConstants::make(n - 1).omega_n;

  std::vector<double> acc(static_cast<size_t>(n) + 1, 0.0);
  std::vector<double> w(n), diff(n);
  for (std::size_t s = 0; s < samples; ++s) {
    double norm2 = 0;
    for (int j = 0; j < n; ++j) {
      w[j] = gauss(rng);
      norm2 += w[j] * w[j];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double d2 = x.x0 * x.x0;
    for (int j = 0; j < n; ++j) {
      w[j] *= inv;
      diff[j] = x.vec[j] - w[j];
      d2 += diff[j] * diff[j];
    }
    const double dn = std::pow(d2, -(n + 1) / 2.0);
    if (!with_omega) {
      // E(x - w) = (x0 - (x_ - w)) / (wn d^{n+1})
      acc[0] += x.x0 * dn;
      for (int j = 0; j < n; ++j) acc[j + 1] -= diff[j] * dn;
    } else {
      // (x0 - v) w with v = x_ - w: scalar <v, w>, vector x0 w, bivector drops
      double dot = 0;
      for (int j = 0; j < n; ++j) dot += diff[j] * w[j];
      acc[0] += dot * dn;
      for (int j = 0; j < n; ++j) acc[j + 1] += x.x0 * w[j] * dn;
    }
  }
  const double scale = area / (wn * double(samples));
  Paravector<double> out(n);
  out.x0 = acc[0] * scale;
  for (int j = 0; j < n; ++j) out.vec[j] = acc[j + 1] * scale;

  // split the vector part into the x_ direction and the rest
  double r2 = 0, proj = 0;
  for (int j = 0; j < n; ++j) r2 += x.vec[j] * x.vec[j];
  double cross = 0;
  if (r2 > 0) {
    for (int j = 0; j < n; ++j) proj += out.vec[j] * x.vec[j];
    proj /= r2;
    for (int j = 0; j < n; ++j) {
      const double c = out.vec[j] - proj * x.vec[j];
      cross += c * c;
    }
  }
  return {out, std::sqrt(cross)};
}

}  // namespace fueter::testing
