#include <catch2/catch_amalgamated.hpp>

#include "fueter/kernels.hpp"
#include "support/sphere_oracle.hpp"

using namespace fueter;
using Catch::Approx;

TEST_CASE("jacobi weight integral") {
  CHECK(jacobi_weight_integral(0.5) == Approx(std::numbers::pi / 2));
  CHECK(jacobi_weight_integral(0.0) == Approx(2.0));
  CHECK(jacobi_weight_integral((4 - 3) / 2.0) == Approx(std::numbers::pi / 2));
  CHECK_THROWS_AS(jacobi_weight_integral(-1.0), domain_error);
}

TEST_CASE("gauss-gegenbauer rules reproduce the weight integral") {
  for (double alpha : {-0.5, 0.0, 0.5, 1.0})
    for (int npts : {4, 16, 64}) {
      const auto rule = gauss_gegenbauer(npts, alpha);
      double sum = 0;
      for (double w : rule.weights) sum += w;
      CHECK(sum == Approx(jacobi_weight_integral(alpha)).epsilon(1e-13));
      for (double x : rule.nodes) {
        CHECK(x > -1.0);
        CHECK(x < 1.0);
      }
      for (double w : rule.weights) CHECK(w > 0.0);
    }
  // degree-exactness spot check: int (1-x^2)^{1/2} x^2 = pi/8
  const auto rule = gauss_gegenbauer(8, 0.5);
  double s = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
  CHECK(s == Approx(std::numbers::pi / 8).epsilon(1e-13));
}

TEST_CASE("kernel limits on the axis") {
  for (int n : {2, 3, 4})
    for (double x0 : {-2.0, -1.0, 0.5, 1.0, 3.0}) {
      const auto kp = k_plus_slice(n, x0, 1e-4);
      const auto km = k_minus_slice(n, x0, 1e-4);
      CHECK(kp.real() == Approx(k_plus_axis_limit(n, x0)).margin(1e-6));
      CHECK(km.real() == Approx(k_minus_axis_limit(n, x0)).margin(1e-6));
      CHECK(std::abs(kp.imag()) < 1e-3);
    }
}

TEST_CASE("near-sphere evaluation is rejected") {
  CHECK_THROWS_AS(k_plus_slice(3, 0.0, 1.0), regime_error);
  CHECK_THROWS_AS(k_minus_slice(2, 1e-12, 1.0 + 1e-12), regime_error);
  CHECK_THROWS_AS(k_plus_slice(1, 0.5, 0.5), domain_error);
}

TEST_CASE("quadrature output is axial and stable under node doubling") {
  Paravector<double> x(3);
  x.x0 = 0.8;
  x.vec = {0.9, -0.3, 0.45};
  for (bool plus : {true, false}) {
    const auto v64 = plus ? k_plus(3, x, {64}) : k_minus(3, x, {64});
    const auto v128 = plus ? k_plus(3, x, {128}) : k_minus(3, x, {128});
    double diff = 0, size = 0;
    diff += (v64.x0 - v128.x0) * (v64.x0 - v128.x0);
    size += v128.x0 * v128.x0;
    for (int j = 0; j < 3; ++j) {
      diff += (v64.vec[j] - v128.vec[j]) * (v64.vec[j] - v128.vec[j]);
      size += v128.vec[j] * v128.vec[j];
    }
    CHECK(std::sqrt(diff) < 1e-10 * std::sqrt(size));
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        CHECK(std::abs(v64.vec[a] * x.vec[b] - v64.vec[b] * x.vec[a]) <
              1e-12 * std::sqrt(size));
  }
}

TEST_CASE("reduced integrals match the sphere oracle") {
  // gates the derived 1-D forms against the direct surface integral
  for (int n : {2, 3}) {
    Paravector<double> x(n);
    x.x0 = 1.4;
    x.vec[0] = 1.6;
    if (n == 3) x.vec[2] = 0.5;
    const auto plus = testing::mc_sphere_kernel(n, x, false, 1'500'000);
    const auto minus = testing::mc_sphere_kernel(n, x, true, 1'500'000);
    const auto qp = k_plus(n, x);
    const auto qm = k_minus(n, x);
    CHECK(qp.x0 == Approx(plus.value.x0).margin(3e-4));
    CHECK(qm.x0 == Approx(minus.value.x0).margin(3e-4));
    for (int j = 0; j < n; ++j) {
      CHECK(qp.vec[j] == Approx(plus.value.vec[j]).margin(3e-4));
      CHECK(qm.vec[j] == Approx(minus.value.vec[j]).margin(3e-4));
    }
  }
}

TEST_CASE("intrinsic kernel series") {
  SeriesTruncation t;
  for (int n : {2, 3, 4}) {
    const std::complex<double> z(0.4, 0.5);
    CHECK(p_tilde_plus(n, std::conj(z), t) == std::conj(p_tilde_plus(n, z, t)));
    CHECK(p_tilde_minus(n, std::conj(z), t) == std::conj(p_tilde_minus(n, z, t)));
  }
  CHECK_THROWS_AS(p_tilde_plus(3, {1.0005, 0.0}, t), regime_error);

  // outer coefficients recovered by contour integration match the stated form
  for (int n : {2, 3}) {
    const double Cn = DimensionConstants::make(n).C_n;
    const double R = 2.0;
    const int N = 256;
    for (int k = 0; k <= 3; ++k) {
      std::complex<double> acc = 0;
      for (int i = 0; i < N; ++i) {
        const double th = 2 * std::numbers::pi * i / N;
        const std::complex<double> z = std::polar(R, th);
        // coefficient of z^{-(2k+1)}: (1/2 pi i) oint P~+ z^{2k} dz
        acc += p_tilde_plus(n, z, t) * std::pow(z, 2 * k) * z;
      }
      acc /= double(N);
      double ck = 1.0;
      for (int j = 0; j < k; ++j) ck *= (-(n + 1) / 2.0 - j) / (j + 1);
      double want = Cn * ck * factorial_ratio_inv(2 * k, 2 * k + n - 1);
      if ((n - 1) % 2) want = -want;
      CHECK(acc.real() == Approx(want).margin(1e-12));
      CHECK(std::abs(acc.imag()) < 1e-12);
    }
  }
}

TEST_CASE("antiderivative constants: (n-1)-fold derivative recovers the generator") {
  // d^{n-1}/dz^{n-1} P~+ = C_n z (1+z^2)^{-(n+1)/2}, via the Cauchy derivative
  // formula on a small circle around points with |z| = 2
  SeriesTruncation t;
  for (int n : {2, 3, 4}) {
    const double Cn = DimensionConstants::make(n).C_n;
    for (const std::complex<double> z0 : {std::complex<double>(2.0, 0.0),
                                          std::complex<double>(1.5, 1.4),
                                          std::complex<double>(0.0, 2.0)}) {
      const double rho = 0.45;
      const int N = 256;
      std::complex<double> acc = 0;
      for (int i = 0; i < N; ++i) {
        const double th = 2 * std::numbers::pi * i / N;
        const std::complex<double> dz = std::polar(rho, th);
        acc += p_tilde_plus(n, z0 + dz, t) / std::pow(dz, n - 1);
      }
      acc *= factorial(n - 1) / double(N);
      const std::complex<double> want = Cn * z0 * std::pow(1.0 + z0 * z0, -(n + 1) / 2.0);
      CHECK(std::abs(acc - want) < 1e-8 * std::abs(want));
    }
  }
}

TEST_CASE("two computational paths agree") {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> ang(0.15, std::numbers::pi / 2 - 0.15);
  SeriesTruncation t;
  for (int n : {2, 3, 4})
    for (bool inner : {false, true})
      for (int trial = 0; trial < 3; ++trial) {
        const double R = inner ? 0.25 + 0.4 * trial / 3.0 : 1.6 + 0.6 * trial;
        const double th = ang(rng);
        const double x0 = R * std::cos(th), r = R * std::sin(th);
        const auto series = beta_p_kernel_slice(n, true, x0, r, t);
        const auto quad = k_plus_slice(n, x0, r, {64});
        CHECK(std::abs(series - quad) < 1e-6 * std::abs(quad));
        const auto mseries = beta_p_kernel_slice(n, false, x0, r, t);
        const auto mquad = k_minus_slice(n, x0, r, {64});
        CHECK(std::abs(mseries - mquad) < 1e-6 * std::abs(mquad));
      }
}

TEST_CASE("continued kernels extend the outer series") {
  for (int n : {1, 2, 3, 4, 5})
    for (const std::complex<double> w : {std::complex<double>(1.8, 0.3),
                                         std::complex<double>(-1.2, 1.1),
                                         std::complex<double>(0.4, -1.6)}) {
      const auto cont = kernels_continued(n, w);
      SeriesTruncation t{4000, 1e-15};
      const auto sp = p_plus_fn(n, w, t);
      const auto sm = p_minus_fn(n, w, t);
      CHECK(std::abs(cont.plus - sp) < 1e-12 * std::max(1.0, std::abs(sp)));
      CHECK(std::abs(cont.minus - sm) < 1e-12 * std::max(1.0, std::abs(sm)));
    }
  // inside the disk the continuation differs from the inner series by a
  // polynomial of degree <= n-2 (the antiderivative normalization); for n = 3
  // check the difference really is affine in z
  const std::complex<double> w1(0.30, 0.55), w2(0.35, 0.50);
  SeriesTruncation t;
  const auto d1 = kernels_continued(3, w1).plus - p_plus_fn(3, w1, t);
  const auto d2 = kernels_continued(3, w2).plus - p_plus_fn(3, w2, t);
  const auto lin = (d1 - d2) / (w1 - w2);
  const auto d3 = kernels_continued(3, {0.2, 0.6}).plus - p_plus_fn(3, {0.2, 0.6}, t);
  const auto pred = d2 + lin * (std::complex<double>(0.2, 0.6) - w2);
  CHECK(std::abs(d3 - pred) < 1e-9);

  CHECK_THROWS_AS(kernels_continued(3, {0.0, 0.5}), regime_error);
}
