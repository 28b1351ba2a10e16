#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "fueter/errors.hpp"

namespace fueter {

// int_{-1}^{1} (1 - rho^2)^alpha d rho = sqrt(pi) Gamma(alpha+1) / Gamma(alpha+3/2)
inline double jacobi_weight_integral(double alpha) {
  if (alpha <= -1.0) throw domain_error("jacobi weight integral needs alpha > -1");
  return std::sqrt(std::numbers::pi) *
         std::exp(std::lgamma(alpha + 1.0) - std::lgamma(alpha + 1.5));
}

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule on [-1,1] for the symmetric weight (1-x^2)^alpha via
// Golub-Welsch.  The recurrence for the monic polynomials has zero diagonal
// and beta_k = k (k + 2 alpha) / ((2k + 2 alpha)^2 - 1).
inline QuadRule gauss_gegenbauer(int npts, double alpha) {
  if (npts < 1) throw config_error("quadrature rule needs at least one node");
  if (alpha <= -1.0) throw domain_error("gauss_gegenbauer needs alpha > -1");
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(npts, npts);
  for (int k = 1; k < npts; ++k) {
    // k = 1 written separately: the closed form below is 0/0 at alpha = -1/2
    const double bk = (k == 1)
                          ? 1.0 / (2 * alpha + 3)
                          : k * (k + 2 * alpha) / ((2 * k + 2 * alpha) * (2 * k + 2 * alpha) - 1.0);
    T(k, k - 1) = T(k - 1, k) = std::sqrt(bk);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  const double mu0 = jacobi_weight_integral(alpha);
  QuadRule rule;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);
  for (int i = 0; i < npts; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

inline QuadRule gauss_legendre(int npts) { return gauss_gegenbauer(npts, 0.0); }

// Immutable per-(npts, alpha) cache; concurrent readers, single initialization.
inline const QuadRule& cached_gegenbauer(int npts, double alpha) {
  static std::map<std::pair<int, long long>, QuadRule> cache;
  static std::mutex mu;
  const auto key = std::make_pair(npts, static_cast<long long>(alpha * (1LL << 32)));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss_gegenbauer(npts, alpha)).first;
  return it->second;
}

}  // namespace fueter
