#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "specfun.hpp"
#include "tridiagonal.hpp"

namespace semiosc {

// Generalized Gauss-Laguerre rule for the weight u^alpha e^{-u} on (0, inf).
struct QuadratureRule {
  double alpha_weight = 0.0;
  std::vector<double> nodes;    // strictly increasing, > 0
  std::vector<double> weights;  // > 0, sum = Gamma(alpha+1)
  double mu0 = 0.0;             // Gamma(alpha_weight + 1)
};

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the Laguerre
// recurrence (diag 2i+alpha+1, offdiag sqrt(i(i+alpha))), weights come from the
// squared first components of the eigenvectors scaled by mu0.
inline QuadratureRule gauss_laguerre(double alpha_weight, int npoints) {
  if (!(alpha_weight > -1.0)) throw std::domain_error("gauss_laguerre: requires alpha > -1");
  if (npoints < 1) throw std::domain_error("gauss_laguerre: requires npoints >= 1");

  SymmetricTridiagonal jacobi;
  jacobi.diag.resize(npoints);
  jacobi.offdiag.resize(npoints - 1);
  for (int i = 0; i < npoints; ++i) jacobi.diag[i] = 2.0 * i + alpha_weight + 1.0;
  for (int i = 1; i < npoints; ++i) jacobi.offdiag[i - 1] = std::sqrt(i * (i + alpha_weight));

  const TridiagEigenResult eig = tridiag_eigen(jacobi, true);

  QuadratureRule rule;
  rule.alpha_weight = alpha_weight;
  rule.mu0 = std::exp(log_gamma(alpha_weight + 1.0));
  rule.nodes = eig.values;
  rule.weights.resize(npoints);
  for (int k = 0; k < npoints; ++k) {
    const double first = eig.vectors[k][0];
    rule.weights[k] = rule.mu0 * first * first;
  }
  return rule;
}

// Process-wide rule cache keyed by exact parameter bits; the identity and
// moment suites reuse the same handful of rules heavily.
inline const QuadratureRule& gauss_laguerre_cached(double alpha_weight, int npoints) {
  static std::map<std::pair<double, int>, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(alpha_weight, npoints);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss_laguerre(alpha_weight, npoints)).first;
  return it->second;
}

}  // namespace semiosc
