#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiosc {

// Real symmetric tridiagonal matrix: diag has length N, offdiag length N-1.
// Shared spine of the Golub-Welsch quadrature build and the finite-difference
// spectral oracle.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

struct TridiagEigenResult {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[j] pairs with values[j]; empty unless requested
};

// Implicit-shift QL with Wilkinson shift (tql1/tql2 lineage).  Eigenvalues are
// returned ascending; optional orthonormal eigenvectors are accumulated through
// the rotations.  Failure to converge reports the offending index instead of
// returning garbage.
inline TridiagEigenResult tridiag_eigen(const SymmetricTridiagonal& t, bool want_vectors) {
  const int n = static_cast<int>(t.diag.size());
  if (n == 0) throw std::domain_error("tridiag_eigen: empty matrix");
  if (static_cast<int>(t.offdiag.size()) != n - 1)
    throw std::domain_error("tridiag_eigen: offdiag must have length N-1");

  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i < n - 1; ++i) e[i] = t.offdiag[i];

  std::vector<double> z;  // row-major N x N, column j is the j-th eigenvector
  if (want_vectors) {
    z.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k) * n + k] = 1.0;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw std::runtime_error("tridiag_eigen: no convergence at index " + std::to_string(l));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // negligible rotation: recover and restart the sweep
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (want_vectors) {
            for (int k = 0; k < n; ++k) {
              double* zk = &z[static_cast<std::size_t>(k) * n];
              f = zk[i + 1];
              zk[i + 1] = s * zk[i] + c * f;
              zk[i] = c * zk[i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&d](int a, int b) { return d[a] < d[b]; });

  TridiagEigenResult res;
  res.values.resize(n);
  for (int j = 0; j < n; ++j) res.values[j] = d[order[j]];
  if (want_vectors) {
    res.vectors.resize(n);
    for (int j = 0; j < n; ++j) {
      res.vectors[j].resize(n);
      for (int k = 0; k < n; ++k)
        res.vectors[j][k] = z[static_cast<std::size_t>(k) * n + order[j]];
    }
  }
  return res;
}

// Single eigenvector by inverse iteration at a converged eigenvalue estimate.
// Avoids the O(N^2) vector accumulation of the full QL pass on large oracle
// grids.  The returned vector has unit 2-norm and its largest component positive.
inline std::vector<double> tridiag_eigenvector(const SymmetricTridiagonal& t, double lambda) {
  const int n = static_cast<int>(t.diag.size());
  if (n == 0) throw std::domain_error("tridiag_eigenvector: empty matrix");
  if (static_cast<int>(t.offdiag.size()) != n - 1)
    throw std::domain_error("tridiag_eigenvector: offdiag must have length N-1");

  // LU of (T - lambda I) with partial pivoting; banded with two superdiagonals
  std::vector<double> sub(n > 1 ? n - 1 : 0), main(n), sup1(n > 1 ? n - 1 : 0), sup2(n > 2 ? n - 2 : 0, 0.0);
  for (int i = 0; i < n; ++i) main[i] = t.diag[i] - lambda;
  for (int i = 0; i < n - 1; ++i) { sub[i] = t.offdiag[i]; sup1[i] = t.offdiag[i]; }

  double scale = std::abs(lambda);
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(t.diag[i]));
  for (int i = 0; i + 1 < n; ++i) scale = std::max(scale, std::abs(t.offdiag[i]));
  const double tiny = scale * std::numeric_limits<double>::epsilon() * 1e-3 + 1e-300;

  std::vector<double> mult(n > 1 ? n - 1 : 0, 0.0);
  std::vector<char> swapped(n > 1 ? n - 1 : 0, 0);
  for (int i = 0; i < n - 1; ++i) {
    if (std::abs(sub[i]) > std::abs(main[i])) {
      swapped[i] = 1;
      std::swap(main[i], sub[i]);
      double next_main = main[i + 1];
      main[i + 1] = sup1[i];
      sup1[i] = next_main;
      if (i + 1 < n - 1) {
        if (i < n - 2) sup2[i] = sup1[i + 1];
        sup1[i + 1] = 0.0;
      }
    }
    if (main[i] == 0.0) main[i] = tiny;
    const double m = sub[i] / main[i];
    mult[i] = m;
    main[i + 1] -= m * sup1[i];
    if (i < n - 2) sup1[i + 1] -= m * sup2[i];
  }
  if (main[n - 1] == 0.0) main[n - 1] = tiny;

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int sweep = 0; sweep < 4; ++sweep) {
    // forward substitution mirroring the pivoted elimination
    for (int i = 0; i < n - 1; ++i) {
      if (swapped[i]) std::swap(v[i], v[i + 1]);
      v[i + 1] -= mult[i] * v[i];
    }
    // back substitution through the two-superdiagonal upper factor
    for (int i = n - 1; i >= 0; --i) {
      double s = v[i];
      if (i < n - 1) s -= sup1[i] * v[i + 1];
      if (i < n - 2) s -= sup2[i] * v[i + 2];
      v[i] = s / main[i];
    }
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw std::runtime_error("tridiag_eigenvector: inverse iteration broke down");
    for (double& c : v) c /= norm;
  }

  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  if (v[imax] < 0.0)
    for (double& c : v) c = -c;
  return v;
}

}  // namespace semiosc
