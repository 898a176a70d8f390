#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "model.hpp"
#include "operators.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "states.hpp"

namespace semiosc {

// Complex N x N matrix of an operator in the truncated semiconfined basis,
// entry (m, n) = <psi_m | Op | psi_n>.
struct OperatorMatrix {
  int dim = 0;
  std::vector<std::complex<double>> entries;  // row-major
  OscillatorParams basis_params;

  std::complex<double>& at(int m, int n) { return entries[static_cast<std::size_t>(m) * dim + n]; }
  const std::complex<double>& at(int m, int n) const {
    return entries[static_cast<std::size_t>(m) * dim + n];
  }
};

namespace detail {

// Action of a generator on the u-parameterized envelope form,
//   Op f = a0(u) f + a1(u) df/du + a2(u) d2f/du2,
// obtained from the x-space closed forms through du/dx = 2 lambda0^2 a and
// a c = alpha.  The leftover 1/u powers are absorbed by integrating against
// the alpha-1 weight with one explicit factor of u restored, which keeps the
// quadrature exact (the cleared integrand is a polynomial).
struct UCoeffs {
  double a0, a1, a2;
};

inline UCoeffs u_coefficients(GeneratorKind kind, double alpha, double u) {
  const double quart = 0.25 * u;
  const double sing = 0.25 * alpha * alpha / u;
  switch (kind) {
    case GeneratorKind::K0:
      return {quart + sing, -1.0, -u};
    case GeneratorKind::K1:
      return {quart - sing, 1.0, u};
    case GeneratorKind::K2:  // real reduction K2 / i
      return {0.5, u, 0.0};
    case GeneratorKind::KPlus:
      return {quart - sing - 0.5, 1.0 - u, u};
    case GeneratorKind::KMinus:
      return {quart - sing + 0.5, 1.0 + u, u};
    case GeneratorKind::H: {  // H / (hbar omega)
      const double d = u - alpha;
      return {0.25 * d * d / u, -1.0, -u};
    }
    default:
      throw std::domain_error("matrix_elements: generator has no truncated-basis realization");
  }
}

// tables of L_j^(alpha), L_j^(alpha+1), L_j^(alpha+2) at the quadrature nodes
struct LaguerreTables {
  std::vector<std::vector<double>> l0, l1, l2;  // [j][node]
};

inline LaguerreTables laguerre_tables(double alpha, int jmax, const std::vector<double>& nodes) {
  LaguerreTables t;
  const int npts = static_cast<int>(nodes.size());
  auto fill = [&](std::vector<std::vector<double>>& dst, double al) {
    dst.assign(jmax + 1, std::vector<double>(npts));
    for (int k = 0; k < npts; ++k) {
      const double u = nodes[k];
      double lkm1 = 1.0;
      double lk = al + 1.0 - u;
      dst[0][k] = lkm1;
      if (jmax >= 1) dst[1][k] = lk;
      for (int j = 1; j < jmax; ++j) {
        const double lkp1 = ((2.0 * j + al + 1.0 - u) * lk - (j + al) * lkm1) / (j + 1.0);
        lkm1 = lk;
        lk = lkp1;
        dst[j + 1][k] = lk;
      }
    }
  };
  fill(t.l0, alpha);
  fill(t.l1, alpha + 1.0);
  fill(t.l2, alpha + 2.0);
  return t;
}

}  // namespace detail

// Quadrature realization of a generator in the first N semiconfined states.
// Supported kinds: K0, K1, K2, KPlus, KMinus, H.
inline OperatorMatrix matrix_elements(const OscillatorParams& p, GeneratorKind kind, int N) {
  if (N < 1) throw std::domain_error("matrix_elements: dimension must be positive");
  const double alpha = p.alpha;
  const double beta = 0.5 * alpha;
  const double c = 2.0 * p.lambda0 * p.lambda0 * p.a;
  const bool imaginary = (kind == GeneratorKind::K2);
  const double post = (kind == GeneratorKind::H) ? p.hbar * p.omega : 1.0;

  const int npts = N + 8;
  const QuadratureRule& rule = gauss_laguerre_cached(alpha - 1.0, npts);
  const detail::LaguerreTables tab = detail::laguerre_tables(alpha, N - 1, rule.nodes);

  std::vector<double> pref(N);
  for (int j = 0; j < N; ++j) pref[j] = std::exp(semiconfined_log_norm(p, j));

  OperatorMatrix mat;
  mat.dim = N;
  mat.basis_params = p;
  mat.entries.assign(static_cast<std::size_t>(N) * N, {0.0, 0.0});

  std::vector<double> combo(npts);
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < npts; ++k) {
      const double u = rule.nodes[k];
      const double g = beta / u - 0.5;
      const double l0 = tab.l0[n][k];
      const double lp = (n >= 1) ? -tab.l1[n - 1][k] : 0.0;  // dL_n/du
      const double lpp = (n >= 2) ? tab.l2[n - 2][k] : 0.0;  // d2L_n/du2
      const double r1 = g * l0 + lp;
      const double r2 = (g * g - beta / (u * u)) * l0 + 2.0 * g * lp + lpp;
      const detail::UCoeffs uc = detail::u_coefficients(kind, alpha, u);
      combo[k] = u * (uc.a0 * l0 + uc.a1 * r1 + uc.a2 * r2);
    }
    for (int m = 0; m < N; ++m) {
      double acc = 0.0;
      for (int k = 0; k < npts; ++k) acc += rule.weights[k] * tab.l0[m][k] * combo[k];
      const double val = post * pref[m] * pref[n] / c * acc;
      mat.at(m, n) = imaginary ? std::complex<double>(0.0, val) : std::complex<double>(val, 0.0);
    }
  }
  return mat;
}

// <m| x |n> from the scaled-coordinate shift: x = (u - alpha)/c
inline OperatorMatrix position_matrix(const OscillatorParams& p, int N) {
  if (N < 1) throw std::domain_error("position_matrix: dimension must be positive");
  const double c = 2.0 * p.lambda0 * p.lambda0 * p.a;
  OperatorMatrix mat;
  mat.dim = N;
  mat.basis_params = p;
  mat.entries.assign(static_cast<std::size_t>(N) * N, {0.0, 0.0});
  for (int m = 0; m < N; ++m) {
    WaveState sm{p, ModelKind::Semiconfined, m};
    for (int n = 0; n < N; ++n) {
      WaveState sn{p, ModelKind::Semiconfined, n};
      const double u1 = inner_product(sm, sn, +1);
      const double u0 = inner_product(sm, sn, 0);
      mat.at(m, n) = {(u1 - p.alpha * u0) / c, 0.0};
    }
  }
  return mat;
}

// --- small dense complex matrix helpers --------------------------------------

inline OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim != b.dim) throw std::domain_error("matmul: dimension mismatch");
  OperatorMatrix r;
  r.dim = a.dim;
  r.basis_params = a.basis_params;
  r.entries.assign(static_cast<std::size_t>(a.dim) * a.dim, {0.0, 0.0});
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      const std::complex<double> aik = a.at(i, k);
      if (aik == std::complex<double>{}) continue;
      for (int j = 0; j < a.dim; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  const OperatorMatrix ab = matmul(a, b);
  const OperatorMatrix ba = matmul(b, a);
  OperatorMatrix r = ab;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= ba.entries[i];
  return r;
}

inline OperatorMatrix add_scaled(const OperatorMatrix& a, std::complex<double> ca,
                                 const OperatorMatrix& b, std::complex<double> cb) {
  if (a.dim != b.dim) throw std::domain_error("add_scaled: dimension mismatch");
  OperatorMatrix r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i)
    r.entries[i] = ca * a.entries[i] + cb * b.entries[i];
  return r;
}

inline OperatorMatrix scalar_matrix(const OscillatorParams& p, int N, std::complex<double> z) {
  OperatorMatrix r;
  r.dim = N;
  r.basis_params = p;
  r.entries.assign(static_cast<std::size_t>(N) * N, {0.0, 0.0});
  for (int i = 0; i < N; ++i) r.at(i, i) = z;
  return r;
}

inline OperatorMatrix adjoint(const OperatorMatrix& a) {
  OperatorMatrix r = a;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) r.at(i, j) = std::conj(a.at(j, i));
  return r;
}

// max |entry| over the leading keep x keep block (the interior where the
// truncated ladder structure is exact)
inline double max_abs_leading(const OperatorMatrix& a, int keep) {
  double m = 0.0;
  for (int i = 0; i < keep; ++i)
    for (int j = 0; j < keep; ++j) m = std::max(m, std::abs(a.at(i, j)));
  return m;
}

inline double max_abs_diff_leading(const OperatorMatrix& a, const OperatorMatrix& b, int keep) {
  double m = 0.0;
  for (int i = 0; i < keep; ++i)
    for (int j = 0; j < keep; ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
  return m;
}

}  // namespace semiosc
