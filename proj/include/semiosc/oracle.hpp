#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "model.hpp"
#include "tridiagonal.hpp"

namespace semiosc {

// uniform interior grid on (-a, x_right); both walls carry Dirichlet zeros
struct Grid {
  double x_left = 0.0;  // first interior point, -a + h
  double h = 0.0;
  int count = 0;
};

// Truncation chosen from the scaled-coordinate tail: the highest wanted state
// decays like u^{alpha/2} e^{-u/2}, so pushing u past alpha + 20 sqrt(alpha)
// leaves only sub-1e-12 mass outside the box.
inline Grid default_oracle_grid(const OscillatorParams& p, int k, int n_points) {
  if (n_points < 3) throw std::domain_error("default_oracle_grid: too few points");
  const double c = 2.0 * p.lambda0 * p.lambda0 * p.a;
  const double u_max = p.alpha + 20.0 * std::sqrt(p.alpha) + 60.0 + 10.0 * k;
  const double x_right = u_max / c - p.a;
  Grid g;
  g.h = (x_right + p.a) / (n_points + 1);
  g.x_left = -p.a + g.h;
  g.count = n_points;
  return g;
}

// Flux-form second-order stencil for the variable-mass kinetic term:
//   (H psi)_i = -(hbar^2/2h^2) [th_{i+1/2}(psi_{i+1}-psi_i)
//                               - th_{i-1/2}(psi_i-psi_{i-1})] + V(x_i) psi_i
// with th(x) = 1/M(x) = (x+a)/(a m0) evaluated at midpoints; the linear
// profile vanishes exactly at the wall, so no one-sided trickery is needed.
inline SymmetricTridiagonal discretize_hamiltonian(const OscillatorParams& p, const Grid& g) {
  if (!(g.h > 0.0) || g.count < 3) throw std::domain_error("discretize_hamiltonian: invalid grid");
  if (!(g.x_left > -p.a))
    throw std::domain_error("discretize_hamiltonian: grid reaches past the wall");
  const double k2 = p.hbar * p.hbar / (2.0 * g.h * g.h);
  auto theta = [&](double x) { return (x + p.a) / (p.a * p.m0); };

  SymmetricTridiagonal t;
  t.diag.resize(g.count);
  t.offdiag.resize(g.count - 1);
  for (int i = 0; i < g.count; ++i) {
    const double x = g.x_left + i * g.h;
    const double thp = theta(x + 0.5 * g.h);
    const double thm = theta(x - 0.5 * g.h);
    t.diag[i] = k2 * (thp + thm) + potential(p, ModelKind::Semiconfined, x);
    if (i + 1 < g.count) t.offdiag[i] = -k2 * thp;
  }
  return t;
}

inline std::vector<double> oracle_spectrum(const OscillatorParams& p, int k, const Grid& g) {
  if (k < 1 || k > 10)
    throw std::domain_error("oracle_spectrum: eigencount limited to 1..10");
  const SymmetricTridiagonal t = discretize_hamiltonian(p, g);
  const TridiagEigenResult r = tridiag_eigen(t, false);
  return {r.values.begin(), r.values.begin() + k};
}

// Ground eigenvector scaled to continuum normalization (divide by sqrt(h));
// the solver already fixes the overall sign to make the peak positive.
inline std::vector<double> oracle_ground_state(const OscillatorParams& p, const Grid& g,
                                               double eigenvalue) {
  const SymmetricTridiagonal t = discretize_hamiltonian(p, g);
  std::vector<double> v = tridiag_eigenvector(t, eigenvalue);
  const double s = 1.0 / std::sqrt(g.h);
  for (double& c : v) c *= s;
  return v;
}

}  // namespace semiosc
