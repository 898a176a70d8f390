#pragma once

#include <cmath>
#include <stdexcept>

#include "jets.hpp"
#include "model.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace semiosc {

// A stationary state of either model, identified by its quantum number.  All
// evaluation happens through closed forms; the state itself is just a label.
struct WaveState {
  OscillatorParams params;
  ModelKind model = ModelKind::Semiconfined;
  int n = 0;
};

struct EvalTriple {
  double value = 0.0;
  double d1 = 0.0;  // d/dx
  double d2 = 0.0;  // d^2/dx^2
};

// --- log-space normalization -------------------------------------------------
//
// In the scaled variable u = 2 lambda0^2 a (x + a) the semiconfined state reads
//   psi_n(x) = exp(log_norm) * u^beta e^{-u/2} L_n^{(alpha)}(u),
// with beta = alpha/2.  Assembling the prefactor in log space keeps alpha ~ 10^3
// regimes finite (Gamma overflows double precision near argument 170).
//
// Sign convention: the normalization constant is taken positive for every n.
// This is the phase in which the ladder actions carry their negative
// coefficients -sqrt(n(n+alpha)) literally.  The alternating phase (-1)^n that
// makes the large-a recovery of the Hermite states sign-free is exposed as
// state_sign and applied explicitly where that comparison happens.

inline double semiconfined_log_norm(const OscillatorParams& p, int n) {
  if (n < 0) throw std::domain_error("semiconfined_log_norm: n must be nonnegative");
  return 0.5 * (std::log(p.alpha) + log_factorial(n) - std::log(p.a) - log_gamma(n + p.alpha + 1.0));
}

// recovery phase between the confined family and the Hermite family
inline double state_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// u = 2 lambda0^2 a (x + a); du/dx = 2 lambda0^2 a
inline double scaled_coordinate(const OscillatorParams& p, double x) {
  return 2.0 * p.lambda0 * p.lambda0 * p.a * (x + p.a);
}

inline double constant_mass_log_norm(const OscillatorParams& p, int n) {
  if (n < 0) throw std::domain_error("constant_mass_log_norm: n must be nonnegative");
  const double l2 = p.lambda0 * p.lambda0;
  return -0.5 * n * std::log(2.0) - 0.5 * log_factorial(n) + 0.25 * std::log(l2 / 3.14159265358979323846);
}

// --- pointwise evaluation ----------------------------------------------------

// Value and first two x-derivatives from the closed forms.  The derivative
// assembly uses the logarithmic derivative of the weight factor plus the
// Laguerre/Hermite derivative identities; x <= -a yields the zero triple (the
// semiconfined state is extended by zero through the wall).
inline EvalTriple eval_state(const WaveState& st, double x) {
  const OscillatorParams& p = st.params;
  const int n = st.n;
  if (n < 0) throw std::domain_error("eval_state: n must be nonnegative");

  if (st.model == ModelKind::ConstantMass) {
    const double t = p.lambda0 * x;
    const double lp = constant_mass_log_norm(p, n);
    const double env = std::exp(lp - 0.5 * t * t);
    const double h0 = hermite(n, t);
    const double h1 = (n >= 1) ? 2.0 * n * hermite(n - 1, t) : 0.0;          // dH_n/dt
    const double h2 = (n >= 2) ? 4.0 * n * (n - 1) * hermite(n - 2, t) : 0.0;  // d2H_n/dt2
    EvalTriple r;
    r.value = env * h0;
    r.d1 = p.lambda0 * env * (h1 - t * h0);
    r.d2 = p.lambda0 * p.lambda0 * env * ((t * t - 1.0) * h0 - 2.0 * t * h1 + h2);
    return r;
  }

  if (x <= -p.a) return EvalTriple{};
  const double u = scaled_coordinate(p, x);
  if (u <= 0.0) return EvalTriple{};
  const double beta = 0.5 * p.alpha;
  const double c = 2.0 * p.lambda0 * p.lambda0 * p.a;  // du/dx
  const double env = std::exp(semiconfined_log_norm(p, n) + beta * std::log(u) - 0.5 * u);
  const double l0 = laguerre(n, p.alpha, u);
  const double l1 = laguerre_derivative(n, p.alpha, u);
  const double l2 = laguerre_second_derivative(n, p.alpha, u);
  const double g = beta / u - 0.5;  // d/du of log(u^beta e^{-u/2})
  EvalTriple r;
  r.value = env * l0;
  r.d1 = env * c * (g * l0 + l1);
  r.d2 = env * c * c * ((g * g - beta / (u * u)) * l0 + 2.0 * g * l1 + l2);
  return r;
}

// Full Taylor series of the state at x0 via Jet arithmetic: an independent
// derivative path (chain rule through the closed form) used by the nested
// operator checks, cross-validated against eval_state in the tests.
template <int K>
Jet<K> state_series(const OscillatorParams& p, ModelKind model, int n, double x0) {
  if (n < 0) throw std::domain_error("state_series: n must be nonnegative");
  const Jet<K> x = Jet<K>::variable(x0);
  if (model == ModelKind::ConstantMass) {
    const Jet<K> t = p.lambda0 * x;
    return exp(Jet<K>(constant_mass_log_norm(p, n)) - 0.5 * t * t) * hermite_eval(n, t);
  }
  if (x0 <= -p.a) throw std::domain_error("state_series: semiconfined series requires x > -a");
  const double beta = 0.5 * p.alpha;
  const Jet<K> u = (2.0 * p.lambda0 * p.lambda0 * p.a) * (x + p.a);
  const Jet<K> env = exp(Jet<K>(semiconfined_log_norm(p, n)) + beta * log(u) - 0.5 * u);
  return env * laguerre_eval(n, p.alpha, u);
}

// --- reduced u-space derivatives --------------------------------------------
//
// With the envelope stripped, d/du acting on u^beta e^{-u/2} L(u) leaves
//   r0 = L,   r1 = (beta/u - 1/2) L + L',
//   r2 = ((beta/u - 1/2)^2 - beta/u^2) L + 2 (beta/u - 1/2) L' + L''.
// Matrix elements and momentum moments integrate these against quadrature
// rules whose weight exponent absorbs the leftover powers of u.
struct ReducedDerivatives {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

inline ReducedDerivatives reduced_derivatives(const OscillatorParams& p, int n, double u) {
  const double beta = 0.5 * p.alpha;
  const double l0 = laguerre(n, p.alpha, u);
  const double l1 = laguerre_derivative(n, p.alpha, u);
  const double l2 = laguerre_second_derivative(n, p.alpha, u);
  const double g = beta / u - 0.5;
  ReducedDerivatives r;
  r.r0 = l0;
  r.r1 = g * l0 + l1;
  r.r2 = (g * g - beta / (u * u)) * l0 + 2.0 * g * l1 + l2;
  return r;
}

// --- inner products ----------------------------------------------------------

// integral over (-a, inf) of f * g * u^shift dx, u the scaled coordinate.
// The u-substitution turns the integrand into (polynomial) * u^{alpha+shift}
// e^{-u}, so a rule with matched weight exponent integrates it exactly.
inline double inner_product(const WaveState& f, const WaveState& g, int shift) {
  if (f.model != ModelKind::Semiconfined || g.model != ModelKind::Semiconfined)
    throw std::domain_error("inner_product: defined for semiconfined states");
  const OscillatorParams& p = f.params;
  if (p.alpha != g.params.alpha || p.a != g.params.a || p.lambda0 != g.params.lambda0)
    throw std::domain_error("inner_product: states must share parameters");
  if (shift < -2 || shift > 2)
    throw std::domain_error("inner_product: weight power shift limited to [-2, 2]");
  const double aw = p.alpha + shift;
  if (!(aw > -1.0))
    throw std::domain_error("inner_product: divergent integral, needs alpha + shift > -1");

  const int m = f.n, n = g.n;
  const int npts = m + n + 8;
  const QuadratureRule& rule = gauss_laguerre_cached(aw, npts);
  double acc = 0.0;
  for (int k = 0; k < npts; ++k) {
    const double u = rule.nodes[k];
    acc += rule.weights[k] * laguerre(m, p.alpha, u) * laguerre(n, p.alpha, u);
  }
  const double c = 2.0 * p.lambda0 * p.lambda0 * p.a;
  const double pref = std::exp(semiconfined_log_norm(p, m) + semiconfined_log_norm(p, n));
  return pref / c * acc;
}

}  // namespace semiosc
