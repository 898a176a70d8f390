#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "specfun.hpp"
#include "states.hpp"

namespace semiosc {

struct MomentSet {
  int n = 0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double product = 0.0;  // var_x * var_p
};

enum class MomentMethod { ClosedForm, Quadrature };

inline MomentSet moments_constant(const OscillatorParams& p, int n) {
  if (n < 0) throw std::domain_error("moments_constant: n must be nonnegative");
  MomentSet m;
  m.n = n;
  const double l2 = p.lambda0 * p.lambda0;
  m.mean_x = 0.0;
  m.mean_p = 0.0;
  m.var_x = (n + 0.5) / l2;
  m.var_p = p.hbar * p.hbar * l2 * (n + 0.5);
  m.product = m.var_x * m.var_p;
  return m;
}

namespace detail {

// sum_{k=0}^{n} (k+1)^2 Gamma(n + alpha - k - 1) / (n-k)!  via logsumexp;
// every term is positive, so the exponent shift is lossless
inline double momentum_sum_log(double alpha, int n) {
  std::vector<double> lt(n + 1);
  double top = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n; ++k) {
    lt[k] = 2.0 * std::log(k + 1.0) + log_gamma(n + alpha - k - 1.0) - log_factorial(n - k);
    top = std::max(top, lt[k]);
  }
  double s = 0.0;
  for (int k = 0; k <= n; ++k) s += std::exp(lt[k] - top);
  return top + std::log(s);
}

}  // namespace detail

// Closed-form moments of the semiconfined states.  The momentum variance only
// converges for alpha > 1: the squared-derivative integrand picks up a
// u^{alpha-2} factor at the wall.
inline MomentSet moments_semiconfined(const OscillatorParams& p, int n,
                                      MomentMethod method = MomentMethod::ClosedForm) {
  if (n < 0) throw std::domain_error("moments_semiconfined: n must be nonnegative");
  if (!(p.alpha > 1.0))
    throw std::domain_error("moments_semiconfined: momentum variance diverges unless alpha > 1");
  MomentSet m;
  m.n = n;
  const double l2 = p.lambda0 * p.lambda0;
  const double c = 2.0 * l2 * p.a;
  const double h2 = p.hbar * p.hbar;

  if (method == MomentMethod::ClosedForm) {
    m.mean_x = (n + 0.5) / (l2 * p.a);
    m.mean_p = 0.0;
    m.var_x = (n + 0.5) / l2 + (2.0 * n * (n + 1.0) + 1.0) / (4.0 * l2 * l2 * p.a * p.a);
    const double ratio_log = 2.0 * std::log(p.alpha) + log_factorial(n) -
                             log_gamma(n + p.alpha + 1.0) + detail::momentum_sum_log(p.alpha, n);
    m.var_p = 0.5 * h2 * l2 * p.alpha * (std::exp(ratio_log) - 1.0);
  } else {
    const WaveState st{p, ModelKind::Semiconfined, n};
    const double u1 = inner_product(st, st, 1);
    const double u2 = inner_product(st, st, 2);
    const double norm = inner_product(st, st, 0);
    m.mean_x = u1 / c - p.a * norm;
    m.var_x = (u2 - 2.0 * p.alpha * u1 + p.alpha * p.alpha * norm) / (c * c) - m.mean_x * m.mean_x;

    // derivative integrals on the matched lower-exponent rules; one (resp.
    // two) powers of u are restored into the integrand so it stays polynomial
    const double beta = 0.5 * p.alpha;
    const double n2 = std::exp(2.0 * semiconfined_log_norm(p, n));
    {
      const int npts = 2 * n + 8;
      const QuadratureRule& rule = gauss_laguerre_cached(p.alpha - 1.0, npts);
      double acc = 0.0;
      for (int k = 0; k < npts; ++k) {
        const double u = rule.nodes[k];
        const double l0 = laguerre(n, p.alpha, u);
        const double l1 = laguerre_derivative(n, p.alpha, u);
        acc += rule.weights[k] * ((beta - 0.5 * u) * l0 * l0 + u * l0 * l1);
      }
      m.mean_p = p.hbar * n2 * acc;  // exactly zero in theory; kept as a residual
    }
    {
      const int npts = 2 * n + 8;
      const QuadratureRule& rule = gauss_laguerre_cached(p.alpha - 2.0, npts);
      double acc = 0.0;
      for (int k = 0; k < npts; ++k) {
        const double u = rule.nodes[k];
        const double l0 = laguerre(n, p.alpha, u);
        const double l1 = laguerre_derivative(n, p.alpha, u);
        const double l2d = laguerre_second_derivative(n, p.alpha, u);
        const double poly = (beta * beta - beta - beta * u + 0.25 * u * u) * l0 +
                            (2.0 * beta * u - u * u) * l1 + u * u * l2d;
        acc += rule.weights[k] * l0 * poly;
      }
      m.var_p = -h2 * n2 * c * acc - m.mean_p * m.mean_p;
    }
  }
  m.product = m.var_x * m.var_p;
  return m;
}

struct GroundStateBound {
  double product = 0.0;        // var_x * var_p of the ground state
  bool exceeds_quarter = false;
  bool physical = false;       // alpha > 1, where the momentum variance exists
  double threshold_a = 0.0;    // confinement radius at which alpha crosses 1
};

// (hbar^2/4) (1 + 2/(alpha - 1)): strictly above the Heisenberg floor for every
// finite confinement radius, blowing up as a approaches the threshold radius.
inline GroundStateBound ground_state_bound(const OscillatorParams& p) {
  if (p.alpha == 1.0)
    throw std::domain_error("ground_state_bound: product is singular at alpha = 1");
  GroundStateBound b;
  const double q = 0.25 * p.hbar * p.hbar;
  b.product = q * (1.0 + 2.0 / (p.alpha - 1.0));
  b.exceeds_quarter = b.product > q;
  b.physical = p.alpha > 1.0;
  b.threshold_a = std::sqrt(p.hbar / (2.0 * p.m0 * p.omega));
  return b;
}

// --- weighted Laguerre integral identities -----------------------------------

namespace detail {

// sum_{k=0}^{n} Gamma(k + alpha) / k!
inline double gamma_over_factorial_sum(double alpha, int n) {
  double top = -std::numeric_limits<double>::infinity();
  std::vector<double> lt(n + 1);
  for (int k = 0; k <= n; ++k) {
    lt[k] = log_gamma(k + alpha) - log_factorial(k);
    top = std::max(top, lt[k]);
  }
  double s = 0.0;
  for (int k = 0; k <= n; ++k) s += std::exp(lt[k] - top);
  return std::exp(top) * s;
}

inline double identity_quad(double weight_alpha, int npts, int n, double alpha, int df, int dg) {
  const QuadratureRule& rule = gauss_laguerre_cached(weight_alpha, npts);
  auto eval = [&](int d, double u) {
    if (d == 0) return laguerre(n, alpha, u);
    if (d == 1) return laguerre_derivative(n, alpha, u);
    return laguerre_second_derivative(n, alpha, u);
  };
  double acc = 0.0;
  for (int k = 0; k < npts; ++k)
    acc += rule.weights[k] * eval(df, rule.nodes[k]) * eval(dg, rule.nodes[k]);
  return acc;
}

}  // namespace detail

// Eight closed-form integrals over the Laguerre weight family, each quadrature
// side on the rule whose exponent matches the integrand exactly.  Relative
// errors are recorded against the closed form (or the norm scale when the
// closed form is zero).
inline CheckReport verify_identities(int n_max, const std::vector<double>& alphas,
                                     double tol = 1e-9) {
  CheckReport rep = make_report("laguerre-identities", tol);
  for (double alpha : alphas) {
    if (!(alpha > 0.0)) throw std::domain_error("verify_identities: needs alpha > 0");
    for (int n = 0; n <= n_max; ++n) {
      const int npts = n + 6;
      const double norm_scale = std::exp(log_gamma(n + alpha + 1.0) - log_factorial(n));
      const std::string tag = " a" + std::to_string(alpha) + " n" + std::to_string(n);

      {  // u^{alpha-1} L^2
        const double lhs = detail::identity_quad(alpha - 1.0, npts, n, alpha, 0, 0);
        const double rhs = detail::gamma_over_factorial_sum(alpha, n);
        record(rep, "wall-norm" + tag, std::abs(lhs - rhs) / std::abs(rhs));
      }
      if (alpha > 1.0) {  // u^{alpha-2} L^2
        const double lhs = detail::identity_quad(alpha - 2.0, npts, n, alpha, 0, 0);
        const double rhs = std::exp(detail::momentum_sum_log(alpha, n));
        record(rep, "wall-second" + tag, std::abs(lhs - rhs) / std::abs(rhs));
      }
      if (alpha > 1.0) {  // u^{alpha-1} L L'
        const double lhs = detail::identity_quad(alpha - 1.0, npts, n, alpha, 0, 1);
        const double rhs = 0.5 * (detail::gamma_over_factorial_sum(alpha, n) -
                                  (alpha - 1.0) * std::exp(detail::momentum_sum_log(alpha, n)));
        const double scale = std::max(std::abs(rhs), norm_scale);
        record(rep, "wall-cross" + tag, std::abs(lhs - rhs) / scale);
      }
      {  // u^{alpha} L L' = 0
        const double lhs = detail::identity_quad(alpha, npts, n, alpha, 0, 1);
        record(rep, "diag-cross" + tag, std::abs(lhs) / norm_scale);
      }
      {  // u^{alpha} L L'' = 0
        const double lhs = detail::identity_quad(alpha, npts, n, alpha, 0, 2);
        record(rep, "diag-second" + tag, std::abs(lhs) / norm_scale);
      }
      {  // u^{alpha+1} L^2
        const double lhs = detail::identity_quad(alpha + 1.0, npts, n, alpha, 0, 0);
        const double rhs = (2.0 * n + alpha + 1.0) * norm_scale;
        record(rep, "first-moment" + tag, std::abs(lhs - rhs) / std::abs(rhs));
      }
      {  // u^{alpha+2} L^2
        const double lhs = detail::identity_quad(alpha + 2.0, npts, n, alpha, 0, 0);
        const double rhs = (6.0 * n * (n + alpha + 1.0) + (alpha + 1.0) * (alpha + 2.0)) * norm_scale;
        record(rep, "second-moment" + tag, std::abs(lhs - rhs) / std::abs(rhs));
      }
      {  // partial Gamma sum telescopes
        const double lhs = detail::gamma_over_factorial_sum(alpha, n);
        const double rhs = std::exp(log_gamma(n + alpha + 1.0) - log_factorial(n)) / alpha;
        record(rep, "gamma-sum" + tag, std::abs(lhs - rhs) / std::abs(rhs));
      }
    }
  }
  return finalize(rep);
}

}  // namespace semiosc
