#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace semiosc {

// Physical parameters of the oscillator pair.  lambda0, alpha and e0 are
// derived once at construction; nothing downstream recomputes them.
struct OscillatorParams {
  double m0 = 1.0;      // mass scale
  double omega = 1.0;   // angular frequency
  double hbar = 1.0;    // action quantum
  double a = 1.0;       // confinement length (wall at x = -a)
  double lambda0 = 1.0; // sqrt(m0 * omega / hbar), inverse oscillator length
  double alpha = 2.0;   // 2 * lambda0^2 * a^2, dimensionless confinement
  double e0 = 0.5;      // hbar * omega / 2, ground energy
};

// ConstantMass lives on the whole real line; Semiconfined on (-a, +inf) with a
// hard wall at x = -a realized by the diverging mass.
enum class ModelKind { ConstantMass, Semiconfined };

inline OscillatorParams make_params(double m0, double omega, double hbar, double a) {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(m0) || !ok(omega) || !ok(hbar) || !ok(a))
    throw std::domain_error("make_params: all parameters must be finite and > 0");
  OscillatorParams p;
  p.m0 = m0;
  p.omega = omega;
  p.hbar = hbar;
  p.a = a;
  p.lambda0 = std::sqrt(m0 * omega / hbar);
  p.alpha = 2.0 * p.lambda0 * p.lambda0 * a * a;
  p.e0 = 0.5 * hbar * omega;
  return p;
}

// M(x) = a m0 / (x + a) on the open domain; +infinity beyond the wall so that
// 1/M(x) is a clean zero there (exactly what the flux-form discretization
// needs at the left edge).
inline double mass(const OscillatorParams& p, double x) {
  if (x <= -p.a) return std::numeric_limits<double>::infinity();
  return p.a * p.m0 / (x + p.a);
}

// dM/dx = -a m0 / (x+a)^2, closed form (never a finite difference)
inline double mass_derivative(const OscillatorParams& p, double x) {
  if (x <= -p.a) throw std::domain_error("mass_derivative: x must exceed -a");
  const double xa = x + p.a;
  return -p.a * p.m0 / (xa * xa);
}

inline double potential(const OscillatorParams& p, ModelKind model, double x) {
  if (model == ModelKind::ConstantMass) return 0.5 * p.m0 * p.omega * p.omega * x * x;
  if (x <= -p.a) throw std::domain_error("potential: semiconfined model requires x > -a");
  return 0.5 * mass(p, x) * p.omega * p.omega * x * x;
}

// W(x): lambda0 x / sqrt2 for constant mass; the mass-deformed closed form for
// the semiconfined model.
inline double superpotential(const OscillatorParams& p, ModelKind model, double x) {
  if (model == ModelKind::ConstantMass) return p.lambda0 * x / std::sqrt(2.0);
  if (x <= -p.a) throw std::domain_error("superpotential: semiconfined model requires x > -a");
  const double s = std::sqrt((x + p.a) / p.a);  // sqrt(m0 / M(x))
  return p.lambda0 * p.a / std::sqrt(2.0) * (s - 1.0 / s);
}

// dW/dx in closed form; the consistency checks must not difference W numerically
inline double superpotential_derivative(const OscillatorParams& p, ModelKind model, double x) {
  if (model == ModelKind::ConstantMass) return p.lambda0 / std::sqrt(2.0);
  if (x <= -p.a) throw std::domain_error("superpotential_derivative: x must exceed -a");
  const double xa = x + p.a;
  return p.lambda0 * std::sqrt(p.a) / std::sqrt(2.0) * (x + 2.0 * p.a) / (2.0 * xa * std::sqrt(xa));
}

// E_n = hbar omega (n + 1/2); the spectra of the two models coincide
inline double energy(const OscillatorParams& p, int n) {
  if (n < 0) throw std::domain_error("energy: n must be nonnegative");
  return p.hbar * p.omega * (n + 0.5);
}

}  // namespace semiosc
