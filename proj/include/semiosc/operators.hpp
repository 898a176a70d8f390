#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "jets.hpp"
#include "model.hpp"
#include "states.hpp"

namespace semiosc {

// The fixed operator set: constant-mass ladder pair, semiconfined
// factorization pair, the three su(1,1) generators with their ladder
// combinations, the two momentum forms, and the Hamiltonian.
enum class GeneratorKind { aPlus, aMinus, APlus, AMinus, K0, K1, K2, KPlus, KMinus, Px, SmallPx, H };

inline bool generator_needs_semiconfined(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::APlus:
    case GeneratorKind::AMinus:
    case GeneratorKind::K0:
    case GeneratorKind::K1:
    case GeneratorKind::K2:
    case GeneratorKind::KPlus:
    case GeneratorKind::KMinus:
    case GeneratorKind::Px:
      return true;
    default:
      return false;
  }
}

// (Op f)(x) from the value and first two derivatives of f.  K2, Px and SmallPx
// are the only complex actions; everything else is real on real functions.
inline std::complex<double> apply_operator_triple(const OscillatorParams& p, ModelKind model,
                                                  GeneratorKind kind, const EvalTriple& t, double x) {
  const double sqrt2 = std::sqrt(2.0);
  const double l0 = p.lambda0;
  const double l2 = l0 * l0;
  if (generator_needs_semiconfined(kind) && model != ModelKind::Semiconfined)
    throw std::domain_error("apply_operator: semiconfined-only generator on constant-mass model");
  if (model == ModelKind::Semiconfined && kind != GeneratorKind::aPlus &&
      kind != GeneratorKind::aMinus && kind != GeneratorKind::SmallPx && x <= -p.a)
    throw std::domain_error("apply_operator: x must exceed -a");

  const double xa = x + p.a;
  switch (kind) {
    case GeneratorKind::aPlus:
      return {(l2 * x * t.value - t.d1) / (sqrt2 * l0), 0.0};
    case GeneratorKind::aMinus:
      return {(l2 * x * t.value + t.d1) / (sqrt2 * l0), 0.0};
    case GeneratorKind::APlus: {
      const double s = std::sqrt(xa / p.a);
      const double sp = 1.0 / (2.0 * p.a * s);  // ds/dx
      return {(l2 * p.a * (s - 1.0 / s) * t.value - sp * t.value - s * t.d1) / (sqrt2 * l0), 0.0};
    }
    case GeneratorKind::AMinus: {
      const double s = std::sqrt(xa / p.a);
      return {(l2 * p.a * (s - 1.0 / s) * t.value + s * t.d1) / (sqrt2 * l0), 0.0};
    }
    case GeneratorKind::K0:
      return {0.5 * l2 * p.a * (xa + p.a * p.a / xa) * t.value -
                  (xa * t.d2 + t.d1) / (2.0 * l2 * p.a),
              0.0};
    case GeneratorKind::K1:
      return {0.5 * l2 * p.a * (xa - p.a * p.a / xa) * t.value +
                  (xa * t.d2 + t.d1) / (2.0 * l2 * p.a),
              0.0};
    case GeneratorKind::K2:
      return {0.0, 0.5 * t.value + xa * t.d1};
    case GeneratorKind::KPlus: {
      const double k1 = 0.5 * l2 * p.a * (xa - p.a * p.a / xa) * t.value +
                        (xa * t.d2 + t.d1) / (2.0 * l2 * p.a);
      return {k1 - 0.5 * t.value - xa * t.d1, 0.0};
    }
    case GeneratorKind::KMinus: {
      const double k1 = 0.5 * l2 * p.a * (xa - p.a * p.a / xa) * t.value +
                        (xa * t.d2 + t.d1) / (2.0 * l2 * p.a);
      return {k1 + 0.5 * t.value + xa * t.d1, 0.0};
    }
    case GeneratorKind::Px:
      // a (m0 / M(x)) p_x / hbar: the hbar of p_x cancels against the prefactor
      return {0.0, -xa * t.d1};
    case GeneratorKind::SmallPx:
      return {0.0, -p.hbar * t.d1};
    case GeneratorKind::H: {
      if (model == ModelKind::ConstantMass)
        return {-p.hbar * p.hbar / (2.0 * p.m0) * t.d2 + potential(p, model, x) * t.value, 0.0};
      // BenDaniel-Duke kinetic part with 1/M linear in x, expanded by the product rule
      return {-p.hbar * p.hbar / (2.0 * p.a * p.m0) * (t.d1 + xa * t.d2) +
                  potential(p, model, x) * t.value,
              0.0};
    }
  }
  throw std::logic_error("apply_operator: unhandled generator kind");
}

template <typename F>
std::complex<double> apply_operator(const OscillatorParams& p, ModelKind model, GeneratorKind kind,
                                    F&& f, double x) {
  return apply_operator_triple(p, model, kind, f(x), x);
}

// --- series-level actions ----------------------------------------------------
//
// Nested applications (commutators, factorization products) run on truncated
// Taylor series so every inner derivative is analytic.  Only the real
// reductions appear here; the i factors of K2/Px are restored by the callers.

// f' as a series
template <int K, int KF>
Jet<K> d_series(const Jet<KF>& f) {
  return derivative_series<K, KF>(f);
}

// x f
template <int K, int KF>
Jet<K> x_mult_series(const Jet<KF>& f, double x0) {
  static_assert(KF >= K);
  return Jet<K>::variable(x0) * truncate<K, KF>(f);
}

// (x + a) f'   (the real reduction of Px up to its -i factor)
template <int K, int KF>
Jet<K> xa_d_series(const OscillatorParams& p, const Jet<KF>& f, double x0) {
  return (Jet<K>::variable(x0) + p.a) * derivative_series<K, KF>(f);
}

// constant-mass ladder pair
template <int K, int KF>
Jet<K> aplus_cm_series(const OscillatorParams& p, const Jet<KF>& f, double x0) {
  static_assert(KF >= K + 1);
  const Jet<K> x = Jet<K>::variable(x0);
  return (p.lambda0 * p.lambda0 * x * truncate<K, KF>(f) - derivative_series<K, KF>(f)) /
         (std::sqrt(2.0) * p.lambda0);
}

template <int K, int KF>
Jet<K> aminus_cm_series(const OscillatorParams& p, const Jet<KF>& f, double x0) {
  static_assert(KF >= K + 1);
  const Jet<K> x = Jet<K>::variable(x0);
  return (p.lambda0 * p.lambda0 * x * truncate<K, KF>(f) + derivative_series<K, KF>(f)) /
         (std::sqrt(2.0) * p.lambda0);
}

// semiconfined factorization pair; s = sqrt((x+a)/a) so that -(s f)' expands to
// -s' f - s f' with s' = 1/(2 a s)
template <int K, int KF>
Jet<K> aplus_sc_series(const OscillatorParams& p, const Jet<KF>& f, double x0) {
  static_assert(KF >= K + 1);
  const Jet<K> x = Jet<K>::variable(x0);
  const Jet<K> s = sqrt((x + p.a) / p.a);
  const Jet<K> sp = 1.0 / (2.0 * p.a * s);
  return (p.lambda0 * p.lambda0 * p.a * (s - 1.0 / s) * truncate<K, KF>(f) -
          sp * truncate<K, KF>(f) - s * derivative_series<K, KF>(f)) /
         (std::sqrt(2.0) * p.lambda0);
}

template <int K, int KF>
Jet<K> aminus_sc_series(const OscillatorParams& p, const Jet<KF>& f, double x0) {
  static_assert(KF >= K + 1);
  const Jet<K> x = Jet<K>::variable(x0);
  const Jet<K> s = sqrt((x + p.a) / p.a);
  return (p.lambda0 * p.lambda0 * p.a * (s - 1.0 / s) * truncate<K, KF>(f) +
          s * derivative_series<K, KF>(f)) /
         (std::sqrt(2.0) * p.lambda0);
}

template <int K, int KF>
Jet<K> h_series(const OscillatorParams& p, ModelKind model, const Jet<KF>& f, double x0) {
  static_assert(KF >= K + 2);
  const Jet<K> x = Jet<K>::variable(x0);
  const Jet<K> fk = truncate<K, KF>(f);
  const Jet<K> f1 = derivative_series<K, KF>(f);
  const Jet<K> f2 = second_derivative_series<K, KF>(f);
  const double h2 = p.hbar * p.hbar;
  if (model == ModelKind::ConstantMass)
    return -h2 / (2.0 * p.m0) * f2 + (0.5 * p.m0 * p.omega * p.omega) * x * x * fk;
  const Jet<K> xa = x + p.a;
  const Jet<K> v = (0.5 * p.omega * p.omega * p.a * p.m0) * x * x / xa;  // M(x) w^2 x^2 / 2
  return -h2 / (2.0 * p.a * p.m0) * (f1 + xa * f2) + v * fk;
}

}  // namespace semiosc
