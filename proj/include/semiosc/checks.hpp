#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrices.hpp"
#include "model.hpp"
#include "operators.hpp"
#include "report.hpp"
#include "states.hpp"

namespace semiosc {

// ladder coefficient between adjacent semiconfined states
inline double ladder_epsilon(const OscillatorParams& p, int n) {
  return -std::sqrt(static_cast<double>(n) * (n + p.alpha));
}

// --- probe grids -------------------------------------------------------------

// 60 u-uniform points clipped to where the states carry at least 1e-8 of their
// peak amplitude; stays clear of the (x+a)^beta underflow region at the wall
// and of the exponential tail.
inline std::vector<double> make_check_grid(const OscillatorParams& p, int n_max, int count = 60) {
  const double c = 2.0 * p.lambda0 * p.lambda0 * p.a;
  const double u_lo_window = 0.05 * p.alpha;
  const double u_cap = p.alpha + 20.0 * std::sqrt(p.alpha) + 60.0 + 10.0 * n_max;

  const int scan = 400;
  std::vector<double> amp(scan, 0.0);
  double amax = 0.0;
  for (int i = 0; i < scan; ++i) {
    const double u = u_lo_window + (u_cap - u_lo_window) * i / (scan - 1);
    const double x = u / c - p.a;
    double a = 0.0;
    for (int n = 0; n <= n_max; ++n)
      a = std::max(a, std::abs(eval_state({p, ModelKind::Semiconfined, n}, x).value));
    amp[i] = a;
    amax = std::max(amax, a);
  }
  int ilo = 0, ihi = scan - 1;
  while (ilo < scan - 1 && amp[ilo] < 1e-8 * amax) ++ilo;
  while (ihi > ilo && amp[ihi] < 1e-8 * amax) --ihi;
  double u_lo = u_lo_window + (u_cap - u_lo_window) * ilo / (scan - 1);
  double u_hi = u_lo_window + (u_cap - u_lo_window) * ihi / (scan - 1);
  if (!(u_hi > u_lo)) u_hi = u_lo + 1.0;

  std::vector<double> grid(count);
  for (int k = 0; k < count; ++k)
    grid[k] = (u_lo + (u_hi - u_lo) * k / (count - 1)) / c - p.a;
  return grid;
}

// symmetric x-grid for the constant-mass model
inline std::vector<double> make_check_grid_constant(const OscillatorParams& p, int n_max,
                                                    int count = 60) {
  const double xm = (std::sqrt(2.0 * n_max + 1.0) + 5.0) / p.lambda0;
  std::vector<double> grid(count);
  for (int k = 0; k < count; ++k) grid[k] = -xm + 2.0 * xm * k / (count - 1);
  return grid;
}

inline double grid_amplitude(const WaveState& st, const std::vector<double>& grid) {
  double amp = 0.0;
  for (double x : grid) amp = std::max(amp, std::abs(eval_state(st, x).value));
  return std::max(amp, 1e-300);
}

// --- su(1,1) closure on truncated matrices -----------------------------------

// Commutator identities of the three generators and their ladder combinations,
// asserted on the leading (N-2) block where truncation cannot leak.
inline CheckReport check_su11(const OscillatorParams& p, int N, double tol = 1e-9) {
  if (N < 4) throw std::domain_error("check_su11: needs N >= 4");
  CheckReport rep = make_report("su11-closure", tol);
  const OperatorMatrix k0 = matrix_elements(p, GeneratorKind::K0, N);
  const OperatorMatrix k1 = matrix_elements(p, GeneratorKind::K1, N);
  const OperatorMatrix k2 = matrix_elements(p, GeneratorKind::K2, N);
  const OperatorMatrix kp = matrix_elements(p, GeneratorKind::KPlus, N);
  const OperatorMatrix km = matrix_elements(p, GeneratorKind::KMinus, N);
  const std::complex<double> i{0.0, 1.0};
  const int keep = N - 2;

  record(rep, "[K0,K1]=iK2", max_abs_leading(add_scaled(commutator(k0, k1), 1.0, k2, -i), keep));
  record(rep, "[K2,K0]=iK1", max_abs_leading(add_scaled(commutator(k2, k0), 1.0, k1, -i), keep));
  record(rep, "[K1,K2]=-iK0", max_abs_leading(add_scaled(commutator(k1, k2), 1.0, k0, i), keep));
  record(rep, "[K-,K+]=2K0", max_abs_leading(add_scaled(commutator(km, kp), 1.0, k0, -2.0), keep));
  record(rep, "[K0,K+]=K+", max_abs_leading(add_scaled(commutator(k0, kp), 1.0, kp, -1.0), keep));
  record(rep, "[K0,K-]=-K-", max_abs_leading(add_scaled(commutator(k0, km), 1.0, km, 1.0), keep));
  return finalize(rep);
}

// Casimir K0^2 - (K+K- + K-K+)/2 must be the scalar k(k-1) = (lambda0 a)^4 - 1/4
inline CheckReport check_casimir(const OscillatorParams& p, int N, double tol = 1e-9) {
  if (N < 3) throw std::domain_error("check_casimir: needs N >= 3");
  CheckReport rep = make_report("casimir", tol);
  const OperatorMatrix k0 = matrix_elements(p, GeneratorKind::K0, N);
  const OperatorMatrix kp = matrix_elements(p, GeneratorKind::KPlus, N);
  const OperatorMatrix km = matrix_elements(p, GeneratorKind::KMinus, N);
  const OperatorMatrix kk = add_scaled(matmul(kp, km), 0.5, matmul(km, kp), 0.5);
  const OperatorMatrix cas = add_scaled(matmul(k0, k0), 1.0, kk, -1.0);
  const double beta = 0.5 * p.alpha;
  const double target = beta * beta - 0.25;
  const int keep = N - 2;

  double diag_err = 0.0, off_err = 0.0;
  for (int m = 0; m < keep; ++m)
    for (int n = 0; n < keep; ++n) {
      const double err = std::abs(cas.at(m, n) - ((m == n) ? std::complex<double>(target) : 0.0));
      (m == n ? diag_err : off_err) = std::max(m == n ? diag_err : off_err, err);
    }
  record(rep, "diagonal=k(k-1)", diag_err);
  record(rep, "offdiagonal=0", off_err);
  return finalize(rep);
}

// Quadrature-built generator matrices against their analytic band structure:
// K0 diagonal n + alpha/2 + 1/2, K-+ single bands of ladder coefficients, and
// the definitional recombinations for K1, K2.
inline CheckReport check_generator_matrices(const OscillatorParams& p, int N, double tol = 1e-9) {
  if (N < 2) throw std::domain_error("check_generator_matrices: needs N >= 2");
  CheckReport rep = make_report("generator-matrices", tol);
  const OperatorMatrix k0 = matrix_elements(p, GeneratorKind::K0, N);
  const OperatorMatrix k1 = matrix_elements(p, GeneratorKind::K1, N);
  const OperatorMatrix k2 = matrix_elements(p, GeneratorKind::K2, N);
  const OperatorMatrix kp = matrix_elements(p, GeneratorKind::KPlus, N);
  const OperatorMatrix km = matrix_elements(p, GeneratorKind::KMinus, N);
  const double beta = 0.5 * p.alpha;

  double e_k0 = 0.0, e_km = 0.0, e_kp = 0.0, e_k1 = 0.0, e_k2 = 0.0;
  const std::complex<double> i{0.0, 1.0};
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      const std::complex<double> t0 = (m == n) ? std::complex<double>(n + beta + 0.5) : 0.0;
      const std::complex<double> tm = (m == n - 1) ? std::complex<double>(ladder_epsilon(p, n)) : 0.0;
      const std::complex<double> tp = (m == n + 1) ? std::complex<double>(ladder_epsilon(p, m)) : 0.0;
      e_k0 = std::max(e_k0, std::abs(k0.at(m, n) - t0));
      e_km = std::max(e_km, std::abs(km.at(m, n) - tm));
      e_kp = std::max(e_kp, std::abs(kp.at(m, n) - tp));
      e_k1 = std::max(e_k1, std::abs(k1.at(m, n) - 0.5 * (kp.at(m, n) + km.at(m, n))));
      e_k2 = std::max(e_k2, std::abs(k2.at(m, n) - (kp.at(m, n) - km.at(m, n)) / (2.0 * i)));
    }
  record(rep, "K0 diagonal", e_k0);
  record(rep, "K- band", e_km);
  record(rep, "K+ band", e_kp);
  record(rep, "K1=(K+ + K-)/2", e_k1);
  record(rep, "K2=(K+ - K-)/2i", e_k2);
  return finalize(rep);
}

// --- pointwise ladder action -------------------------------------------------

inline CheckReport check_ladder(const OscillatorParams& p, int n, const std::vector<double>& grid,
                                double tol = 1e-8) {
  CheckReport rep = make_report("ladder-n" + std::to_string(n), tol);
  const WaveState st{p, ModelKind::Semiconfined, n};
  const double amp = grid_amplitude(st, grid);

  double lower_err = 0.0, raise_err = 0.0;
  const double eps_n = ladder_epsilon(p, n);
  const double eps_np1 = ladder_epsilon(p, n + 1);
  for (double x : grid) {
    const EvalTriple t = eval_state(st, x);
    const double km = apply_operator_triple(p, ModelKind::Semiconfined, GeneratorKind::KMinus, t, x).real();
    const double kp = apply_operator_triple(p, ModelKind::Semiconfined, GeneratorKind::KPlus, t, x).real();
    const double lower_target =
        (n >= 1) ? eps_n * eval_state({p, ModelKind::Semiconfined, n - 1}, x).value : 0.0;
    const double raise_target = eps_np1 * eval_state({p, ModelKind::Semiconfined, n + 1}, x).value;
    lower_err = std::max(lower_err, std::abs(km - lower_target));
    raise_err = std::max(raise_err, std::abs(kp - raise_target));
  }
  record(rep, "K- action", lower_err / amp);
  record(rep, "K+ action", raise_err / amp);
  return finalize(rep);
}

// --- state recovery by repeated raising --------------------------------------

// (K+)^n psi_0 tracked as a coefficient vector over {psi_0..psi_n} through the
// exact ladder band, then scaled by (-1)^n / sqrt(n! (alpha+1)_n).
struct LadderState {
  OscillatorParams params;
  int n = 0;
  std::vector<double> coeff;

  EvalTriple eval(double x) const {
    EvalTriple acc;
    for (int k = 0; k <= n; ++k) {
      if (coeff[k] == 0.0) continue;
      const EvalTriple t = eval_state({params, ModelKind::Semiconfined, k}, x);
      acc.value += coeff[k] * t.value;
      acc.d1 += coeff[k] * t.d1;
      acc.d2 += coeff[k] * t.d2;
    }
    return acc;
  }
};

inline LadderState build_state_by_ladder(const OscillatorParams& p, int n) {
  if (n < 0) throw std::domain_error("build_state_by_ladder: n must be nonnegative");
  LadderState st;
  st.params = p;
  st.n = n;
  std::vector<double> v(n + 1, 0.0);
  v[0] = 1.0;
  for (int step = 0; step < n; ++step) {
    // K+ psi_k = eps_{k+1} psi_{k+1}: the band pushes every coefficient up once
    for (int k = step; k >= 0; --k) v[k + 1] = ladder_epsilon(p, k + 1) * v[k];
    v[0] = 0.0;
  }
  const double scale =
      state_sign(n) * std::exp(-0.5 * (log_factorial(n) + pochhammer_log(p.alpha + 1.0, n)));
  for (double& c : v) c *= scale;
  st.coeff = std::move(v);
  return st;
}

inline CheckReport check_ladder_recovery(const OscillatorParams& p, int n,
                                         const std::vector<double>& grid, double tol = 1e-8) {
  CheckReport rep = make_report("ladder-recovery-n" + std::to_string(n), tol);
  const LadderState built = build_state_by_ladder(p, n);
  const WaveState direct{p, ModelKind::Semiconfined, n};
  const double amp = grid_amplitude(direct, grid);
  double err = 0.0;
  for (double x : grid)
    err = std::max(err, std::abs(built.eval(x).value - eval_state(direct, x).value));
  record(rep, "recovered state", err / amp);
  return finalize(rep);
}

// --- factorization and eigenproblem ------------------------------------------

inline CheckReport check_factorization(const OscillatorParams& p, ModelKind model, int n,
                                       const std::vector<double>& grid, double tol = 1e-7) {
  CheckReport rep = make_report(
      std::string("factorization-") +
          (model == ModelKind::ConstantMass ? "constant" : "semiconfined") + "-n" + std::to_string(n),
      tol);
  const WaveState st{p, model, n};
  const double amp = grid_amplitude(st, grid);
  const double en = energy(p, n);
  const bool sc = (model == ModelKind::Semiconfined);

  double eigen_err = 0.0, factor_err = 0.0, annihilate_err = 0.0;
  for (double x : grid) {
    const EvalTriple t = eval_state(st, x);
    const double hf = apply_operator_triple(p, model, GeneratorKind::H, t, x).real();
    eigen_err = std::max(eigen_err, std::abs(hf - en * t.value));

    const Jet<4> f = state_series<4>(p, model, n, x);
    const Jet<2> lowered = sc ? aminus_sc_series<2, 4>(p, f, x) : aminus_cm_series<2, 4>(p, f, x);
    const double apam =
        (sc ? aplus_sc_series<0, 2>(p, lowered, x) : aplus_cm_series<0, 2>(p, lowered, x)).value();
    factor_err = std::max(factor_err,
                          std::abs(p.hbar * p.omega * apam + p.e0 * t.value - en * t.value));
    if (n == 0) annihilate_err = std::max(annihilate_err, std::abs(lowered.value()));
  }
  record(rep, "H psi = E psi", eigen_err / amp);
  record(rep, "hw A+A- + E0 = E", factor_err / amp);
  if (n == 0) record(rep, "A- psi_0 = 0", annihilate_err / amp);
  return finalize(rep);
}

// --- deformed commutators of the factorization pair --------------------------

// (i) [A-,A+] against its multiplication-operator form, (ii) the general
// mass-profile RHS against the specialized one, (iii) the [H,A+-] relations,
// all applied to the first four states.
inline CheckReport check_pdem_commutators(const OscillatorParams& p, const std::vector<double>& grid,
                                          double tol = 1e-7) {
  CheckReport rep = make_report("pdem-commutators", tol);
  const double sqrt2 = std::sqrt(2.0);
  const double hw = p.hbar * p.omega;

  for (int n = 0; n <= 3; ++n) {
    const WaveState st{p, ModelKind::Semiconfined, n};
    const double amp = grid_amplitude(st, grid);
    double err_i = 0.0, err_ii = 0.0, err_plus = 0.0, err_minus = 0.0;

    for (double x : grid) {
      const EvalTriple t = eval_state(st, x);
      const double apf =
          apply_operator_triple(p, ModelKind::Semiconfined, GeneratorKind::APlus, t, x).real();
      const double amf =
          apply_operator_triple(p, ModelKind::Semiconfined, GeneratorKind::AMinus, t, x).real();
      const double inv_s = std::sqrt(p.a / (x + p.a));  // sqrt(M/m0)

      const Jet<5> f = state_series<5>(p, ModelKind::Semiconfined, n, x);
      const Jet<3> ap3 = aplus_sc_series<3, 5>(p, f, x);
      const Jet<3> am3 = aminus_sc_series<3, 5>(p, f, x);
      const double am_ap = aminus_sc_series<0, 3>(p, ap3, x).value();
      const double ap_am = aplus_sc_series<0, 3>(p, am3, x).value();
      const double ap_ap = aplus_sc_series<0, 3>(p, ap3, x).value();
      const double am_am = aminus_sc_series<0, 3>(p, am3, x).value();

      // (i) [A-,A+] f = f - (1/(2 sqrt2 lambda0 a)) sqrt(M/m0) (A+ + A-) f
      const double comm = am_ap - ap_am;
      const double rhs_i = t.value - inv_s / (2.0 * sqrt2 * p.lambda0 * p.a) * (apf + amf);
      err_i = std::max(err_i, std::abs(comm - rhs_i));

      // (ii) the general commutator RHS, written with the mass-profile
      // log-derivatives M'/M = -1/(x+a), M''/M = 2/(x+a)^2, reduces to the same
      // multiplication operator
      const double xa = x + p.a;
      const double m0_over_m = xa / p.a;
      const double wp = superpotential_derivative(p, ModelKind::Semiconfined, x);
      const double b1 = sqrt2 / p.lambda0 * std::sqrt(m0_over_m) * wp +
                        m0_over_m / (4.0 * p.lambda0 * p.lambda0) *
                            (2.0 / (xa * xa) - 1.5 / (xa * xa));
      err_ii = std::max(err_ii, std::abs(b1 * t.value - rhs_i));

      // (iii) [H,A+] and [H,A-] in their specialized forms
      const double h_ap = h_series<0, 3>(p, ModelKind::Semiconfined, ap3, x).value();
      const double h_am = h_series<0, 3>(p, ModelKind::Semiconfined, am3, x).value();
      const Jet<3> hf3 = h_series<3, 5>(p, ModelKind::Semiconfined, f, x);
      const double ap_h = aplus_sc_series<0, 3>(p, hf3, x).value();
      const double am_h = aminus_sc_series<0, 3>(p, hf3, x).value();
      const double mlog = -1.0 / xa;  // M'/M

      const double lhs_plus = h_ap - ap_h;
      const double rhs_plus = hw * apf - hw / (2.0 * sqrt2 * p.lambda0 * p.a) * inv_s * (ap_am + ap_ap) +
                              hw / (8.0 * p.lambda0 * p.lambda0 * p.a) * mlog * (apf + amf);
      err_plus = std::max(err_plus, std::abs(lhs_plus - rhs_plus));

      const double lhs_minus = h_am - am_h;
      const double rhs_minus =
          -hw * amf + hw / (2.0 * sqrt2 * p.lambda0 * p.a) * inv_s * (ap_am + am_am);
      err_minus = std::max(err_minus, std::abs(lhs_minus - rhs_minus));
    }
    const std::string tag = "-n" + std::to_string(n);
    record(rep, "[A-,A+] specialized" + tag, err_i / amp);
    record(rep, "general RHS matches" + tag, err_ii / amp);
    record(rep, "[H,A+] relation" + tag, err_plus / (hw * amp));
    record(rep, "[H,A-] relation" + tag, err_minus / (hw * amp));
  }
  return finalize(rep);
}

// --- Heisenberg-Lie equations ------------------------------------------------

// Constant mass keeps the textbook pair; the semiconfined model satisfies the
// deformed pair built on P_x.  The i factors are stripped: each relation below
// is the real reduction of the corresponding commutator identity.
inline CheckReport check_heisenberg_lie(const OscillatorParams& p, ModelKind model,
                                        const std::vector<double>& grid, double tol = 1e-7) {
  CheckReport rep = make_report(
      std::string("heisenberg-lie-") +
          (model == ModelKind::ConstantMass ? "constant" : "semiconfined"),
      tol);
  const bool sc = (model == ModelKind::Semiconfined);

  for (int n = 0; n <= 3; ++n) {
    const WaveState st{p, model, n};
    const double amp = grid_amplitude(st, grid);
    double err_p = 0.0, err_x = 0.0;

    for (double x : grid) {
      const EvalTriple t = eval_state(st, x);
      const Jet<5> f = state_series<5>(p, model, n, x);
      const Jet<3> hf3 = h_series<3, 5>(p, model, f, x);
      const double hf = h_series<0, 5>(p, model, f, x).value();

      // momentum-type relation
      if (!sc) {
        // [H, d/dx] f = -m0 w^2 x f
        const double h_df = h_series<0, 3>(p, model, d_series<3, 5>(f), x).value();
        const double d_hf = d_series<0, 3>(hf3).value();
        err_p = std::max(err_p,
                         std::abs((h_df - d_hf) + p.m0 * p.omega * p.omega * x * t.value));
      } else {
        // [H, (x+a) d/dx] f = H f - m0 w^2 a x f
        const double h_d1f = h_series<0, 3>(p, model, xa_d_series<3, 5>(p, f, x), x).value();
        const double d1_hf = xa_d_series<0, 3>(p, hf3, x).value();
        const double rhs = hf - p.m0 * p.omega * p.omega * p.a * x * t.value;
        err_p = std::max(err_p, std::abs((h_d1f - d1_hf) - rhs));
      }

      // position relation: H(x f) - x H f
      const double h_xf = h_series<0, 3>(p, model, x_mult_series<3, 5>(f, x), x).value();
      const double comm_x = h_xf - x * hf;
      const double rhs_x = sc ? -p.hbar * p.hbar / (p.a * p.m0) * ((x + p.a) * t.d1 + 0.5 * t.value)
                              : -p.hbar * p.hbar / p.m0 * t.d1;
      err_x = std::max(err_x, std::abs(comm_x - rhs_x));
    }
    const std::string tag = "-n" + std::to_string(n);
    record(rep, "momentum relation" + tag, err_p / amp);
    record(rep, "position relation" + tag, err_x / amp);
  }
  return finalize(rep);
}

}  // namespace semiosc
