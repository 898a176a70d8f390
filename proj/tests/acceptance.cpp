// Acceptance gate: eleven numbered criteria, one printed PASS/FAIL line each.
// Every criterion is an analytic identity of the confined-oscillator family,
// so the tolerances are fixed constants, not fitted slack.  Run the binary
// with a tag ([c1]..[c11]) to execute a single criterion.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "semiosc/semiosc.hpp"

using namespace semiosc;

namespace {

const OscillatorParams unit = make_params(1.0, 1.0, 1.0, 1.0);

bool announce(int idx, bool ok, const std::string& text) {
  std::printf("criterion %2d: %s  %s\n", idx, ok ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
  return ok;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

}  // namespace

TEST_CASE("orthonormality of the confined family", "[c1]") {
  double worst = 0.0;
  for (double a : {1.0, 2.0, 5.0}) {  // alpha = 2, 8, 50
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    for (int m = 0; m <= 20; ++m) {
      for (int n = m; n <= 20; ++n) {
        const double ip =
            inner_product({p, ModelKind::Semiconfined, m}, {p, ModelKind::Semiconfined, n}, 0);
        worst = std::max(worst, std::abs(ip - (m == n ? 1.0 : 0.0)));
      }
    }
  }
  const bool ok = worst < 1e-10;
  announce(1, ok,
           "orthonormality, m,n <= 20, alpha in {2,8,50}: worst " + fmt(worst) + " (tol 1e-10)");
  REQUIRE(ok);
}

TEST_CASE("generator matrices against the analytic bands", "[c2]") {
  double worst = 0.0;
  bool ok = true;
  for (double a : {1.0, 2.0}) {
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    const CheckReport r = check_generator_matrices(p, 15, 1e-9);
    worst = std::max(worst, r.max_abs_error);
    ok = ok && r.pass;
  }
  announce(2, ok,
           "K0/K+/K-/K1/K2 matrices (N=15) vs diag n+lambda0^2 a^2+1/2 and band "
           "-sqrt(n(n+alpha)): worst " + fmt(worst) + " (tol 1e-9)");
  REQUIRE(ok);
}

TEST_CASE("su(1,1) commutator closure", "[c3]") {
  double worst = 0.0;
  bool ok = true;
  for (double a : {1.0, 5.0}) {  // alpha = 2, 50
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    const CheckReport r = check_su11(p, 25, 1e-9);
    worst = std::max(worst, r.max_abs_error);
    ok = ok && r.pass;
  }
  announce(3, ok,
           "[K0,K+-] = +-K+-, [K-,K+] = 2K0 interior blocks (N=25, alpha in {2,50}): worst " +
               fmt(worst) + " (tol 1e-9)");
  REQUIRE(ok);
}

TEST_CASE("Casimir invariant", "[c4]") {
  double worst = 0.0;
  bool ok = true;
  for (double a : {1.0, 5.0}) {
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    const CheckReport r = check_casimir(p, 25, 1e-9);
    worst = std::max(worst, r.max_abs_error);
    ok = ok && r.pass;
  }
  announce(4, ok,
           "K0^2 - (K+K- + K-K+)/2 = lambda0^4 a^4 - 1/4 on the diagonal, zero off it: worst " +
               fmt(worst) + " (tol 1e-9)");
  REQUIRE(ok);
}

TEST_CASE("ladder actions and state recovery", "[c5]") {
  const auto grid = make_check_grid(unit, 9);
  double worst = 0.0;
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const CheckReport r = check_ladder(unit, n, grid, 1e-8);
    worst = std::max(worst, r.max_abs_error);
    ok = ok && r.pass;
  }
  for (int n = 0; n <= 4; ++n) {
    const CheckReport r = check_ladder_recovery(unit, n, grid, 1e-8);
    worst = std::max(worst, r.max_abs_error);
    ok = ok && r.pass;
  }
  announce(5, ok,
           "K-+ ladder with coefficient -sqrt(n(n+alpha)) (n <= 8) and ladder-built states "
           "(n <= 4): worst " + fmt(worst) + " (tol 1e-8 of amplitude)");
  REQUIRE(ok);
}

TEST_CASE("factorization closes the eigenproblem", "[c6]") {
  const auto grid = make_check_grid(unit, 6);
  double worst = 0.0, annihilation = 0.0;
  bool ok = true;
  for (int n = 0; n <= 5; ++n) {
    const CheckReport r = check_factorization(unit, ModelKind::Semiconfined, n, grid, 1e-7);
    worst = std::max(worst, r.max_abs_error);
    ok = ok && r.pass;
    for (const auto& d : r.details)
      if (d.location == "A- psi_0 = 0") annihilation = d.error;
  }
  ok = ok && annihilation < 1e-9;
  announce(6, ok,
           "H psi_n = E_n psi_n and hw A+A- psi_n + E0 psi_n = E_n psi_n (n <= 5), worst " +
               fmt(worst) + " (tol 1e-7); A- psi_0 residual " + fmt(annihilation) +
               " (tol 1e-9)");
  REQUIRE(ok);
}

TEST_CASE("deformed commutators and Heisenberg-Lie forms", "[c7]") {
  const auto grid = make_check_grid(unit, 4);
  const CheckReport pdem = check_pdem_commutators(unit, grid, 1e-7);
  const CheckReport lie = check_heisenberg_lie(unit, ModelKind::Semiconfined, grid, 1e-7);
  const double worst = std::max(pdem.max_abs_error, lie.max_abs_error);
  const bool ok = pdem.pass && lie.pass;
  announce(7, ok,
           "[A-,A+], [H,A+-], [H,P], [H,x] relations on psi_0..psi_3: worst " + fmt(worst) +
               " (tol 1e-7 of amplitude)");
  REQUIRE(ok);
}

TEST_CASE("weighted Laguerre integral identities", "[c8]") {
  const CheckReport r = verify_identities(10, {1.5, 2.0, 8.0, 50.0}, 1e-9);
  announce(8, r.pass,
           "eight weighted integral identities, n <= 10, alpha in {1.5,2,8,50}: worst " +
               fmt(r.max_abs_error) + " relative (tol 1e-9)");
  REQUIRE(r.pass);
}

TEST_CASE("uncertainty products", "[c9]") {
  // ground-state product at unit parameters
  const MomentSet g = moments_semiconfined(unit, 0);
  const double product_err = std::abs(g.product - 0.75);
  bool ok = product_err < 1e-10;

  // closed form vs quadrature
  double path_gap = 0.0;
  for (double a : {1.0, 1.3}) {
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    for (int n = 0; n <= 5; ++n) {
      const MomentSet cf = moments_semiconfined(p, n, MomentMethod::ClosedForm);
      const MomentSet qd = moments_semiconfined(p, n, MomentMethod::Quadrature);
      for (double d : {std::abs(cf.mean_x - qd.mean_x) / std::max(1.0, std::abs(cf.mean_x)),
                       std::abs(cf.mean_p - qd.mean_p),
                       std::abs(cf.var_x - qd.var_x) / std::max(1.0, cf.var_x),
                       std::abs(cf.var_p - qd.var_p) / std::max(1.0, cf.var_p)})
        path_gap = std::max(path_gap, d);
    }
  }
  ok = ok && path_gap < 1e-8;

  // the product exceeds hbar^2/4 exactly when a exceeds the threshold radius
  bool threshold_ok = true;
  for (double a : {0.5, 0.70711 - 0.01, 0.70711 + 0.01, 1.0, 4.0}) {
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    const GroundStateBound b = ground_state_bound(p);
    threshold_ok = threshold_ok && (b.exceeds_quarter == (a > b.threshold_a));
  }
  ok = ok && threshold_ok;
  announce(9, ok,
           "ground product 0.75 (err " + fmt(product_err) + ", tol 1e-10); closed vs quadrature "
           "gap " + fmt(path_gap) + " (tol 1e-8, n <= 5); threshold-radius bound " +
               (threshold_ok ? "holds" : "violated") + " on a in {0.5, 0.697, 0.717, 1, 4}");
  REQUIRE(ok);
}

TEST_CASE("finite-difference spectrum oracle", "[c10]") {
  double worst_rel = 0.0;
  bool ok = true;
  for (double a : {1.0, 2.0, 4.0}) {
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    const std::vector<double> ev = oracle_spectrum(p, 4, default_oracle_grid(p, 4, 8000));
    for (int n = 0; n < 4; ++n) {
      const double rel = std::abs(ev[n] - energy(p, n)) / energy(p, n);
      worst_rel = std::max(worst_rel, rel);
    }
  }
  ok = worst_rel < 5e-3;

  // h-halving Richardson ratio at a = 1
  const std::vector<double> coarse = oracle_spectrum(unit, 4, default_oracle_grid(unit, 4, 8000));
  const std::vector<double> fine = oracle_spectrum(unit, 4, default_oracle_grid(unit, 4, 16001));
  double ratio_lo = 1e300, ratio_hi = 0.0;
  for (int n = 0; n < 4; ++n) {
    const double ratio =
        std::abs(coarse[n] - energy(unit, n)) / std::abs(fine[n] - energy(unit, n));
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);
  }
  const bool richardson_ok = ratio_lo > 3.5 && ratio_hi < 4.5;
  ok = ok && richardson_ok;
  announce(10, ok,
           "lowest 4 levels within 5e-3 at 8000 points for a in {1,2,4} (worst " +
               fmt(worst_rel) + "); h-halving error ratio in [3.5,4.5] (measured " +
               fmt(ratio_lo) + ".." + fmt(ratio_hi) + ")");
  REQUIRE(ok);
}

TEST_CASE("flat-space limits", "[c11]") {
  const std::vector<double> a_list = {2.0, 4.0, 8.0, 16.0};
  const std::vector<double> alpha_list = {10.0, 100.0, 1000.0, 10000.0};

  bool tables_ok = true;
  for (int n = 0; n <= 3; ++n)
    tables_ok = tables_ok && strictly_decreasing(wavefunction_limit(unit, n, a_list));
  for (int m = 0; m <= 1; ++m)
    tables_ok = tables_ok && strictly_decreasing(generator_limit(unit, a_list, m));

  std::vector<ConvergenceTable> lh;
  for (int n = 0; n <= 6; ++n) {
    lh.push_back(laguerre_hermite_limit(n, alpha_list));
    tables_ok = tables_ok && decreasing_or_negligible(lh.back());
  }

  // second clause: residual below 5e-2 at alpha = 1e4 for every n <= 6
  double final_worst = 0.0;
  std::string final_list;
  for (int n = 0; n <= 6; ++n) {
    const double r = lh[n].residuals.back()[0];
    final_worst = std::max(final_worst, r);
    final_list += (n ? " " : "") + std::string("n") + std::to_string(n) + "=" + fmt(r);
  }
  const bool final_ok = final_worst < 5e-2;

  const bool ok = tables_ok && final_ok;
  announce(11, ok,
           std::string("convergence tables ") + (tables_ok ? "decrease" : "do not decrease") +
               " over a in {2,4,8,16}; Laguerre->Hermite residuals at alpha=1e4: [" +
               final_list + "] vs tol 5e-2");
  if (!final_ok) {
    // the sup-norm over [-2,2] shrinks only like alpha^(-1/2) once the
    // polynomial degree exceeds 1, so the 5e-2 target needs far larger alpha;
    // measured continuation for reference:
    std::string note;
    for (int n = 2; n <= 6; ++n) {
      const ConvergenceTable t = laguerre_hermite_limit(n, {1.0e4, 1.0e6});
      note += (n > 2 ? " " : "") + std::string("n") + std::to_string(n) + "=" +
              fmt(t.residuals.back()[0]);
    }
    std::printf("    note: residuals at alpha=1e6: [%s]\n", note.c_str());
    std::fflush(stdout);
  }
  REQUIRE(tables_ok);
  REQUIRE(final_ok);
}
