// Finite-difference eigenvalue oracle: an implementation-independent check of
// the closed-form spectrum and ground state via the flux-form discretization
// of the variable-mass Hamiltonian.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "semiosc/semiosc.hpp"

using namespace semiosc;
using Catch::Approx;

TEST_CASE("default grid spans the wall-to-tail box", "[oracle]") {
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 1.0);
  const Grid g = default_oracle_grid(p, 4, 500);
  CHECK(g.count == 500);
  CHECK(g.h > 0.0);
  CHECK(g.x_left == Approx(-p.a + g.h).margin(1e-15));
  // right edge u_max comfortably past the turning region of the 4th state
  const double c = 2.0 * p.lambda0 * p.lambda0 * p.a;
  const double x_right = g.x_left + (g.count - 1) * g.h;
  CHECK(c * (x_right + p.a) > p.alpha + 60.0);
  CHECK_THROWS_AS(default_oracle_grid(p, 4, 2), std::domain_error);
}

TEST_CASE("discretized operator has the flux-form sign structure", "[oracle]") {
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 1.0);
  const Grid g = default_oracle_grid(p, 2, 40);
  const SymmetricTridiagonal t = discretize_hamiltonian(p, g);
  REQUIRE(t.diag.size() == 40);
  REQUIRE(t.offdiag.size() == 39);
  for (double d : t.diag) CHECK(d > 0.0);       // kinetic + confining potential
  for (double e : t.offdiag) CHECK(e < 0.0);    // -theta/h^2 couplings
  // coupling strength grows away from the wall with the inverse mass
  CHECK(t.offdiag[38] < t.offdiag[0]);

  Grid bad;
  CHECK_THROWS_AS(discretize_hamiltonian(p, bad), std::domain_error);
}

TEST_CASE("oracle spectrum reproduces the equidistant levels", "[oracle]") {
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 1.0);
  const Grid g = default_oracle_grid(p, 4, 2000);
  const std::vector<double> ev = oracle_spectrum(p, 4, g);
  REQUIRE(ev.size() == 4);
  for (int n = 0; n < 4; ++n) {
    const double exact = energy(p, n);
    CHECK(std::abs(ev[n] - exact) / exact < 1e-3);
  }
  CHECK_THROWS_AS(oracle_spectrum(p, 0, g), std::domain_error);
  CHECK_THROWS_AS(oracle_spectrum(p, 11, g), std::domain_error);
}

TEST_CASE("discretization error contracts at second order", "[oracle]") {
  // halving h (1000 -> 2001 interior points on the same box) must cut the
  // eigenvalue error by ~4
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 1.0);
  const std::vector<double> coarse = oracle_spectrum(p, 3, default_oracle_grid(p, 3, 1000));
  const std::vector<double> fine = oracle_spectrum(p, 3, default_oracle_grid(p, 3, 2001));
  for (int n = 0; n < 3; ++n) {
    const double e_coarse = std::abs(coarse[n] - energy(p, n));
    const double e_fine = std::abs(fine[n] - energy(p, n));
    const double ratio = e_coarse / e_fine;
    INFO("n = " << n << " ratio " << ratio);
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
  }
}

TEST_CASE("spectrum is independent of the confinement radius", "[oracle]") {
  for (double a : {1.0, 2.0}) {
    const OscillatorParams p = make_params(1.0, 1.0, 1.0, a);
    const std::vector<double> ev = oracle_spectrum(p, 4, default_oracle_grid(p, 4, 2000));
    for (int n = 0; n < 4; ++n) {
      INFO("a = " << a << " n = " << n);
      CHECK(std::abs(ev[n] - energy(p, n)) / energy(p, n) < 1e-3);
    }
  }
}

TEST_CASE("oracle ground vector matches the closed-form state", "[oracle]") {
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 1.0);
  const Grid g = default_oracle_grid(p, 4, 2000);
  const std::vector<double> ev = oracle_spectrum(p, 1, g);
  const std::vector<double> psi = oracle_ground_state(p, g, ev[0]);
  REQUIRE(psi.size() == static_cast<std::size_t>(g.count));

  // grid normalization: sum psi_i^2 h = 1
  double norm = 0.0;
  for (double v : psi) norm += v * v * g.h;
  CHECK(norm == Approx(1.0).epsilon(1e-10));

  double sup = 0.0;
  for (int i = 0; i < g.count; ++i) {
    const double x = g.x_left + i * g.h;
    sup = std::max(sup, std::abs(psi[i] - eval_state({p, ModelKind::Semiconfined, 0}, x).value));
  }
  CHECK(sup < 5e-3);
}
