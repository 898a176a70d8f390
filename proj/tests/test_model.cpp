// Parameter derivation, the mass profile, potentials, superpotentials and the
// shared spectrum.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "semiosc/model.hpp"

using namespace semiosc;
using Catch::Approx;

TEST_CASE("derived parameters follow from the primitive four", "[model]") {
  const OscillatorParams p = make_params(2.0, 3.0, 0.5, 1.7);
  CHECK(p.lambda0 == Approx(std::sqrt(2.0 * 3.0 / 0.5)).epsilon(1e-15));
  CHECK(p.alpha == Approx(2.0 * p.lambda0 * p.lambda0 * 1.7 * 1.7).epsilon(1e-15));
  CHECK(p.e0 == Approx(0.5 * 0.5 * 3.0).epsilon(1e-15));

  const OscillatorParams unit = make_params(1.0, 1.0, 1.0, 1.0);
  CHECK(unit.lambda0 == 1.0);
  CHECK(unit.alpha == 2.0);
  CHECK(unit.e0 == 0.5);
}

TEST_CASE("make_params rejects nonpositive or nonfinite input", "[model]") {
  CHECK_THROWS_AS(make_params(0.0, 1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_params(1.0, -2.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 1.0, -0.5), std::domain_error);
  CHECK_THROWS_AS(make_params(std::numeric_limits<double>::infinity(), 1.0, 1.0, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(make_params(std::numeric_limits<double>::quiet_NaN(), 1.0, 1.0, 1.0),
                  std::domain_error);
}

TEST_CASE("mass profile: hyperbolic in the interior, infinite past the wall", "[model]") {
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 2.0);
  CHECK(mass(p, 0.0) == Approx(p.m0).epsilon(1e-15));    // M(0) = m0
  CHECK(mass(p, 2.0) == Approx(p.m0 / 2.0));             // halves at x = a
  CHECK(mass(p, -1.0) == Approx(2.0 * p.m0));            // doubles halfway to the wall
  CHECK(std::isinf(mass(p, -2.0)));
  CHECK(std::isinf(mass(p, -5.0)));
  CHECK(mass(p, 1e9) < 1e-8);                            // vanishes at infinity

  // closed-form derivative consistent with a finite difference
  const double h = 1e-6;
  const double fd = (mass(p, 0.5 + h) - mass(p, 0.5 - h)) / (2.0 * h);
  CHECK(mass_derivative(p, 0.5) == Approx(fd).epsilon(1e-8));
  CHECK_THROWS_AS(mass_derivative(p, -2.0), std::domain_error);
}

TEST_CASE("potentials agree at the origin and deform away from it", "[model]") {
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 1.0);
  CHECK(potential(p, ModelKind::ConstantMass, 0.0) == 0.0);
  CHECK(potential(p, ModelKind::Semiconfined, 0.0) == 0.0);
  for (double x : {0.25, 0.5, 1.5}) {
    const double vc = potential(p, ModelKind::ConstantMass, x);
    const double vs = potential(p, ModelKind::Semiconfined, x);
    CHECK(vs == Approx(vc * p.a / (x + p.a)).epsilon(1e-14));
    CHECK(vs < vc);  // lighter mass on the right softens the wall-side rise
  }
  // diverges approaching the wall
  CHECK(potential(p, ModelKind::Semiconfined, -1.0 + 1e-8) > 1e6);
  CHECK_THROWS_AS(potential(p, ModelKind::Semiconfined, -1.0), std::domain_error);
}

TEST_CASE("superpotential derivative is the closed form of its slope", "[model]") {
  const OscillatorParams p = make_params(1.0, 1.0, 1.0, 1.3);
  for (ModelKind model : {ModelKind::ConstantMass, ModelKind::Semiconfined}) {
    for (double x : {-0.9, -0.2, 0.0, 0.7, 2.5}) {
      const double h = 1e-6;
      const double fd =
          (superpotential(p, model, x + h) - superpotential(p, model, x - h)) / (2.0 * h);
      CHECK(superpotential_derivative(p, model, x) == Approx(fd).margin(1e-8));
    }
  }
  // the two models share value and slope at x = 0
  CHECK(superpotential(p, ModelKind::Semiconfined, 0.0) ==
        Approx(superpotential(p, ModelKind::ConstantMass, 0.0)).margin(1e-15));
  CHECK(superpotential_derivative(p, ModelKind::Semiconfined, 0.0) ==
        Approx(superpotential_derivative(p, ModelKind::ConstantMass, 0.0)).epsilon(1e-14));
  CHECK_THROWS_AS(superpotential(p, ModelKind::Semiconfined, -1.3), std::domain_error);
}

TEST_CASE("both models share the equidistant spectrum", "[model]") {
  const OscillatorParams p = make_params(2.0, 1.5, 0.7, 4.0);
  for (int n = 0; n <= 12; ++n) {
    CHECK(energy(p, n) == Approx(p.hbar * p.omega * (n + 0.5)).epsilon(1e-15));
  }
  CHECK(energy(p, 1) - energy(p, 0) == Approx(p.hbar * p.omega).epsilon(1e-15));
  CHECK_THROWS_AS(energy(p, -1), std::domain_error);
}
