#include <cmath>

#include "doctest.h"
#include "mfising/errors.hpp"
#include "mfising/ideal_gas.hpp"
#include "oracles.hpp"

using namespace mfising;

TEST_CASE("ideal gas entropy") {
  CHECK(gas_entropy({1.0, 1.0, 1.0, 0.0}) == 0.0);
  CHECK(gas_entropy({std::exp(2.0), std::exp(1.0), 1.0, 0.0}) == doctest::Approx(4.0));
  CHECK(gas_entropy({2.0, 3.0, 1.5, 0.7}) - gas_entropy({2.0, 3.0, 1.5, 0.0}) ==
        doctest::Approx(0.7));
  CHECK_THROWS_AS(gas_entropy({0.0, 1.0, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(gas_entropy({1.0, -1.0, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(gas_entropy({1.0, 1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("ideal gas Hamilton-Jacobi residual") {
  CHECK(std::abs(gas_hj_residual({1.0, 1.0, 1.0, 0.0})) < 1e-15);
  auto gen = oracle::rng(41);
  std::uniform_real_distribution<double> uv(0.1, 10.0), r(0.2, 5.0);
  for (int i = 0; i < 200; ++i) {
    const GasState g{uv(gen), uv(gen), r(gen), 0.0};
    CHECK(std::abs(gas_hj_residual(g)) < 1e-13);
    // gradient agrees with finite differences of the entropy
    const GasGradient gr = gas_gradient(g);
    const double du = oracle::central(
        [&](double u) { return gas_entropy({u, g.V, g.r, g.S0}); }, g.U, 1e-6 * g.U);
    const double dv = oracle::central(
        [&](double v) { return gas_entropy({g.U, v, g.r, g.S0}); }, g.V, 1e-6 * g.V);
    CHECK(du == doctest::Approx(gr.pU).epsilon(1e-7));
    CHECK(dv == doctest::Approx(gr.pV).epsilon(1e-7));
  }
}

TEST_CASE("perturbed entropy fails the virial relation") {
  // S = (3/2) r log U + 1.1 r log V
  for (double r : {1.0, 2.5}) {
    const GasState g{3.0, 4.0, r, 0.0};
    const GasGradient perturbed{1.5 * r / g.U, 1.1 * r / g.V};
    CHECK(gas_hj_operator(g, perturbed) == doctest::Approx(-0.15 * r));
  }
}

TEST_CASE("equations of state recovered from the gradient") {
  GasEos e = gas_recover_eos({3.0, 2.0, 2.0, 0.0});
  CHECK(e.T == doctest::Approx(1.0));
  CHECK(e.p == doctest::Approx(1.0));
  CHECK(e.p * 2.0 == doctest::Approx(2.0 * e.T));
  e = gas_recover_eos({1.5, 1.0, 1.0, 0.0});
  CHECK(e.T == doctest::Approx(1.0));
  CHECK(e.p == doctest::Approx(1.0));
  const double t1 = gas_recover_eos({1.0, 1.0, 1.0, 0.0}).T;
  const double t5 = gas_recover_eos({5.0, 1.0, 1.0, 0.0}).T;
  CHECK(t5 == doctest::Approx(5.0 * t1));
  auto gen = oracle::rng(43);
  std::uniform_real_distribution<double> uv(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const GasState g{uv(gen), uv(gen), uv(gen), 0.0};
    const GasEos eos = gas_recover_eos(g);
    CHECK(std::abs(eos.energy_mismatch) <= 4e-16 * g.U);
    CHECK(std::abs(eos.state_mismatch) <= 4e-16 * g.r * eos.T);
  }
}
