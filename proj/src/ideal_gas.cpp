#include "mfising/ideal_gas.hpp"

#include <cmath>
#include <string>

#include "mfising/errors.hpp"

namespace mfising {

namespace {

void require_state(const GasState& g) {
  if (!(g.U > 0.0)) throw DomainError("ideal gas: U must be positive, got " + std::to_string(g.U));
  if (!(g.V > 0.0)) throw DomainError("ideal gas: V must be positive, got " + std::to_string(g.V));
  if (!(g.r > 0.0)) throw DomainError("ideal gas: r must be positive, got " + std::to_string(g.r));
}

}  // namespace

double gas_entropy(const GasState& g) {
  require_state(g);
  return 1.5 * g.r * std::log(g.U) + g.r * std::log(g.V) + g.S0;
}

GasGradient gas_gradient(const GasState& g) {
  require_state(g);
  return {1.5 * g.r / g.U, g.r / g.V};
}

double gas_hj_operator(const GasState& g, const GasGradient& grad) {
  require_state(g);
  return g.U * grad.pU - 1.5 * g.V * grad.pV;
}

double gas_hj_residual(const GasState& g) { return gas_hj_operator(g, gas_gradient(g)); }

GasEos gas_recover_eos(const GasState& g) {
  const GasGradient grad = gas_gradient(g);
  GasEos e;
  e.T = 1.0 / grad.pU;
  e.p = grad.pV * e.T;
  e.energy_mismatch = g.U - 1.5 * g.r * e.T;
  e.state_mismatch = e.p * g.V - g.r * e.T;
  return e;
}

}  // namespace mfising
