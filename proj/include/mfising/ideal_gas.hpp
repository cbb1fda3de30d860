#pragma once

namespace mfising {

// Ideal gas as a Hamilton-Jacobi fixture: the virial relation
//   p_U U - (3/2) p_V V = 0
// is solved by S = (3/2) r log U + r log V + S0, and its gradient
// reproduces U = (3/2) r T and p V = r T.

struct GasState {
  double U = 1.0;
  double V = 1.0;
  double r = 1.0;
  double S0 = 0.0;
};

struct GasGradient {
  double pU = 0.0;  // dS/dU = 1/T
  double pV = 0.0;  // dS/dV = p/T
};

double gas_entropy(const GasState& g);

GasGradient gas_gradient(const GasState& g);

/// U p_U - (3V/2) p_V for an arbitrary gradient.
double gas_hj_operator(const GasState& g, const GasGradient& grad);

double gas_hj_residual(const GasState& g);

struct GasEos {
  double T = 0.0;
  double p = 0.0;
  /// U - (3/2) r T
  double energy_mismatch = 0.0;
  /// p V - r T
  double state_mismatch = 0.0;
};

/// Temperature and pressure recovered from the gradient: T = 1/p_U, p = p_V T.
GasEos gas_recover_eos(const GasState& g);

}  // namespace mfising
