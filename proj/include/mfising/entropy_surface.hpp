#pragma once

#include <optional>
#include <vector>

#include "mfising/params.hpp"

namespace mfising {

/// Extensive point (U, M) of thermodynamic state space.
struct ThermoState {
  double U = 0.0;
  double M = 0.0;
};

/// Coefficient a of the homogeneous solution a M^2 / U; a = 0 is the physical branch.
struct EntropyBranch {
  double a = 0.0;
};

/// |2U/(Jz M)| must stay at or below 1 - kDomainMargin.
inline constexpr double kDomainMargin = 1e-12;

/// (dS/dU, dS/dM) = (k beta, k xi).
struct EntropyGradient {
  double dU = 0.0;
  double dM = 0.0;
};

/// 2U/(Jz M), the order parameter (up to sign) implied by a state.
double state_ratio(const ThermoState& s, const ModelParams& p);

/// True when U != 0, M != 0 and |2U/(Jz M)| <= 1 - kDomainMargin.
bool in_domain(const ThermoState& s, const ModelParams& p);

/// S(U, M) = k M atanh(x) + (k Jz M^2 / 4U) log(1 - x^2) + a M^2 / U, x = 2U/(Jz M).
double entropy(const ThermoState& s, const ModelParams& p, const EntropyBranch& b = {});

EntropyGradient gradient(const ThermoState& s, const ModelParams& p, const EntropyBranch& b = {});

/// Left side minus right side of the Hamilton-Jacobi equation
///   (2U / kM) dS/dU + (1/k) dS/dM = atanh(2U / (Jz M))
/// for an arbitrary gradient; lets tests feed in perturbed entropies.
double hj_operator(const ThermoState& s, const ModelParams& p, const EntropyGradient& g);

/// hj_operator applied to the analytic gradient; zero up to round-off for every a.
double hj_residual(const ThermoState& s, const ModelParams& p, const EntropyBranch& b = {});

struct SurfaceCell {
  double U = 0.0;
  double M = 0.0;
  /// Empty when the cell lies outside the domain.
  std::optional<double> S;
  /// U < 0; cells with U > 0 are valid formulas but off the physical curve.
  bool physical = false;
};

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Row-major (U outer, M inner) grid of entropy values with masked cells.
std::vector<SurfaceCell> surface_grid(AxisRange u_range, AxisRange m_range, int n_u, int n_m,
                                      const ModelParams& p, const EntropyBranch& b = {});

}  // namespace mfising
