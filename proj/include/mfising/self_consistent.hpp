#pragma once

#include <cstddef>
#include <vector>

#include "mfising/params.hpp"

namespace mfising {

enum class Stability { Stable, Unstable };

struct Root {
  double m = 0.0;
  Stability stability = Stability::Unstable;
  /// Psi / (k N) = -beta Jz m^2 / 2 + log(2 cosh(beta Jz m - xi)).
  double massieu_per_site = 0.0;
};

/// Solutions of m = tanh(beta Jz m - xi), ascending in m.
struct RootSet {
  std::vector<Root> roots;
  /// Index of the equilibrium root: the stable root with maximal Massieu
  /// function, ties going to the larger m.
  std::size_t selected = 0;

  const Root& equilibrium() const { return roots.at(selected); }
};

/// Number of uniform bracketing segments on (-1, 1).
inline constexpr int kBracketSegments = 64;

/// Grand Massieu function per site, Psi / (k N), at order parameter m.
double massieu_per_site(double m, const ConjugateCoords& c, const ModelParams& p);

/// Derivative of the fixed-point map m -> tanh(beta Jz m - xi).
double map_derivative(double m, const ConjugateCoords& c, const ModelParams& p);

/// All roots of m - tanh(beta Jz m - xi) on (-1, 1), found by sign-change
/// bracketing followed by bisection. The extrema of the residual are added to
/// the bracketing grid, so each segment holds at most one root.
RootSet solve(const ConjugateCoords& c, const ModelParams& p);

struct ZeroFieldPoint {
  double beta = 0.0;
  double m_plus = 0.0;
  double s_per_site = 0.0;
  /// Slope of S = lambda U, equal to k beta.
  double lambda = 0.0;
};

/// Zero-field (xi = 0) branch over n points of [beta_lo, beta_hi]: m = 0 and
/// S = 0 for beta Jz <= 1, otherwise the positive stable root.
std::vector<ZeroFieldPoint> zero_field_branch(double beta_lo, double beta_hi, int n,
                                              const ModelParams& p);

}  // namespace mfising
