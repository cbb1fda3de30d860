#pragma once

#include <optional>
#include <vector>

#include "mfising/params.hpp"

namespace mfising {

/// Below this |m| the parametric curve is evaluated from its Taylor series.
inline constexpr double kSeriesSwitch = 1e-3;

// Parametric solution curve m -> (beta, xi, u, s). Signs follow the
// self-consistent equation m = tanh(beta*Jz*m - xi), so xi has the sign of m.

/// beta(m) = -log(1 - m^2) / (Jz m^2); even in m, equal to 1/Jz at m = 0.
double beta_of_m(double m, const ModelParams& p);

/// xi(m) = -atanh(m) - log(1 - m^2) / m; odd in m, zero at m = 0.
double xi_of_m(double m, const ModelParams& p);

/// Energy per site, -Jz m^2 / 2.
double u_of_m(double m, const ModelParams& p);

/// Entropy per site on the a = 0 branch, without the k log 2 constant.
double s_of_m(double m, const ModelParams& p);

enum class Spacing { Linear, Log };

struct CurveSample {
  double m = 0.0;
  double beta = 0.0;
  double xi = 0.0;
  double T = 0.0;
  double h = 0.0;
  double u = 0.0;
  double s = 0.0;
  /// Empty at m = 0, where the susceptibility diverges.
  std::optional<double> chi;
  double c = 0.0;
};

/// Sample the curve at n points of [m_min, m_max]. Linear grids are built as
/// ((n-1-i) m_min + i m_max) / (n-1), so symmetric ranges with odd n hit m = 0
/// exactly; log grids need m_min > 0.
std::vector<CurveSample> sample_curve(double m_min, double m_max, int n,
                                      Spacing spacing, const ModelParams& p);

CurveSample curve_sample_at(double m, const ModelParams& p);

}  // namespace mfising
