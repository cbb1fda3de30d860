#pragma once

#include <string>
#include <vector>

#include "mfising/params.hpp"

namespace mfising {

/// Jz*beta(m) - 1, evaluated without cancellation near m = 0.
double beta_excess(double m, const ModelParams& p);

/// Reduced temperature t = (T - Tc)/Tc = (1 - Jz beta)/(Jz beta) along the
/// curve; negative for m != 0 (ordered side).
double reduced_temperature(double m, const ModelParams& p);

/// chi = beta m^2 (1 - m^2) / (m^2 + (1 - m^2) log(1 - m^2)), i.e. beta / (dxi/dm).
/// Diverges at m = 0, which is rejected.
double susceptibility(double m, const ModelParams& p);

/// Specific heat per site C = (du/dm) / (dT/dm), dT/dm by central difference
/// with step 1e-6 |m|. Tends to k as m -> 0.
double specific_heat(double m, const ModelParams& p);

/// Euclidean norm of (dbeta/dm, dxi/dm) by central differences. Vanishes
/// linearly at m = 0, where the map m -> (beta, xi) has its cusp.
double jacobian_norm(double m, const ModelParams& p);

struct FitWindow {
  double m_lo = 1e-3;
  double m_hi = 1e-2;
  int n_points = 20;
};

struct ExponentFit {
  std::string name;
  /// Exponent estimate derived from the log-log slope.
  double value = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  /// Root-mean-square residual of the log-log regression.
  double residual = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  FitWindow window;

  bool within_tolerance() const;
};

struct ExponentReport {
  ExponentFit delta;
  ExponentFit beta;
  ExponentFit gamma;
  ExponentFit alpha;
  /// True when |C/k - 1| < 1e-3 at every point of the alpha window.
  bool alpha_flag = false;
  double alpha_max_deviation = 0.0;
  /// Sign of chi observed across the gamma window (+1 or -1, 0 if mixed).
  int chi_sign = 0;

  bool all_within_tolerance() const;
};

/// Windows used for the four fits; all default to m in [1e-3, 1e-2], 20 log-spaced points.
struct ExponentWindows {
  FitWindow delta;
  FitWindow beta;
  FitWindow gamma;
  FitWindow alpha;
};

/// Fit delta (xi ~ m^delta), beta (m ~ |t|^beta), gamma (|chi| ~ |t|^-gamma)
/// and alpha (C ~ |t|^-alpha) along the solution curve by least squares in
/// log-log space.
ExponentReport fit_exponents(const ModelParams& p, const ExponentWindows& windows = {});

/// Log-spaced points of a window; throws DomainError for windows with fewer
/// than 5 points, m_lo >= m_hi, m outside (0, 1), or straddling kSeriesSwitch.
std::vector<double> window_points(const FitWindow& w);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mfising
