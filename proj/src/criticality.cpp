#include "mfising/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfising/curve.hpp"

namespace mfising {

namespace {

// Below this |m| the excess Jz*beta - 1 and the susceptibility denominator
// come from their Taylor series.
constexpr double kCriticalSeriesSwitch = 1e-1;
constexpr double kChiSeriesSwitch = 1e-2;

void require_nonzero_open_unit(double m, const char* what) {
  if (!(std::abs(m) < 1.0) || m == 0.0) {
    throw DomainError(std::string(what) + ": need 0 < |m| < 1, got " + std::to_string(m));
  }
}

ExponentFit make_fit(const char* name, double target, double tolerance, const FitWindow& w,
                     const LinearFit& lf, double value) {
  ExponentFit f;
  f.name = name;
  f.value = value;
  f.slope = lf.slope;
  f.intercept = lf.intercept;
  f.residual = lf.rms_residual;
  f.target = target;
  f.tolerance = tolerance;
  f.window = w;
  return f;
}

}  // namespace

double beta_excess(double m, const ModelParams& p) {
  if (!(std::abs(m) < 1.0)) {
    throw DomainError("beta_excess: need |m| < 1, got " + std::to_string(m));
  }
  const double x = m * m;
  if (std::abs(m) < kCriticalSeriesSwitch) {
    // sum_{n>=1} x^n / (n+1), through x^8
    double acc = 1.0 / 9;
    for (int n = 7; n >= 1; --n) {
      acc = 1.0 / (n + 1) + x * acc;
    }
    return x * acc;
  }
  return p.jz() * beta_of_m(m, p) - 1.0;
}

double reduced_temperature(double m, const ModelParams& p) {
  const double e = beta_excess(m, p);
  return -e / (1.0 + e);
}

double susceptibility(double m, const ModelParams& p) {
  require_nonzero_open_unit(m, "susceptibility");
  const double x = m * m;
  double denom = 0.0;
  if (std::abs(m) < kChiSeriesSwitch) {
    // x + (1-x) log(1-x) = sum_{n>=2} x^n / (n (n-1))
    double acc = 1.0 / (8 * 7);
    for (int n = 7; n >= 2; --n) {
      acc = 1.0 / (n * (n - 1)) + x * acc;
    }
    denom = x * x * acc;
  } else {
    denom = x + (1.0 - x) * std::log1p(-x);
  }
  return beta_of_m(m, p) * x * (1.0 - x) / denom;
}

double specific_heat(double m, const ModelParams& p) {
  require_nonzero_open_unit(m, "specific_heat");
  const double step = 1e-6 * std::abs(m);
  const double e_plus = beta_excess(m + step, p);
  const double e_minus = beta_excess(m - step, p);
  // T(m) = Jz / (k (1 + e(m))), differenced in terms of e to avoid cancellation.
  const double dT = (p.jz() / p.k) * (e_minus - e_plus) / ((1.0 + e_plus) * (1.0 + e_minus));
  const double dT_dm = dT / (2.0 * step);
  const double du_dm = -p.jz() * m;
  return du_dm / dT_dm;
}

double jacobian_norm(double m, const ModelParams& p) {
  require_nonzero_open_unit(m, "jacobian_norm");
  const double step = 1e-6 * std::max(std::abs(m), 1e-3);
  const double dbeta = (beta_of_m(m + step, p) - beta_of_m(m - step, p)) / (2.0 * step);
  const double dxi = (xi_of_m(m + step, p) - xi_of_m(m - step, p)) / (2.0 * step);
  return std::hypot(dbeta, dxi);
}

bool ExponentFit::within_tolerance() const { return std::abs(value - target) <= tolerance; }

bool ExponentReport::all_within_tolerance() const {
  return delta.within_tolerance() && beta.within_tolerance() && gamma.within_tolerance() &&
         alpha.within_tolerance() && alpha_flag;
}

std::vector<double> window_points(const FitWindow& w) {
  if (w.n_points < 5) {
    throw DomainError("fit window needs at least 5 points, got " + std::to_string(w.n_points));
  }
  if (!(w.m_lo > 0.0) || !(w.m_lo < w.m_hi) || !(w.m_hi < 1.0)) {
    throw DomainError("fit window must satisfy 0 < m_lo < m_hi < 1");
  }
  if (w.m_lo < kSeriesSwitch && kSeriesSwitch < w.m_hi) {
    throw DomainError("fit window straddles the series/closed-form switch at m = " +
                      std::to_string(kSeriesSwitch));
  }
  std::vector<double> pts(static_cast<std::size_t>(w.n_points));
  const double last = w.n_points - 1;
  const double lo = std::log(w.m_lo);
  const double hi = std::log(w.m_hi);
  for (int i = 0; i < w.n_points; ++i) {
    pts[static_cast<std::size_t>(i)] =
        i == 0 ? w.m_lo : i == w.n_points - 1 ? w.m_hi : std::exp(((last - i) * lo + i * hi) / last);
  }
  return pts;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("least_squares: need matching inputs with at least two points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw DomainError("least_squares: abscissae are all equal");
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms_residual = std::sqrt(ss / n);
  return f;
}

ExponentReport fit_exponents(const ModelParams& p, const ExponentWindows& windows) {
  ExponentReport report;

  {
    const auto ms = window_points(windows.delta);
    std::vector<double> x, y;
    for (double m : ms) {
      x.push_back(std::log(m));
      y.push_back(std::log(xi_of_m(m, p)));
    }
    const LinearFit lf = least_squares(x, y);
    report.delta = make_fit("delta", 3.0, 0.01, windows.delta, lf, lf.slope);
  }
  {
    const auto ms = window_points(windows.beta);
    std::vector<double> x, y;
    for (double m : ms) {
      x.push_back(std::log(std::abs(reduced_temperature(m, p))));
      y.push_back(std::log(m));
    }
    const LinearFit lf = least_squares(x, y);
    report.beta = make_fit("beta", 0.5, 0.005, windows.beta, lf, lf.slope);
  }
  {
    const auto ms = window_points(windows.gamma);
    std::vector<double> x, y;
    int positive = 0;
    for (double m : ms) {
      const double chi = susceptibility(m, p);
      positive += chi > 0.0 ? 1 : 0;
      x.push_back(std::log(std::abs(reduced_temperature(m, p))));
      y.push_back(std::log(std::abs(chi)));
    }
    const LinearFit lf = least_squares(x, y);
    report.gamma = make_fit("gamma", 1.0, 0.02, windows.gamma, lf, -lf.slope);
    const int count = static_cast<int>(ms.size());
    report.chi_sign = positive == count ? 1 : positive == 0 ? -1 : 0;
  }
  {
    const auto ms = window_points(windows.alpha);
    std::vector<double> x, y;
    double worst = 0.0;
    for (double m : ms) {
      const double c = specific_heat(m, p);
      worst = std::max(worst, std::abs(c / p.k - 1.0));
      x.push_back(std::log(std::abs(reduced_temperature(m, p))));
      y.push_back(std::log(c));
    }
    const LinearFit lf = least_squares(x, y);
    report.alpha = make_fit("alpha", 0.0, 0.01, windows.alpha, lf, -lf.slope);
    report.alpha_max_deviation = worst;
    report.alpha_flag = worst < 1e-3;
  }
  return report;
}

}  // namespace mfising
