#include "mfising/curve.hpp"

#include <cmath>
#include <string>

#include "mfising/criticality.hpp"

namespace mfising {

namespace {

void require_open_unit(double m, const char* what) {
  if (!(std::abs(m) < 1.0)) {
    throw DomainError(std::string(what) + ": order parameter must satisfy |m| < 1, got " +
                      std::to_string(m));
  }
}

}  // namespace

double beta_of_m(double m, const ModelParams& p) {
  require_open_unit(m, "beta_of_m");
  const double x = m * m;
  if (std::abs(m) < kSeriesSwitch) {
    // -log(1-x)/x = 1 + x/2 + x^2/3 + x^3/4 + x^4/5 + ...
    return (1.0 + x * (1.0 / 2 + x * (1.0 / 3 + x * (1.0 / 4 + x / 5)))) / p.jz();
  }
  return -std::log1p(-x) / (p.jz() * x);
}

double xi_of_m(double m, const ModelParams& /*p*/) {
  require_open_unit(m, "xi_of_m");
  const double x = m * m;
  if (std::abs(m) < kSeriesSwitch) {
    // coefficient of m^(2n+1) is 1/n - 1/(2n+1)
    return m * x * (1.0 / 6 + x * (2.0 / 15 + x * (3.0 / 28 + x * (4.0 / 45))));
  }
  return -std::atanh(m) - std::log1p(-x) / m;
}

double u_of_m(double m, const ModelParams& p) {
  require_open_unit(m, "u_of_m");
  return 0.0 - 0.5 * p.jz() * m * m;
}

double s_of_m(double m, const ModelParams& p) {
  require_open_unit(m, "s_of_m");
  return -p.k * m * std::atanh(m) - 0.5 * p.k * std::log1p(-m * m);
}

CurveSample curve_sample_at(double m, const ModelParams& p) {
  CurveSample s;
  s.m = m;
  s.beta = beta_of_m(m, p);
  s.xi = xi_of_m(m, p);
  const FieldCoords f = to_field_coords({s.beta, s.xi}, p);
  s.T = f.T;
  s.h = f.h;
  s.u = u_of_m(m, p);
  s.s = s_of_m(m, p);
  if (m == 0.0) {
    s.c = p.k;
  } else {
    s.chi = susceptibility(m, p);
    s.c = specific_heat(m, p);
  }
  return s;
}

std::vector<CurveSample> sample_curve(double m_min, double m_max, int n, Spacing spacing,
                                      const ModelParams& p) {
  if (!(m_min < m_max)) {
    throw DomainError("sample_curve: need m_min < m_max");
  }
  if (!(m_min > -1.0) || !(m_max < 1.0)) {
    throw DomainError("sample_curve: range must lie inside (-1, 1)");
  }
  if (n < 2) {
    throw DomainError("sample_curve: need at least 2 samples");
  }
  if (spacing == Spacing::Log && !(m_min > 0.0)) {
    throw DomainError("sample_curve: log spacing requires m_min > 0");
  }

  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  const double last = n - 1;
  for (int i = 0; i < n; ++i) {
    double m = 0.0;
    if (i == 0) {
      m = m_min;
    } else if (i == n - 1) {
      m = m_max;
    } else if (spacing == Spacing::Linear) {
      m = ((last - i) * m_min + i * m_max) / last;
    } else {
      m = std::exp(((last - i) * std::log(m_min) + i * std::log(m_max)) / last);
    }
    out.push_back(curve_sample_at(m, p));
  }
  return out;
}

}  // namespace mfising
