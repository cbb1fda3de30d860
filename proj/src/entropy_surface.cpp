#include "mfising/entropy_surface.hpp"

#include <cmath>
#include <sstream>

namespace mfising {

namespace {

void require_domain(const ThermoState& s, const ModelParams& p, const char* what) {
  std::ostringstream msg;
  msg.precision(17);
  if (s.U == 0.0) {
    msg << what << ": U = 0 is outside the domain";
  } else if (s.M == 0.0) {
    msg << what << ": M = 0 is outside the domain";
  } else if (!(std::abs(state_ratio(s, p)) <= 1.0 - kDomainMargin)) {
    msg << what << ": |2U/(Jz M)| = " << std::abs(state_ratio(s, p))
        << " must be below 1 (U = " << s.U << ", M = " << s.M << ")";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

}  // namespace

double state_ratio(const ThermoState& s, const ModelParams& p) {
  return 2.0 * s.U / (p.jz() * s.M);
}

bool in_domain(const ThermoState& s, const ModelParams& p) {
  return s.U != 0.0 && s.M != 0.0 && std::abs(state_ratio(s, p)) <= 1.0 - kDomainMargin;
}

double entropy(const ThermoState& s, const ModelParams& p, const EntropyBranch& b) {
  require_domain(s, p, "entropy");
  const double x = state_ratio(s, p);
  const double m2_over_u = s.M * s.M / s.U;
  return p.k * s.M * std::atanh(x) + 0.25 * p.k * p.jz() * m2_over_u * std::log1p(-x * x) +
         b.a * m2_over_u;
}

EntropyGradient gradient(const ThermoState& s, const ModelParams& p, const EntropyBranch& b) {
  require_domain(s, p, "gradient");
  const double x = state_ratio(s, p);
  const double log_term = std::log1p(-x * x);
  const double m_over_u = s.M / s.U;
  // beta = -(Jz M^2 / 4U^2) log(1-x^2), xi = atanh(x) + (Jz M / 2U) log(1-x^2)
  const double beta = -0.25 * p.jz() * m_over_u * m_over_u * log_term;
  const double xi = std::atanh(x) + 0.5 * p.jz() * m_over_u * log_term;
  return {p.k * beta - b.a * m_over_u * m_over_u, p.k * xi + 2.0 * b.a * m_over_u};
}

double hj_operator(const ThermoState& s, const ModelParams& p, const EntropyGradient& g) {
  require_domain(s, p, "hj_operator");
  return 2.0 * s.U / (p.k * s.M) * g.dU + g.dM / p.k - std::atanh(state_ratio(s, p));
}

double hj_residual(const ThermoState& s, const ModelParams& p, const EntropyBranch& b) {
  return hj_operator(s, p, gradient(s, p, b));
}

std::vector<SurfaceCell> surface_grid(AxisRange u_range, AxisRange m_range, int n_u, int n_m,
                                      const ModelParams& p, const EntropyBranch& b) {
  if (n_u < 2 || n_m < 2) {
    throw DomainError("surface_grid: need at least 2 points per axis");
  }
  auto node = [](AxisRange r, int i, int n) {
    const double last = n - 1;
    return ((last - i) * r.lo + i * r.hi) / last;
  };
  std::vector<SurfaceCell> cells;
  cells.reserve(static_cast<std::size_t>(n_u) * static_cast<std::size_t>(n_m));
  for (int i = 0; i < n_u; ++i) {
    const double u = node(u_range, i, n_u);
    for (int j = 0; j < n_m; ++j) {
      SurfaceCell c;
      c.U = u;
      c.M = node(m_range, j, n_m);
      c.physical = u < 0.0;
      const ThermoState st{c.U, c.M};
      if (in_domain(st, p)) {
        c.S = entropy(st, p, b);
      }
      cells.push_back(c);
    }
  }
  return cells;
}

}  // namespace mfising
