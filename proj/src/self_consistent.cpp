#include "mfising/self_consistent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfising/curve.hpp"

namespace mfising {

namespace {

double residual(double m, double a, double xi) { return m - std::tanh(a * m - xi); }

// log(2 cosh x) without overflow.
double log_two_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax));
}

double bisect(double lo, double hi, double f_lo, double a, double xi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo < 1e-15) {
      break;
    }
    const double f_mid = residual(mid, a, xi);
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double f_hi = residual(hi, a, xi);
  return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

}  // namespace

double massieu_per_site(double m, const ConjugateCoords& c, const ModelParams& p) {
  const double a = c.beta * p.jz();
  return -0.5 * a * m * m + log_two_cosh(a * m - c.xi);
}

double map_derivative(double m, const ConjugateCoords& c, const ModelParams& p) {
  const double a = c.beta * p.jz();
  const double sech = 1.0 / std::cosh(a * m - c.xi);
  return a * sech * sech;
}

RootSet solve(const ConjugateCoords& c, const ModelParams& p) {
  if (!(c.beta > 0.0)) {
    throw DomainError("solve: beta must be positive, got " + std::to_string(c.beta));
  }
  const double a = c.beta * p.jz();

  std::vector<double> nodes;
  nodes.reserve(kBracketSegments + 3);
  for (int i = 0; i <= kBracketSegments; ++i) {
    nodes.push_back(-1.0 + 2.0 * i / kBracketSegments);
  }
  // Residual is monotone between the points where a sech^2(a m - xi) = 1.
  if (a > 1.0) {
    const double w = std::acosh(std::sqrt(a));
    for (double e : {(c.xi - w) / a, (c.xi + w) / a}) {
      if (e > -1.0 && e < 1.0) {
        nodes.push_back(e);
      }
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }

  std::vector<double> f(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    f[i] = residual(nodes[i], a, c.xi);
  }

  std::vector<double> ms;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (f[i] == 0.0) {
      // tanh saturates to +-1 for large beta; keep such roots inside (-1, 1).
      ms.push_back(std::clamp(nodes[i], std::nextafter(-1.0, 0.0), std::nextafter(1.0, 0.0)));
    }
    if (i + 1 < nodes.size() && ((f[i] < 0.0 && f[i + 1] > 0.0) || (f[i] > 0.0 && f[i + 1] < 0.0))) {
      ms.push_back(bisect(nodes[i], nodes[i + 1], f[i], a, c.xi));
    }
  }
  std::sort(ms.begin(), ms.end());

  if (ms.empty()) {
    throw NumericalError("solve: no root bracketed on (-1, 1)");
  }
  if (ms.size() > 3) {
    throw NumericalError("solve: bracketing found " + std::to_string(ms.size()) +
                         " roots, at most 3 are possible");
  }

  RootSet out;
  for (double m : ms) {
    Root r;
    r.m = m;
    r.stability = map_derivative(m, c, p) < 1.0 ? Stability::Stable : Stability::Unstable;
    r.massieu_per_site = massieu_per_site(m, c, p);
    out.roots.push_back(r);
  }

  // Fall back to every root when none is strictly stable (marginal point beta Jz = 1, xi = 0).
  const bool any_stable = std::any_of(out.roots.begin(), out.roots.end(), [](const Root& r) {
    return r.stability == Stability::Stable;
  });
  bool have = false;
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    const Root& r = out.roots[i];
    if (any_stable && r.stability != Stability::Stable) {
      continue;
    }
    if (!have) {
      out.selected = i;
      have = true;
      continue;
    }
    const double best = out.roots[out.selected].massieu_per_site;
    const double tie = 1e-12 * std::max(1.0, std::abs(best));
    // Roots are ascending, so ">= best - tie" prefers the larger m on ties.
    if (r.massieu_per_site >= best - tie) {
      out.selected = i;
    }
  }
  return out;
}

std::vector<ZeroFieldPoint> zero_field_branch(double beta_lo, double beta_hi, int n,
                                              const ModelParams& p) {
  if (!(beta_lo > 0.0) || !(beta_lo < beta_hi)) {
    throw DomainError("zero_field_branch: need 0 < beta_lo < beta_hi");
  }
  if (n < 2) {
    throw DomainError("zero_field_branch: need at least 2 points");
  }
  std::vector<ZeroFieldPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  const double last = n - 1;
  for (int i = 0; i < n; ++i) {
    ZeroFieldPoint z;
    z.beta = ((last - i) * beta_lo + i * beta_hi) / last;
    z.lambda = p.k * z.beta;
    if (z.beta * p.jz() > 1.0) {
      const RootSet rs = solve({z.beta, 0.0}, p);
      const Root& top = rs.roots.back();
      if (top.m > 0.0 && top.stability == Stability::Stable) {
        z.m_plus = top.m;
        z.s_per_site = s_of_m(top.m, p);
        if (!(z.lambda > p.k / p.jz())) {
          throw NumericalError("zero_field_branch: lambda <= k/Jz on the ordered branch");
        }
      }
    }
    out.push_back(z);
  }
  return out;
}

}  // namespace mfising
