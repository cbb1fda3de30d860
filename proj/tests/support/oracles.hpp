#pragma once

// Test-only reference computations. Nothing here calls into the library's
// evaluation paths; values are either frozen from 50-digit arithmetic or
// recomputed in long double by a different route.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace oracle {

// Frozen at 50 significant digits (mpmath), k = Jz = 1.
inline constexpr double kBetaHalf = 1.150728289807123709756876023975309726014038843591;
inline constexpr double kXiHalf = 0.026058000569507009180815393526392010683274142884147;
inline constexpr double kSHalf = -0.13081203594113695912920180623371771041011778400681;
inline constexpr double kChiHalf = 6.3017333343367246654646604721800301970522243917736;
// Full dm/dh along the curve at m = 0.5; differs from the h = 0 susceptibility.
inline constexpr double kCurveDmDhHalf = 6.9293918278140353096272155689434404580168426391541;
inline constexpr double kMStar12 = 0.65856966040575404857773022465282266891025435339044;
inline constexpr double kMStar10001 = 0.017318949386944285492984686696014087790594790625319;
inline constexpr double kSpecificHeatHalf = 0.90644785283023031385783390903309131709028254318005;
inline constexpr double kSpecificHeatMilli = 0.99999966666652777769629624104934209285506660218628;
// S(U = -0.125, M = 1) = 4 s(0.25): that state sits at m = 0.25 with N = 4.
inline constexpr double kSurfaceQuarter = -0.1263357696078529982569092167838451111812;
inline constexpr double kTwelveLog2 = 8.3177661667193437130067854574981188169060016123231;
inline constexpr double kJacobianMilli = 0.0010000014583349921892780617519326568518046934877162;
inline constexpr double kJacobianCenti = 0.010001458499236532455246905685356956140897137449354;
// log Xi closed form at N = 10^4, beta = 1.2, xi = 0.01, m = 0.6, Jz = 1.
inline constexpr double kLogXiLargeN = 7104.9269685003550310611064030811398460732076774011;

// Direct long-double evaluation of the curve formulas (no series branch).
inline long double beta_ld(long double m, long double jz = 1.0L) {
  return -std::log1p(-m * m) / (jz * m * m);
}
inline long double xi_ld(long double m) { return -std::atanh(m) - std::log1p(-m * m) / m; }
inline long double s_ld(long double m, long double k = 1.0L) {
  return -k * m * std::atanh(m) - 0.5L * k * std::log1p(-m * m);
}

// Bisection for the largest root of m - tanh(a m - xi) on (lo, hi), with a sign change assumed.
inline long double bisect_root(long double a, long double xi, long double lo, long double hi) {
  auto f = [&](long double m) { return m - std::tanh(a * m - xi); };
  long double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

// Each site contributes an independent factor 2 cosh(beta Jz m - xi), so
//   log Xi = -beta N Jz m^2 / 2 + N log(2 cosh(beta Jz m - xi)).
inline long double log_xi_closed(long double m, long double beta, long double xi, long double jz,
                                 std::int64_t n) {
  const long double t = beta * jz * m - xi;
  const long double at = std::fabs(t);
  return -0.5L * beta * n * jz * m * m + n * (at + std::log1p(std::exp(-2.0L * at)));
}

inline double central(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline std::mt19937_64 rng(std::uint64_t seed = 20261016) { return std::mt19937_64(seed); }

}  // namespace oracle
