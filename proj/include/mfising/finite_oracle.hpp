#pragma once

#include <cstdint>

#include "mfising/params.hpp"

namespace mfising {

// Exact finite-N grand canonical ensemble of the mean-field Hamiltonian
//   H = N Jz m^2 / 2 - Jz m sum_i S_i,
//   Xi = sum_config exp(-beta H - xi sum_i S_i).
// m is an external parameter of H: derivatives of Psi = k log Xi are taken
// at fixed m, and M = N m is imposed afterwards.

inline constexpr std::int64_t kMaxEnumerationSites = 20;
inline constexpr std::int64_t kMaxBinomialSites = 1'000'000;

enum class OracleMethod { Enumeration, Binomial };

/// log Xi by summing all 2^N spin configurations; N <= 20.
double log_partition_enum(double m, const ConjugateCoords& c, const ModelParams& p);

/// log Xi by summing over total spin with binomial multiplicities; N <= 10^6.
double log_partition_binom(double m, const ConjugateCoords& c, const ModelParams& p);

double log_partition(double m, const ConjugateCoords& c, const ModelParams& p,
                     OracleMethod method);

struct OracleResult {
  double log_Xi = 0.0;
  /// k log Xi
  double Psi = 0.0;
  /// -(1/k) dPsi/dxi, central difference
  double M_numeric = 0.0;
  /// -(1/k) dPsi/dbeta, central difference
  double U_numeric = 0.0;
  /// Psi + k beta U + k xi M
  double S_entropy1 = 0.0;
};

/// Evaluate Psi and its numeric derivatives. A plain central difference with
/// the given step is replaced by a Richardson estimate (steps h, h/2) when it
/// disagrees with the closed-form derivative by more than 1e-6 relative.
OracleResult evaluate_oracle(double m, const ConjugateCoords& c, const ModelParams& p,
                             OracleMethod method = OracleMethod::Enumeration,
                             double step = 1e-6);

struct ConsistencyReport {
  OracleResult oracle;
  double M_expected = 0.0;
  double U_expected = 0.0;
  double M_relative_error = 0.0;
  double U_relative_error = 0.0;
  double tolerance = 1e-5;

  bool consistent() const { return M_relative_error < tolerance && U_relative_error < tolerance; }
};

/// Compare oracle M and U against M = N m and U = -Jz N m^2 / 2.
ConsistencyReport check_self_consistency(double m, const ConjugateCoords& c,
                                         const ModelParams& p, double step = 1e-6,
                                         OracleMethod method = OracleMethod::Enumeration);

/// S_entropy1 - N s(m). Constant along the solution curve and equal to k N log 2.
double check_entropy_offset(double m, const ConjugateCoords& c, const ModelParams& p,
                            OracleMethod method = OracleMethod::Enumeration);

}  // namespace mfising
