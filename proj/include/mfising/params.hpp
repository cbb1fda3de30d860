#pragma once

#include <cstdint>

#include "mfising/errors.hpp"

namespace mfising {

/// Mean-field Ising parameters. Only the product J*z enters the mean-field
/// formulas; the site count is used by the finite-N oracle and for
/// extensive quantities.
struct ModelParams {
  double J = 1.0;
  int z = 1;
  double k = 1.0;
  std::int64_t N = 12;

  double jz() const { return J * static_cast<double>(z); }

  /// Throws DomainError unless J > 0, z >= 1, k > 0 and N >= 1.
  void validate() const;
};

/// Conjugate momenta of (U, M): (dS/dU, dS/dM) = (k*beta, k*xi).
struct ConjugateCoords {
  double beta = 1.0;
  double xi = 0.0;
};

/// Temperature and magnetic field, T = 1/(k beta) and h = xi/beta.
struct FieldCoords {
  double T = 1.0;
  double h = 0.0;
};

FieldCoords to_field_coords(const ConjugateCoords& c, const ModelParams& p);
ConjugateCoords from_field_coords(const FieldCoords& f, const ModelParams& p);

}  // namespace mfising
