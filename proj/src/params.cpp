#include "mfising/params.hpp"

#include <cmath>
#include <string>

namespace mfising {

void ModelParams::validate() const {
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw DomainError("coupling J must be positive, got " + std::to_string(J));
  }
  if (z < 1) {
    throw DomainError("coordination number z must be >= 1, got " + std::to_string(z));
  }
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("Boltzmann constant k must be positive, got " + std::to_string(k));
  }
  if (N < 1) {
    throw DomainError("site count N must be >= 1, got " + std::to_string(N));
  }
}

FieldCoords to_field_coords(const ConjugateCoords& c, const ModelParams& p) {
  if (!(c.beta > 0.0)) {
    throw DomainError("beta must be positive, got " + std::to_string(c.beta));
  }
  return {1.0 / (p.k * c.beta), c.xi / c.beta};
}

ConjugateCoords from_field_coords(const FieldCoords& f, const ModelParams& p) {
  if (!(f.T > 0.0)) {
    throw DomainError("temperature must be positive, got " + std::to_string(f.T));
  }
  const double beta = 1.0 / (p.k * f.T);
  return {beta, beta * f.h};
}

}  // namespace mfising
