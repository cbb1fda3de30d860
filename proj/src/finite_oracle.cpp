#include "mfising/finite_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "mfising/curve.hpp"

namespace mfising {

namespace {

void require_inputs(double m, const ConjugateCoords& c, const ModelParams& p, const char* what) {
  p.validate();
  if (!(std::abs(m) < 1.0)) {
    throw DomainError(std::string(what) + ": need |m| < 1, got " + std::to_string(m));
  }
  if (!std::isfinite(c.beta) || !std::isfinite(c.xi)) {
    throw DomainError(std::string(what) + ": beta and xi must be finite");
  }
}

// Configuration-independent part of the exponent, -beta N Jz m^2 / 2.
double constant_exponent(double m, const ConjugateCoords& c, const ModelParams& p) {
  return -0.5 * c.beta * static_cast<double>(p.N) * p.jz() * m * m;
}

// Coefficient of sum_i S_i in the exponent.
double spin_field(double m, const ConjugateCoords& c, const ModelParams& p) {
  return c.beta * p.jz() * m - c.xi;
}

// Fixed-order pairwise sum of exp(field * (N - 2 popcount(i)) - shift) over [lo, hi).
double pairwise_sum(std::uint64_t lo, std::uint64_t hi, double field, int n, double shift) {
  if (hi - lo <= 64) {
    double acc = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const int spin_sum = n - 2 * std::popcount(i);
      acc += std::exp(field * spin_sum - shift);
    }
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(lo, mid, field, n, shift) + pairwise_sum(mid, hi, field, n, shift);
}

double dpsi_dxi_exact(double m, const ConjugateCoords& c, const ModelParams& p) {
  return -p.k * static_cast<double>(p.N) * std::tanh(spin_field(m, c, p));
}

double dpsi_dbeta_exact(double m, const ConjugateCoords& c, const ModelParams& p) {
  const double n = static_cast<double>(p.N);
  return -p.k * (0.5 * n * p.jz() * m * m - p.jz() * m * n * std::tanh(spin_field(m, c, p)));
}

double central(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double derivative(const std::function<double(double)>& f, double x, double h, double exact) {
  const double plain = central(f, x, h);
  if (std::abs(plain - exact) <= 1e-6 * std::max(1.0, std::abs(exact))) {
    return plain;
  }
  return (4.0 * central(f, x, 0.5 * h) - plain) / 3.0;
}

}  // namespace

double log_partition_enum(double m, const ConjugateCoords& c, const ModelParams& p) {
  require_inputs(m, c, p, "log_partition_enum");
  if (p.N > kMaxEnumerationSites) {
    throw SizeError("log_partition_enum: N = " + std::to_string(p.N) +
                    " exceeds the enumeration limit of " + std::to_string(kMaxEnumerationSites));
  }
  const int n = static_cast<int>(p.N);
  const double field = spin_field(m, c, p);
  const double shift = std::abs(field) * n;
  const double sum = pairwise_sum(0, std::uint64_t{1} << n, field, n, shift);
  return constant_exponent(m, c, p) + shift + std::log(sum);
}

double log_partition_binom(double m, const ConjugateCoords& c, const ModelParams& p) {
  require_inputs(m, c, p, "log_partition_binom");
  if (p.N > kMaxBinomialSites) {
    throw SizeError("log_partition_binom: N = " + std::to_string(p.N) +
                    " exceeds the limit of " + std::to_string(kMaxBinomialSites));
  }
  const std::int64_t n = p.N;
  const double nd = static_cast<double>(n);
  const double field = spin_field(m, c, p);
  const double log_n_fact = std::lgamma(nd + 1.0);

  // j down spins: multiplicity C(N, j), total spin N - 2j.
  std::vector<double> terms(static_cast<std::size_t>(n + 1));
  double top = -INFINITY;
  for (std::int64_t j = 0; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    const double t = log_n_fact - std::lgamma(jd + 1.0) - std::lgamma(nd - jd + 1.0) +
                     field * (nd - 2.0 * jd);
    terms[static_cast<std::size_t>(j)] = t;
    top = std::max(top, t);
  }
  double sum = 0.0;
  for (double t : terms) {
    sum += std::exp(t - top);
  }
  return constant_exponent(m, c, p) + top + std::log(sum);
}

double log_partition(double m, const ConjugateCoords& c, const ModelParams& p,
                     OracleMethod method) {
  return method == OracleMethod::Enumeration ? log_partition_enum(m, c, p)
                                             : log_partition_binom(m, c, p);
}

OracleResult evaluate_oracle(double m, const ConjugateCoords& c, const ModelParams& p,
                             OracleMethod method, double step) {
  if (!(step > 0.0)) {
    throw DomainError("evaluate_oracle: step must be positive");
  }
  OracleResult r;
  r.log_Xi = log_partition(m, c, p, method);
  r.Psi = p.k * r.log_Xi;

  auto psi_of_xi = [&](double xi) { return p.k * log_partition(m, {c.beta, xi}, p, method); };
  auto psi_of_beta = [&](double beta) {
    return p.k * log_partition(m, {beta, c.xi}, p, method);
  };
  const double dpsi_dxi = derivative(psi_of_xi, c.xi, step, dpsi_dxi_exact(m, c, p));
  const double dpsi_dbeta = derivative(psi_of_beta, c.beta, step, dpsi_dbeta_exact(m, c, p));

  r.M_numeric = -dpsi_dxi / p.k;
  r.U_numeric = -dpsi_dbeta / p.k;
  r.S_entropy1 = r.Psi + p.k * c.beta * r.U_numeric + p.k * c.xi * r.M_numeric;
  return r;
}

ConsistencyReport check_self_consistency(double m, const ConjugateCoords& c,
                                         const ModelParams& p, double step,
                                         OracleMethod method) {
  ConsistencyReport rep;
  rep.oracle = evaluate_oracle(m, c, p, method, step);
  const double n = static_cast<double>(p.N);
  rep.M_expected = n * m;
  rep.U_expected = -0.5 * p.jz() * n * m * m;
  // relative for |want| >= 1, absolute below
  auto rel = [](double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1.0);
  };
  rep.M_relative_error = rel(rep.oracle.M_numeric, rep.M_expected);
  rep.U_relative_error = rel(rep.oracle.U_numeric, rep.U_expected);
  return rep;
}

double check_entropy_offset(double m, const ConjugateCoords& c, const ModelParams& p,
                            OracleMethod method) {
  const OracleResult r = evaluate_oracle(m, c, p, method);
  return r.S_entropy1 - static_cast<double>(p.N) * s_of_m(m, p);
}

}  // namespace mfising
