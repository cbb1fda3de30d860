#include <cmath>

#include "doctest.h"
#include "mfising/curve.hpp"
#include "mfising/finite_oracle.hpp"
#include "oracles.hpp"

using namespace mfising;

namespace {

ModelParams with_n(std::int64_t n) {
  ModelParams p;
  p.N = n;
  return p;
}

}  // namespace

TEST_CASE("trivial partition functions") {
  CHECK(log_partition_enum(0.3, {0.0, 0.0}, with_n(1)) == doctest::Approx(std::log(2.0)));
  CHECK(log_partition_binom(0.3, {0.0, 0.0}, with_n(1)) == doctest::Approx(std::log(2.0)));
  CHECK(log_partition_enum(0.0, {1.0, 0.0}, with_n(2)) == doctest::Approx(std::log(4.0)));
  const ConjugateCoords c{0.7, -0.2};
  CHECK(log_partition_enum(0.4, c, with_n(1)) == log_partition_binom(0.4, c, with_n(1)));
}

TEST_CASE("enumeration matches the separable closed form") {
  const ModelParams p = with_n(12);
  const ConjugateCoords c{oracle::kBetaHalf, oracle::kXiHalf};
  const double closed = static_cast<double>(oracle::log_xi_closed(0.5L, c.beta, c.xi, 1.0L, 12));
  const double e = log_partition_enum(0.5, c, p);
  const double b = log_partition_binom(0.5, c, p);
  CHECK(std::abs(e - closed) <= 1e-12 * std::abs(closed));
  CHECK(std::abs(b - e) <= 1e-12 * std::abs(e));
}

TEST_CASE("enumeration and binomial sums agree on random parameters") {
  auto gen = oracle::rng(31);
  std::uniform_real_distribution<double> b(0.1, 2.0), x(-1.0, 1.0), m(-0.9, 0.9);
  std::uniform_int_distribution<int> n(1, 16);
  for (int i = 0; i < 60; ++i) {
    ModelParams p = with_n(n(gen));
    p.J = 0.5 + 0.1 * (i % 10);
    const ConjugateCoords c{b(gen), x(gen)};
    const double mm = m(gen);
    const double e = log_partition_enum(mm, c, p);
    const double bi = log_partition_binom(mm, c, p);
    CHECK(std::abs(e - bi) <= 1e-12 * std::max(1.0, std::abs(e)));
  }
}

TEST_CASE("log partition function is extensive") {
  const ConjugateCoords c{1.3, 0.2};
  for (int n : {1, 3, 5, 8}) {
    const double one = log_partition_enum(0.4, c, with_n(n));
    const double two = log_partition_enum(0.4, c, with_n(2 * n));
    CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-13));
  }
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(log_partition_enum(0.1, {1.0, 0.0}, with_n(21)), SizeError);
  CHECK_NOTHROW(log_partition_enum(0.1, {1.0, 0.0}, with_n(20)));
  CHECK_THROWS_AS(log_partition_binom(0.1, {1.0, 0.0}, with_n(1'000'001)), SizeError);
  CHECK_THROWS_AS(log_partition_enum(1.0, {1.0, 0.0}, with_n(2)), DomainError);
}

TEST_CASE("binomial sum stays finite for large N") {
  const ModelParams p = with_n(10'000);
  const double v = log_partition_binom(0.6, {1.2, 0.01}, p);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(oracle::kLogXiLargeN).epsilon(1e-12));
  const double closed = static_cast<double>(oracle::log_xi_closed(0.6L, 1.2L, 0.01L, 1.0L, 10'000));
  CHECK(v == doctest::Approx(closed).epsilon(1e-12));
  CHECK(std::isfinite(log_partition_binom(0.9, {50.0, -3.0}, with_n(1'000'000))));
}

TEST_CASE("numeric dPsi/dxi tracks the analytic magnetization everywhere") {
  auto gen = oracle::rng(37);
  std::uniform_real_distribution<double> b(0.1, 2.0), x(-1.0, 1.0), m(-0.9, 0.9);
  const ModelParams p = with_n(10);
  for (int i = 0; i < 50; ++i) {
    const ConjugateCoords c{b(gen), x(gen)};
    const double mm = m(gen);
    const OracleResult r = evaluate_oracle(mm, c, p);
    const double analytic = 10.0 * std::tanh(c.beta * mm - c.xi);
    CHECK(std::abs(r.M_numeric - analytic) <= 1e-6 * std::max(1.0, std::abs(analytic)));
  }
}

TEST_CASE("self-consistency on the curve") {
  const ModelParams p = with_n(12);
  const auto rep = check_self_consistency(0.5, {oracle::kBetaHalf, oracle::kXiHalf}, p);
  CHECK(rep.oracle.M_numeric == doctest::Approx(6.0).epsilon(1e-4 / 6.0));
  CHECK(rep.oracle.U_numeric == doctest::Approx(-1.5).epsilon(1e-4 / 1.5));
  CHECK(std::abs(rep.oracle.M_numeric - 6.0) < 1e-4);
  CHECK(std::abs(rep.oracle.U_numeric + 1.5) < 1e-4);
  CHECK(rep.consistent());

  const auto neg = check_self_consistency(-0.5, {oracle::kBetaHalf, -oracle::kXiHalf}, p);
  CHECK(std::abs(neg.oracle.M_numeric + 6.0) < 1e-4);
  CHECK(neg.consistent());

  const auto off = check_self_consistency(0.5, {1.2, 0.5}, p);
  CHECK_FALSE(off.consistent());
  CHECK(off.M_relative_error > 1e-3);

  CHECK_THROWS_AS(check_self_consistency(0.5, {1.0, 0.0}, with_n(25)), SizeError);
}

TEST_CASE("entropy offset is k N log 2 along the curve") {
  const ModelParams p = with_n(12);
  const double at_half = check_entropy_offset(0.5, {oracle::kBetaHalf, oracle::kXiHalf}, p);
  CHECK(std::abs(at_half - oracle::kTwelveLog2) < 1e-6);

  // analytic reduction: S_entropy1 = k N (log 2 cosh(theta) - m theta), theta = atanh m
  const double theta = std::atanh(0.5);
  const double reduced = 12.0 * (std::log(2.0 * std::cosh(theta)) - 0.5 * theta);
  const OracleResult r = evaluate_oracle(0.5, {oracle::kBetaHalf, oracle::kXiHalf}, p);
  CHECK(r.S_entropy1 == doctest::Approx(reduced).epsilon(1e-9));

  for (int i = 1; i <= 8; ++i) {
    const double m = 0.1 * i;
    const double off = check_entropy_offset(m, {beta_of_m(m, p), xi_of_m(m, p)}, p);
    CHECK(std::abs(off - at_half) < 1e-8);
  }
  const ModelParams one = with_n(1);
  CHECK(check_entropy_offset(0.5, {oracle::kBetaHalf, oracle::kXiHalf}, one) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-8));
  ModelParams k2 = with_n(5);
  k2.k = 2.0;
  CHECK(check_entropy_offset(0.3, {beta_of_m(0.3, k2), xi_of_m(0.3, k2)}, k2) ==
        doctest::Approx(2.0 * 5.0 * std::log(2.0)).epsilon(1e-8));
}
