#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "mfising/curve.hpp"
#include "mfising/self_consistent.hpp"
#include "oracles.hpp"

using namespace mfising;

namespace {

const ModelParams unit{};

void check_roots_valid(const RootSet& rs, const ConjugateCoords& c, const ModelParams& p) {
  REQUIRE(!rs.roots.empty());
  REQUIRE(rs.roots.size() <= 3);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const double m = rs.roots[i].m;
    CHECK(std::abs(m - std::tanh(c.beta * p.jz() * m - c.xi)) < 1e-12);
    if (i > 0) CHECK(rs.roots[i - 1].m < m);
  }
  const Root& eq = rs.equilibrium();
  for (const auto& r : rs.roots) {
    if (r.stability == Stability::Stable) {
      CHECK(eq.massieu_per_site >= r.massieu_per_site - 1e-12);
    }
  }
}

}  // namespace

TEST_CASE("single paramagnetic root below the critical coupling") {
  const RootSet rs = solve({0.5, 0.0}, unit);
  REQUIRE(rs.roots.size() == 1);
  CHECK(std::abs(rs.roots[0].m) < 1e-14);
  CHECK(rs.roots[0].stability == Stability::Stable);
  CHECK(rs.selected == 0);
}

TEST_CASE("three roots in the ordered phase at zero field") {
  const ConjugateCoords c{1.2, 0.0};
  const RootSet rs = solve(c, unit);
  REQUIRE(rs.roots.size() == 3);
  const double m_star = static_cast<double>(oracle::bisect_root(1.2L, 0.0L, 0.1L, 1.0L));
  CHECK(m_star == doctest::Approx(oracle::kMStar12).epsilon(1e-15));
  CHECK(rs.roots[2].m == doctest::Approx(m_star).epsilon(1e-12));
  CHECK(rs.roots[0].m == doctest::Approx(-m_star).epsilon(1e-12));
  CHECK(rs.roots[1].m == 0.0);
  CHECK(rs.roots[0].stability == Stability::Stable);
  CHECK(rs.roots[1].stability == Stability::Unstable);
  CHECK(rs.roots[2].stability == Stability::Stable);
  // degenerate pair: tie goes to +m*
  CHECK(rs.selected == 2);
  check_roots_valid(rs, c, unit);
}

TEST_CASE("curve points are roots") {
  for (double m : {-0.8, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.8}) {
    const ConjugateCoords c{beta_of_m(m, unit), xi_of_m(m, unit)};
    const RootSet rs = solve(c, unit);
    check_roots_valid(rs, c, unit);
    const auto best = std::min_element(rs.roots.begin(), rs.roots.end(), [&](auto& a, auto& b) {
      return std::abs(a.m - m) < std::abs(b.m - m);
    });
    CHECK(std::abs(best->m - m) < 1e-10);
  }
  const RootSet half = solve({oracle::kBetaHalf, oracle::kXiHalf}, unit);
  bool hit = false;
  for (const auto& r : half.roots) hit = hit || std::abs(r.m - 0.5) < 1e-12;
  CHECK(hit);
}

TEST_CASE("field selects the aligned root") {
  const ConjugateCoords c{1.5, 0.05};
  const RootSet rs = solve(c, unit);
  check_roots_valid(rs, c, unit);
  REQUIRE(rs.roots.size() == 3);
  // the weight exp(-xi sum S) makes xi > 0 favour m < 0
  CHECK(rs.equilibrium().m < 0.0);
  const RootSet mirror = solve({1.5, -0.05}, unit);
  CHECK(mirror.equilibrium().m > 0.0);
  for (const auto& r : rs.roots) {
    CHECK(r.massieu_per_site <= rs.equilibrium().massieu_per_site);
  }
}

TEST_CASE("root count transitions along zero field") {
  for (double b : {0.1, 0.5, 0.9, 0.999, 1.0}) {
    CHECK(solve({b, 0.0}, unit).roots.size() == 1);
  }
  for (double b : {1.0 + 2e-6, 1.0001, 1.01, 1.2, 3.0, 20.0}) {
    CHECK(solve({b, 0.0}, unit).roots.size() == 3);
  }
}

TEST_CASE("roots mirror under xi -> -xi") {
  auto gen = oracle::rng(17);
  std::uniform_real_distribution<double> b(0.2, 4.0), x(-1.5, 1.5);
  for (int i = 0; i < 300; ++i) {
    const ConjugateCoords c{b(gen), x(gen)};
    const RootSet a = solve(c, unit);
    const RootSet m = solve({c.beta, -c.xi}, unit);
    check_roots_valid(a, c, unit);
    REQUIRE(a.roots.size() == m.roots.size());
    const std::size_t n = a.roots.size();
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(a.roots[k].m == doctest::Approx(-m.roots[n - 1 - k].m).epsilon(1e-12));
    }
  }
}

TEST_CASE("stable roots attract under fixed-point iteration") {
  auto gen = oracle::rng(23);
  std::uniform_real_distribution<double> b(0.2, 4.0), x(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const ConjugateCoords c{b(gen), x(gen)};
    for (const auto& r : solve(c, unit).roots) {
      if (r.stability != Stability::Stable) continue;
      // skip marginal points where ten steps cannot contract a 1e-3 offset
      if (map_derivative(r.m, c, unit) > 0.45) continue;
      for (double off : {-1e-3, 1e-3}) {
        double m = std::clamp(r.m + off, -1.0, 1.0);
        for (int it = 0; it < 10; ++it) m = std::tanh(c.beta * m - c.xi);
        CHECK(std::abs(m - r.m) < 1e-6);
      }
    }
  }
}

TEST_CASE("solve rejects non-positive beta") {
  CHECK_THROWS_AS(solve({0.0, 0.0}, unit), DomainError);
  CHECK_THROWS_AS(solve({-1.0, 0.2}, unit), DomainError);
}

TEST_CASE("large beta keeps saturated roots inside (-1, 1)") {
  const RootSet rs = solve({200.0, 0.0}, unit);
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.roots.front().m > -1.0);
  CHECK(rs.roots.back().m < 1.0);
}

TEST_CASE("zero-field branch") {
  const auto pts = zero_field_branch(0.5, 2.0, 151, unit);
  REQUIRE(pts.size() == 151);
  for (const auto& z : pts) {
    CHECK(z.lambda == doctest::Approx(z.beta));
    if (z.beta <= 1.0) {
      CHECK(z.m_plus == 0.0);
      CHECK(z.s_per_site == 0.0);
    } else {
      CHECK(z.m_plus > 0.0);
      CHECK(z.lambda > 1.0);
      CHECK(z.s_per_site == doctest::Approx(s_of_m(z.m_plus, unit)));
      CHECK(z.s_per_site < 0.0);
    }
  }
  CHECK(pts[50].beta == 1.0);

  const auto near = zero_field_branch(1.0001, 1.2, 2, unit);
  CHECK(near[0].m_plus < 0.02);
  CHECK(near[0].m_plus == doctest::Approx(oracle::kMStar10001).epsilon(1e-10));
  CHECK(near[1].m_plus == doctest::Approx(oracle::kMStar12).epsilon(1e-12));
  CHECK(near[1].lambda == doctest::Approx(1.2));
  // m* ~ sqrt(3 t) close to the threshold
  CHECK(near[0].m_plus == doctest::Approx(std::sqrt(3.0 * 1e-4)).epsilon(1e-3));

  CHECK_THROWS_AS(zero_field_branch(2.0, 1.0, 5, unit), DomainError);
  CHECK_THROWS_AS(zero_field_branch(0.0, 1.0, 5, unit), DomainError);
}
