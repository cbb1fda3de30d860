#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "mfising/cli.hpp"
#include "mfising/criticality.hpp"
#include "mfising/entropy_surface.hpp"
#include "mfising/finite_oracle.hpp"
#include "mfising/ideal_gas.hpp"
#include "mfising/self_consistent.hpp"

namespace mfising::cli {

namespace {

struct CheckList {
  Table table{{"check", "status", "detail"}, {}};
  bool all_pass = true;

  void add(const std::string& name, bool pass, const std::string& detail) {
    table.add_row({name, std::string(pass ? "PASS" : "FAIL"), detail});
    all_pass = all_pass && pass;
  }

  // Runs a check body; domain and numerical errors count as a failure of that check.
  void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    try {
      pass = body(detail);
    } catch (const DomainError& e) {
      detail = std::string("domain error: ") + e.what();
    } catch (const NumericalError& e) {
      detail = std::string("numerical error: ") + e.what();
    }
    add(name, pass, detail);
  }
};

std::string worst(const char* label, double v, double bound) {
  std::ostringstream os;
  os << label << "=" << format_double(v) << " bound=" << bound;
  return os.str();
}

// Random state with |2U/(Jz M)| in [0.01, 0.99] and |M| in [0.1, 5].
ThermoState random_state(std::mt19937_64& rng, const ModelParams& p) {
  std::uniform_real_distribution<double> mag(0.1, 5.0);
  std::uniform_real_distribution<double> ratio(0.01, 0.99);
  std::bernoulli_distribution coin(0.5);
  const double M = coin(rng) ? mag(rng) : -mag(rng);
  const double x = coin(rng) ? ratio(rng) : -ratio(rng);
  return {0.5 * x * p.jz() * M, M};
}

}  // namespace

CommandResult cmd_verify(const RunConfig& cfg) {
  const ModelParams& p = cfg.params;
  p.validate();
  if (p.N > kMaxEnumerationSites) {
    throw SizeError("verify: --n " + std::to_string(p.N) + " exceeds the enumeration limit of " +
                    std::to_string(kMaxEnumerationSites));
  }
  std::mt19937_64 rng(cfg.seed);
  std::vector<ThermoState> states;
  for (int i = 0; i < 1000; ++i) {
    states.push_back(random_state(rng, p));
  }

  CheckList checks;

  checks.run("hj_residual", [&](std::string& d) {
    double w = 0.0;
    for (double a : {0.0, 1.0, -3.0}) {
      for (const auto& s : states) {
        const double rhs = std::atanh(state_ratio(s, p));
        w = std::max(w, std::abs(hj_residual(s, p, {a})) / (1.0 + std::abs(rhs)));
      }
    }
    d = worst("max_scaled_residual", w, 1e-10);
    return w < 1e-10;
  });

  checks.run("gradient_finite_difference", [&](std::string& d) {
    double w = 0.0;
    for (const auto& s : states) {
      const EntropyGradient g = gradient(s, p);
      const double hu = 1e-6 * std::abs(s.U);
      const double hm = 1e-6 * std::abs(s.M);
      const double fu = (entropy({s.U + hu, s.M}, p) - entropy({s.U - hu, s.M}, p)) / (2 * hu);
      const double fm = (entropy({s.U, s.M + hm}, p) - entropy({s.U, s.M - hm}, p)) / (2 * hm);
      const double scale = std::hypot(g.dU, g.dM);
      w = std::max({w, std::abs(fu - g.dU) / scale, std::abs(fm - g.dM) / scale});
    }
    d = worst("max_relative_error", w, 1e-6);
    return w < 1e-6;
  });

  checks.run("curve_identity", [&](std::string& d) {
    double w = 0.0;
    for (double m : {0.01, 0.1, 0.3, 0.5, 0.8, 0.95}) {
      for (double sm : {m, -m}) {
        const double lhs = beta_of_m(sm, p) * p.jz() * sm - xi_of_m(sm, p);
        w = std::max(w, std::abs(lhs - std::atanh(sm)));
      }
    }
    d = worst("max_abs_error", w, 1e-10);
    return w < 1e-10;
  });

  checks.run("pullback_entropy", [&](std::string& d) {
    double w = 0.0;
    const double n = static_cast<double>(p.N);
    for (double m : {0.01, 0.1, 0.3, 0.5, 0.8, 0.95}) {
      for (double sm : {m, -m}) {
        const double lhs = entropy({n * u_of_m(sm, p), n * sm}, p);
        const double rhs = n * s_of_m(sm, p);
        w = std::max(w, std::abs(lhs - rhs) / std::abs(rhs));
      }
    }
    d = worst("max_relative_error", w, 1e-12);
    return w < 1e-12;
  });

  checks.run("pullback_gradient", [&](std::string& d) {
    double w = 0.0;
    const double n = static_cast<double>(p.N);
    for (double m : {0.01, 0.1, 0.3, 0.5, 0.8, 0.95}) {
      const EntropyGradient g = gradient({n * u_of_m(m, p), n * m}, p);
      w = std::max({w, std::abs(g.dU - p.k * beta_of_m(m, p)) / (p.k * beta_of_m(m, p)),
                    std::abs(g.dM - p.k * xi_of_m(m, p)) / (p.k * xi_of_m(m, p))});
    }
    d = worst("max_relative_error", w, 1e-10);
    return w < 1e-10;
  });

  checks.run("oracle_methods_agree", [&](std::string& d) {
    const ConjugateCoords c{beta_of_m(0.5, p), xi_of_m(0.5, p)};
    const double e = log_partition_enum(0.5, c, p);
    const double b = log_partition_binom(0.5, c, p);
    const double rel = std::abs(e - b) / std::abs(e);
    d = worst("relative_difference", rel, 1e-12);
    return rel < 1e-12;
  });

  checks.run("oracle_self_consistency", [&](std::string& d) {
    double w = 0.0;
    for (double m : {-0.5, 0.3, 0.5}) {
      const auto rep = check_self_consistency(m, {beta_of_m(m, p), xi_of_m(m, p)}, p);
      w = std::max({w, rep.M_relative_error, rep.U_relative_error});
    }
    d = worst("max_relative_error", w, 1e-5);
    return w < 1e-5;
  });

  checks.run("entropy_offset", [&](std::string& d) {
    const double expected = p.k * static_cast<double>(p.N) * std::log(2.0);
    double lo = INFINITY, hi = -INFINITY, w = 0.0;
    for (int i = 1; i <= 8; ++i) {
      const double m = 0.1 * i;
      const double off = check_entropy_offset(m, {beta_of_m(m, p), xi_of_m(m, p)}, p);
      lo = std::min(lo, off);
      hi = std::max(hi, off);
      w = std::max(w, std::abs(off - expected));
    }
    d = worst("max_abs_error_vs_kNlog2", w, 1e-6) + " " + worst("spread", hi - lo, 1e-8);
    return w < 1e-6 && hi - lo < 1e-8;
  });

  checks.run("solve_round_trip", [&](std::string& d) {
    double w = 0.0;
    for (double m : {-0.8, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.8}) {
      const RootSet rs = solve({beta_of_m(m, p), xi_of_m(m, p)}, p);
      double best = INFINITY;
      for (const auto& r : rs.roots) best = std::min(best, std::abs(r.m - m));
      w = std::max(w, best);
    }
    d = worst("max_root_distance", w, 1e-10);
    return w < 1e-10;
  });

  checks.run("zero_field_branch", [&](std::string& d) {
    const double bc = 1.0 / p.jz();
    const auto below = solve({0.99 * bc, 0.0}, p);
    const auto above = solve({1.2 * bc, 0.0}, p);
    const auto zf = zero_field_branch(0.5 * bc, 2.0 * bc, 31, p);
    bool ok = below.roots.size() == 1 && above.roots.size() == 3;
    for (const auto& z : zf) {
      if (z.beta * p.jz() <= 1.0) {
        ok = ok && z.m_plus == 0.0 && z.s_per_site == 0.0;
      } else {
        ok = ok && z.m_plus > 0.0 && z.lambda > p.k / p.jz();
      }
    }
    d = "roots_below=" + std::to_string(below.roots.size()) +
        " roots_above=" + std::to_string(above.roots.size());
    return ok;
  });

  checks.run("critical_exponents", [&](std::string& d) {
    const ExponentReport r = fit_exponents(p);
    d = "delta=" + format_double(r.delta.value) + " beta=" + format_double(r.beta.value) +
        " gamma=" + format_double(r.gamma.value) + " alpha=" + format_double(r.alpha.value);
    return r.all_within_tolerance();
  });

  checks.run("cusp_jacobian", [&](std::string& d) {
    const double j = jacobian_norm(1e-3, p);
    bool monotone = true;
    double prev = 0.0;
    for (int i = 0; i <= 30; ++i) {
      const double m = std::pow(10.0, -4.0 + 3.0 * i / 30.0);
      const double v = jacobian_norm(m, p);
      monotone = monotone && v > prev;
      prev = v;
    }
    const double expected = 1e-3 / p.jz();
    d = "jacobian_norm(1e-3)=" + format_double(j) +
        " monotone=" + (monotone ? std::string("true") : std::string("false"));
    return std::abs(j / expected - 1.0) < 0.05 && monotone;
  });

  checks.run("ideal_gas", [&](std::string& d) {
    std::uniform_real_distribution<double> uv(0.1, 10.0);
    double w = 0.0;
    for (int i = 0; i < 100; ++i) {
      const GasState g{uv(rng), uv(rng), 1.0, 0.0};
      w = std::max(w, std::abs(gas_hj_residual(g)));
    }
    d = worst("max_abs_residual", w, 1e-13);
    return w < 1e-13;
  });

  CommandResult res;
  res.table = std::move(checks.table);
  res.exit_code = checks.all_pass ? kExitOk : kExitFailure;
  return res;
}

CommandResult cmd_idealgas(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uv(0.1, 10.0);
  std::uniform_real_distribution<double> rr(0.5, 3.0);
  const int n = cfg.samples.value_or(100);

  double residual = 0.0, energy = 0.0, state = 0.0, virial = 0.0;
  for (int i = 0; i < n; ++i) {
    const GasState g{uv(rng), uv(rng), rr(rng), 0.0};
    residual = std::max(residual, std::abs(gas_hj_residual(g)));
    const GasEos e = gas_recover_eos(g);
    energy = std::max(energy, std::abs(e.energy_mismatch) / g.U);
    state = std::max(state, std::abs(e.state_mismatch) / (g.r * e.T));
    const GasGradient gr = gas_gradient(g);
    virial = std::max(virial, std::abs(gr.pU * g.U - 1.5 * gr.pV * g.V));
  }

  CheckList checks;
  checks.add("hj_residual", residual < 1e-13, worst("max_abs_residual", residual, 1e-13));
  checks.add("virial_relation", virial < 1e-13, worst("max_abs_virial", virial, 1e-13));
  checks.add("energy_U_eq_3rT_over_2", energy < 1e-14,
             worst("max_relative_mismatch", energy, 1e-14));
  checks.add("state_pV_eq_rT", state < 1e-14, worst("max_relative_mismatch", state, 1e-14));

  CommandResult res;
  res.table = std::move(checks.table);
  res.exit_code = checks.all_pass ? kExitOk : kExitFailure;
  return res;
}

}  // namespace mfising::cli
