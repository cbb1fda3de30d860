#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mfising/cli.hpp"
#include "mfising/criticality.hpp"
#include "mfising/entropy_surface.hpp"
#include "mfising/self_consistent.hpp"
#include "usage_error.hpp"

namespace mfising::cli {

namespace {

std::string stability_name(Stability s) { return s == Stability::Stable ? "stable" : "unstable"; }

std::string exponent_detail(const ExponentReport& r, const ExponentFit& f) {
  std::ostringstream os;
  if (&f == &r.gamma) {
    os << "chi_sign=" << (r.chi_sign > 0 ? "+1" : r.chi_sign < 0 ? "-1" : "mixed");
  } else if (&f == &r.alpha) {
    os << "max_abs_C_over_k_minus_1=" << format_double(r.alpha_max_deviation)
       << " flag=" << (r.alpha_flag ? "true" : "false");
  }
  return os.str();
}

}  // namespace

CommandResult cmd_curve(const RunConfig& cfg) {
  cfg.params.validate();
  const auto samples =
      sample_curve(cfg.m_min.value_or(-0.95), cfg.m_max.value_or(0.95), cfg.samples.value_or(381),
                   cfg.spacing.value_or(Spacing::Linear), cfg.params);
  CommandResult res;
  res.table.columns = {"m", "beta", "xi", "T", "h", "u", "s", "chi", "c"};
  for (const auto& s : samples) {
    res.table.add_row({s.m, s.beta, s.xi, s.T, s.h, s.u, s.s,
                       s.chi ? Cell{*s.chi} : Cell{std::string("divergent")}, s.c});
  }
  return res;
}

CommandResult cmd_surface(const RunConfig& cfg) {
  cfg.params.validate();
  const int n = cfg.samples.value_or(81);
  const auto cells = surface_grid({cfg.u_min, cfg.u_max}, {cfg.mtot_min, cfg.mtot_max}, n, n,
                                  cfg.params, {cfg.a});
  CommandResult res;
  res.table.columns = {"U", "M", "S", "valid"};
  for (const auto& c : cells) {
    res.table.add_row({c.U, c.M, c.S ? Cell{*c.S} : Cell{Blank{}},
                       std::int64_t{c.S.has_value() ? 1 : 0}});
  }
  return res;
}

CommandResult cmd_solve(const RunConfig& cfg) {
  cfg.params.validate();
  if (!cfg.beta) {
    throw UsageError("solve requires --beta");
  }
  const RootSet rs = solve({*cfg.beta, cfg.xi}, cfg.params);
  CommandResult res;
  res.table.columns = {"m", "stability", "massieu_per_site", "selected"};
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Root& r = rs.roots[i];
    res.table.add_row({r.m, stability_name(r.stability), r.massieu_per_site,
                       std::int64_t{i == rs.selected ? 1 : 0}});
  }
  return res;
}

CommandResult cmd_exponents(const RunConfig& cfg) {
  cfg.params.validate();
  FitWindow w;
  w.m_lo = cfg.m_min.value_or(w.m_lo);
  w.m_hi = cfg.m_max.value_or(w.m_hi);
  w.n_points = cfg.samples.value_or(w.n_points);
  const ExponentReport r = fit_exponents(cfg.params, {w, w, w, w});

  CommandResult res;
  res.table.columns = {"exponent", "value",    "target", "tolerance", "pass", "slope",
                       "residual", "m_lo",     "m_hi",   "n_points",  "detail"};
  for (const ExponentFit* f : {&r.delta, &r.beta, &r.gamma, &r.alpha}) {
    const bool pass = f->within_tolerance() && (f != &r.alpha || r.alpha_flag);
    res.table.add_row({f->name, f->value, f->target, f->tolerance, std::int64_t{pass ? 1 : 0},
                       f->slope, f->residual, f->window.m_lo, f->window.m_hi,
                       std::int64_t{f->window.n_points}, exponent_detail(r, *f)});
  }
  return res;
}

CommandResult cmd_zero_field(const RunConfig& cfg) {
  cfg.params.validate();
  const auto pts = zero_field_branch(cfg.beta_min, cfg.beta_max, cfg.samples.value_or(151),
                                     cfg.params);
  CommandResult res;
  res.table.columns = {"beta", "xi", "m_plus", "s", "lambda"};
  for (const auto& z : pts) {
    res.table.add_row({z.beta, 0.0, z.m_plus, z.s_per_site, z.lambda});
  }
  return res;
}

namespace {

void add_options(CLI::App* sub, RunConfig& cfg, std::string& format, std::string& spacing,
                 double& jz) {
  sub->add_option("--jz", jz, "coupling times coordination number, J*z")
      ->check(CLI::PositiveNumber);
  sub->add_option("--k", cfg.params.k, "Boltzmann constant")->check(CLI::PositiveNumber);
  sub->add_option("--n", cfg.params.N, "site count for extensive/oracle quantities")
      ->check(CLI::PositiveNumber);
  sub->add_option("--m-min", cfg.m_min, "lower end of the order-parameter range");
  sub->add_option("--m-max", cfg.m_max, "upper end of the order-parameter range");
  sub->add_option("--samples", cfg.samples, "number of samples")->check(CLI::Range(2, 10'000'000));
  sub->add_option("--spacing", spacing, "linear or log")
      ->check(CLI::IsMember({"linear", "log"}));
  sub->add_option("--beta", cfg.beta, "inverse temperature")->check(CLI::PositiveNumber);
  sub->add_option("--xi", cfg.xi, "field parameter xi = beta h");
  sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", cfg.output, "output file (default stdout)");
  sub->add_option("--seed", cfg.seed, "seed for randomized verification grids");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean-field Ising entropy as a Hamilton-Jacobi principal function"};
  app.name("mfising");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::string spacing;
  double jz = 1.0;

  struct Entry {
    const char* name;
    const char* help;
    CommandResult (*fn)(const RunConfig&);
    CLI::App* app = nullptr;
  };
  std::vector<Entry> entries = {
      {"curve", "solution curve samples m -> (beta, xi, T, h, u, s, chi, c)", &cmd_curve},
      {"surface", "entropy S(U, M) on a grid with masked cells", &cmd_surface},
      {"solve", "roots of the self-consistent equation at (beta, xi)", &cmd_solve},
      {"exponents", "critical exponents fitted along the curve", &cmd_exponents},
      {"zero-field", "zero-field branch m = tanh(beta Jz m)", &cmd_zero_field},
      {"verify", "run every invariant check", &cmd_verify},
      {"idealgas", "ideal-gas Hamilton-Jacobi residual report", &cmd_idealgas},
  };
  for (auto& e : entries) {
    e.app = app.add_subcommand(e.name, e.help);
    add_options(e.app, cfg, format, spacing, jz);
  }
  auto* surface = entries[1].app;
  surface->add_option("--u-min", cfg.u_min, "lower U bound");
  surface->add_option("--u-max", cfg.u_max, "upper U bound");
  surface->add_option("--mtot-min", cfg.mtot_min, "lower total-magnetization bound");
  surface->add_option("--mtot-max", cfg.mtot_max, "upper total-magnetization bound");
  surface->add_option("--a", cfg.a, "coefficient of the homogeneous term a M^2/U");
  auto* zero = entries[4].app;
  zero->add_option("--beta-min", cfg.beta_min, "lowest beta")->check(CLI::PositiveNumber);
  zero->add_option("--beta-max", cfg.beta_max, "highest beta")->check(CLI::PositiveNumber);
  entries[2].app->get_option("--beta")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  cfg.params.J = jz;
  cfg.params.z = 1;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (!spacing.empty()) {
    cfg.spacing = spacing == "log" ? Spacing::Log : Spacing::Linear;
  }

  for (const auto& e : entries) {
    if (!e.app->parsed()) {
      continue;
    }
    try {
      const CommandResult res = e.fn(cfg);
      if (cfg.output.empty()) {
        write_table(res.table, cfg.format, out);
      } else {
        std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
        if (!file) {
          err << "error: cannot open " << cfg.output << " for writing\n";
          return kExitFailure;
        }
        write_table(res.table, cfg.format, file);
      }
      return res.exit_code;
    } catch (const UsageError& ex) {
      err << "usage error: " << ex.what() << '\n';
      return kExitUsage;
    } catch (const SizeError& ex) {
      err << "size error: " << ex.what() << '\n';
      return kExitUsage;
    } catch (const DomainError& ex) {
      err << "domain error: " << ex.what() << '\n';
      return kExitFailure;
    } catch (const NumericalError& ex) {
      err << "numerical error: " << ex.what() << '\n';
      return kExitFailure;
    }
  }
  return kExitUsage;
}

}  // namespace mfising::cli
