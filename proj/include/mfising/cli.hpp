#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mfising/curve.hpp"
#include "mfising/params.hpp"
#include "mfising/table.hpp"

namespace mfising::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Flags shared by every subcommand plus the subcommand-specific ranges.
/// Unset optionals take the subcommand's default.
struct RunConfig {
  ModelParams params;  // k = J = z = 1, N = 12
  OutputFormat format = OutputFormat::Csv;
  std::string output;  // empty: stdout
  std::uint64_t seed = 7;

  std::optional<double> m_min;
  std::optional<double> m_max;
  std::optional<int> samples;
  std::optional<Spacing> spacing;
  std::optional<double> beta;
  double xi = 0.0;

  // surface
  double u_min = -1.0;
  double u_max = 1.0;
  double mtot_min = -2.0;
  double mtot_max = 2.0;
  double a = 0.0;

  // zero-field
  double beta_min = 0.5;
  double beta_max = 2.0;
};

/// Result of one subcommand: the emitted table and the process exit code.
struct CommandResult {
  Table table;
  int exit_code = kExitOk;
};

CommandResult cmd_curve(const RunConfig& cfg);
CommandResult cmd_surface(const RunConfig& cfg);
CommandResult cmd_solve(const RunConfig& cfg);
CommandResult cmd_exponents(const RunConfig& cfg);
CommandResult cmd_zero_field(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_idealgas(const RunConfig& cfg);

/// Parse argv-style arguments (without the program name), run the selected
/// subcommand and write its table to cfg.output or `out`. Returns 0 on
/// success, 1 on domain errors or failed checks, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfising::cli
