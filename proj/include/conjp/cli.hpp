#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "conjp/geometry.hpp"

namespace conjp {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,          // success / EXTENDS
  kExitFailure = 1,     // error, invalid config, or a failed verify check
  kExitNotExtends = 2,
  kExitInconclusive = 3,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> domain_path;   // default: annulus 0.5 < |z| < 1
  std::optional<std::string> phi;           // expression or registry call
  std::optional<std::string> phi_samples;   // CSV file
  std::size_t nodes = 256;
  int degree = 32;
  int ptest = 12;
  double tol_accept = 1e-7;
  double tol_reject = 1e-4;
  std::uint64_t seed = 20061017;
  std::optional<std::string> json_path;
  std::optional<std::string> base_point;    // kernels: constant expression
  std::size_t lattice = 50;                 // dump
  std::optional<std::string> out_path;      // dump

  /// Throws ConfigInvalid. `phi_required` demands exactly one phi source.
  void validate(bool phi_required) const;
  CircleDomain domain() const;
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string summary;   // human-readable lines
};

CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_test(const RunConfig& config);
CommandResult cmd_solve(const RunConfig& config);
CommandResult cmd_kernels(const RunConfig& config);
/// Writes the lattice CSV to `csv`.
CommandResult cmd_dump(const RunConfig& config, std::ostream& csv);

/// Full command line front end; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conjp
