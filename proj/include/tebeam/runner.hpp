#pragma once

#include <iosfwd>
#include <string>

#include "tebeam/config.hpp"

namespace tebeam {

struct RunOptions {
  std::string out_dir;  ///< overrides config output_dir when non-empty
  int threads = 0;      ///< caps scan parallelism; 0 = hardware concurrency
  bool quiet = false;
};

/// Executes one command (simulate | spectrum | resolvent | decay |
/// report | convergence | export-matrices) against a config. Writes
/// artifacts named <command>-<confighash>.<ext> into the output
/// directory and prints a one-line summary. Returns the process exit
/// status: 0 success, 1 invalid config, 2 numerical failure.
int run_command(const std::string& command, const RunConfig& cfg, const RunOptions& opt,
                std::ostream& out);

}  // namespace tebeam
