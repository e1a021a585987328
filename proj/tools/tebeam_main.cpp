#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "tebeam/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tebeam: thermoelastic transmission-beam simulation and spectral certification"};
  app.require_subcommand(1);

  std::string config_path;
  tebeam::RunOptions options;
  app.add_option("--config", config_path, "JSON config file (defaults used when omitted)");
  app.add_option("--out", options.out_dir, "output directory (overrides config output_dir)");
  app.add_option("--threads", options.threads, "cap on scan parallelism (0 = hardware)");
  app.add_flag("--quiet", options.quiet, "suppress warnings and summaries");

  const char* commands[] = {"simulate",    "spectrum",    "resolvent",      "decay",
                            "report",      "convergence", "export-matrices"};
  const char* descriptions[] = {
      "time integration, writes the energy trace CSV",
      "dense eigensolve of the generator, writes (re, im) CSV",
      "energy-norm resolvent scan along the imaginary axis, writes CSV",
      "simulate then fit the log-log energy decay exponent, writes JSON",
      "full regime report (simulate + spectrum + scan), writes JSON",
      "lowest-eigenfrequency mesh-convergence study, writes CSV",
      "dump assembled matrices in MatrixMarket array format"};
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    app.add_subcommand(commands[i], descriptions[i]);
  }

  CLI11_PARSE(app, argc, argv);

  tebeam::RunConfig cfg;
  try {
    cfg = config_path.empty() ? tebeam::RunConfig::defaults() : tebeam::load_config(config_path);
  } catch (const tebeam::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return tebeam::run_command(command, cfg, options, std::cout);
}
