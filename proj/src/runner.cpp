#include "tebeam/runner.hpp"

#include <filesystem>
#include <ostream>
#include <thread>

#include "tebeam/analysis.hpp"
#include "tebeam/io.hpp"

namespace tebeam {

namespace fs = std::filesystem;

namespace {

struct RunContext {
  RunConfig cfg;
  std::string hash;
  fs::path out_dir;
  int threads = 1;
  Mesh mesh;
  DofMap dofs;
};

std::string artifact(const RunContext& ctx, const std::string& command, const std::string& ext,
                     const std::string& suffix = "") {
  return (ctx.out_dir / (command + "-" + ctx.hash + suffix + "." + ext)).string();
}

Generator build_generator(const RunContext& ctx) {
  return Generator(assemble(ctx.cfg.params, ctx.mesh, ctx.dofs), ctx.cfg.params.gamma);
}

EnergyTrace run_simulation(const RunContext& ctx, const Generator& gen) {
  const StateVector s0 = project_initial(ctx.cfg.initial, ctx.mesh, ctx.dofs);
  EnergyTrace trace =
      simulate(gen, s0, ctx.cfg.time.dt, ctx.cfg.time.horizon, ctx.cfg.time.sample_every);
  trace.meta.n1 = ctx.cfg.n1;
  trace.meta.n2 = ctx.cfg.n2;
  trace.meta.bc = ctx.cfg.bc;
  trace.meta.config_hash = ctx.hash;
  return trace;
}

ResolventScan run_scan(const RunContext& ctx, const DenseOperator& op, const EigenResult& eig) {
  double hi = ctx.cfg.scan.lambda_max;
  if (hi <= 0.0) hi = eig.omega_max / 3.0;
  const double lo = std::min(ctx.cfg.scan.lambda_min, hi);
  const int ell = ctx.cfg.scan.ell ? *ctx.cfg.scan.ell : classify_regime(ctx.cfg.params).ell;
  ResolventScan scan =
      resolvent_scan(op, log_grid(lo, hi, ctx.cfg.scan.points), ell, ctx.threads);
  scan.config_hash = ctx.hash;
  return scan;
}

int dispatch(const std::string& command, const RunContext& ctx, std::ostream& out, bool quiet) {
  if (command == "simulate") {
    const Generator gen = build_generator(ctx);
    const EnergyTrace trace = run_simulation(ctx, gen);
    const std::string path = artifact(ctx, command, "csv");
    write_trace_csv(path, trace);
    if (!quiet) {
      out << "simulate: wrote " << path << " (steps=" << trace.meta.steps
          << ", E0=" << format_double(trace.energies.front())
          << ", ET=" << format_double(trace.energies.back()) << ")\n";
    }
    return 0;
  }

  if (command == "spectrum") {
    const Generator gen = build_generator(ctx);
    EigenResult eig = eigenvalues(gen);
    eig.config_hash = ctx.hash;
    const std::string path = artifact(ctx, command, "csv");
    write_spectrum_csv(path, eig);
    if (!quiet) {
      out << "spectrum: wrote " << path << " (dim=" << eig.dim
          << ", abscissa=" << format_double(eig.spectral_abscissa) << ")\n";
    }
    return 0;
  }

  if (command == "resolvent") {
    const Generator gen = build_generator(ctx);
    const DenseOperator op(gen);
    EigenResult eig = eigenvalues(op);
    const ResolventScan scan = run_scan(ctx, op, eig);
    const std::string path = artifact(ctx, command, "csv");
    write_scan_csv(path, scan);
    if (!quiet) {
      out << "resolvent: wrote " << path << " (samples=" << scan.lambdas.size()
          << ", skipped=" << scan.skipped.size() << ", ell=" << scan.ell << ")\n";
    }
    return 0;
  }

  if (command == "decay") {
    const Generator gen = build_generator(ctx);
    const EnergyTrace trace = run_simulation(ctx, gen);
    const DecayFit fit =
        fit_decay_exponent(trace, ctx.cfg.time.horizon / 4.0, ctx.cfg.time.horizon);
    const std::string path = artifact(ctx, command, "json");
    write_text_file(path, decay_to_json(fit, ctx.hash));
    if (!quiet) {
      out << "decay: wrote " << path << " (exponent=" << format_double(fit.exponent)
          << ", pre-asymptotic)\n";
    }
    return 0;
  }

  if (command == "report") {
    const Generator gen = build_generator(ctx);
    const EnergyTrace trace = run_simulation(ctx, gen);
    const DenseOperator op(gen);
    EigenResult eig = eigenvalues(op);
    eig.n_beam = gen.beam_dofs();
    eig.n_heat = gen.heat_dofs();
    eig.config_hash = ctx.hash;
    const ResolventScan scan = run_scan(ctx, op, eig);
    const RegimeReport report = regime_report(ctx.cfg.params, trace, scan, eig);
    const std::string path = artifact(ctx, command, "json");
    write_text_file(path, report_to_json(report));
    if (!quiet) {
      out << "report: wrote " << path << " (regime="
          << (report.regime.tag == Regime::Fast ? "FAST" : "SLOW")
          << ", all_passed=" << (report.all_passed() ? "true" : "false") << ")\n";
    }
    return 0;
  }

  if (command == "convergence") {
    const std::vector<int> sizes = {ctx.cfg.n1, 2 * ctx.cfg.n1, 4 * ctx.cfg.n1};
    const ConvergenceStudy study = convergence_study(ctx.cfg.params, ctx.cfg.bc, sizes);
    const std::string path = artifact(ctx, command, "csv");
    write_convergence_csv(path, study);
    if (!quiet) {
      out << "convergence: wrote " << path << " (orders:";
      for (double o : study.orders) out << ' ' << format_double(o);
      out << ")\n";
    }
    return 0;
  }

  if (command == "export-matrices") {
    const SystemMatrices sys = assemble(ctx.cfg.params, ctx.mesh, ctx.dofs);
    const std::string base = "export-matrices";
    write_matrix_market(artifact(ctx, base, "mtx", "-beam-mass"), sys.beam_mass);
    write_matrix_market(artifact(ctx, base, "mtx", "-beam-stiffness"), sys.beam_stiffness);
    write_matrix_market(artifact(ctx, base, "mtx", "-heat-mass"), sys.heat_mass);
    write_matrix_market(artifact(ctx, base, "mtx", "-heat-stiffness"), sys.heat_stiffness);
    write_matrix_market(artifact(ctx, base, "mtx", "-coupling"), sys.coupling);
    if (!quiet) {
      out << "export-matrices: wrote 5 MatrixMarket files under " << ctx.out_dir.string() << "\n";
    }
    return 0;
  }

  out << "error: unknown command '" << command << "'\n";
  return 1;
}

}  // namespace

int run_command(const std::string& command, const RunConfig& cfg, const RunOptions& opt,
                std::ostream& out) {
  // Config sanity first: exit 1 on any hard violation.
  const auto violations = validate(cfg.params);
  for (const auto& v : violations) {
    if (v.severity == Severity::Error) {
      out << "config error: " << v.message << "\n";
    } else if (!opt.quiet) {
      out << "warning: " << v.message << "\n";
    }
  }
  if (has_errors(violations)) return 1;

  RunContext ctx;
  ctx.cfg = cfg;
  try {
    const auto data_issues = check_initial_data(cfg.initial, cfg.params.L0, cfg.params.L);
    for (const auto& msg : data_issues) out << "config error: initial data: " << msg << "\n";
    if (!data_issues.empty()) return 1;
    ctx.mesh = Mesh::uniform(cfg.params.L0, cfg.params.L, cfg.n1, cfg.n2);
    ctx.dofs = DofMap::build(ctx.mesh, cfg.bc);
    if (cfg.time.dt <= 0.0 || cfg.time.horizon <= 0.0 || cfg.time.sample_every < 1 ||
        cfg.scan.points < 1 || cfg.scan.lambda_min <= 0.0) {
      out << "config error: time/scan settings out of range\n";
      return 1;
    }
  } catch (const std::invalid_argument& e) {
    out << "config error: " << e.what() << "\n";
    return 1;
  }

  ctx.hash = config_hash(cfg);
  ctx.out_dir = opt.out_dir.empty() ? fs::path(cfg.output_dir) : fs::path(opt.out_dir);
  ctx.threads = opt.threads > 0 ? opt.threads
                                : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

  try {
    fs::create_directories(ctx.out_dir);
    return dispatch(command, ctx, out, opt.quiet);
  } catch (const NumericalError& e) {
    out << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    out << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tebeam
