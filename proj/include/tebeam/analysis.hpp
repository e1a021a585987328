#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tebeam/params.hpp"
#include "tebeam/spectral.hpp"
#include "tebeam/timestepper.hpp"

namespace tebeam {

struct DecayFit {
  double exponent = 0.0;  ///< slope of log E vs log t
  double residual = 0.0;  ///< rms in log space
  double window_start = 0.0;
  double window_end = 0.0;
  int samples_used = 0;
};

/// Log-log slope of the energy over [t_a, t_b], fitted on a geometric
/// subsample of the window (avoids late-time bias). Any fixed
/// discretization eventually decays exponentially, so the result is a
/// pre-asymptotic diagnostic; the resolvent scan is the primary
/// stability evidence.
DecayFit fit_decay_exponent(const EnergyTrace& trace, double t_a, double t_b);

struct ConvergenceStudy {
  std::vector<int> sizes;
  std::vector<double> probes;       ///< lowest eigenfrequency per size
  std::optional<double> reference;  ///< analytic dispersion value when available
  std::vector<double> errors;       ///< |probe - reference| (empty without reference)
  std::vector<double> orders;       ///< observed orders; NaN when degenerate
  bool degenerate = false;          ///< identical probes: order undefined
};

/// Observed orders from successive errors under mesh doubling.
std::vector<double> observed_orders_from_errors(const std::vector<double>& errors);

/// Richardson orders from raw probe values (no reference needed).
std::vector<double> observed_orders_richardson(const std::vector<double>& probes);

/// Lowest-eigenfrequency convergence under uniform refinement
/// (n1 = n2 = size; sizes must double). With pinned ends, gamma = 0 and
/// identical span properties the analytic pinned-pinned dispersion
/// frequency serves as the reference.
ConvergenceStudy convergence_study(const PhysicalParams& p, BcMode bc,
                                   const std::vector<int>& sizes);

struct CheckResult {
  std::string name;
  bool applicable = true;
  bool passed = false;
  std::string detail;
};

struct RegimeReport {
  RegimeClass regime;
  std::string config_hash;
  double spectral_abscissa = 0.0;
  double scan_max_scaled = 0.0;
  double scan_argmax_lambda = 0.0;
  int scan_argmax_index = -1;
  int scan_samples = 0;
  bool scan_peak_in_lower_third = false;
  double scan_upper_ripple = 0.0;  ///< growth of the upper-half running envelope
  double energy_initial = 0.0;
  double energy_final = 0.0;
  bool decay_fitted = false;
  DecayFit decay;  ///< over [T/4, T]; pre-asymptotic
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Combines one simulation, one scan and one eigensolve, all produced
/// from the same config (their hashes must agree), into the pass/fail
/// verdicts of the acceptance rules. Never asserts PDE-level optimality.
RegimeReport regime_report(const PhysicalParams& p, const EnergyTrace& trace,
                           const ResolventScan& scan, const EigenResult& eig);

}  // namespace tebeam
