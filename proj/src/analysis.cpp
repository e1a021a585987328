#include "tebeam/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "tebeam/detail/least_squares.hpp"

namespace tebeam {

namespace {

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

DecayFit fit_decay_exponent(const EnergyTrace& trace, double t_a, double t_b) {
  if (!(t_a > 0.0) || !(t_b > t_a)) {
    throw std::invalid_argument("fit_decay_exponent: need 0 < t_a < t_b");
  }
  if (trace.times.empty() || t_a < trace.times.front() - 1e-12 ||
      t_b > trace.times.back() + 1e-12) {
    throw std::invalid_argument("fit_decay_exponent: window outside the trace");
  }

  // Indices of trace samples inside the window.
  std::vector<std::size_t> window;
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    if (trace.times[i] >= t_a && trace.times[i] <= t_b) {
      if (trace.times[i] <= 0.0) continue;
      window.push_back(i);
    }
  }
  if (window.size() < 10) {
    throw std::invalid_argument("fit_decay_exponent: fewer than 10 samples in the window");
  }
  for (std::size_t i : window) {
    if (!(trace.energies[i] > 0.0)) {
      throw std::invalid_argument("fit_decay_exponent: non-positive energy in the window");
    }
  }

  // Geometric subsample: nearest trace sample to each geometric target.
  const std::size_t targets = std::min<std::size_t>(64, window.size());
  std::set<std::size_t> chosen;
  const double lo = trace.times[window.front()];
  const double hi = trace.times[window.back()];
  for (std::size_t k = 0; k < targets; ++k) {
    const double t =
        targets == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / (targets - 1));
    std::size_t best = window.front();
    double dist = std::abs(trace.times[best] - t);
    // window times are increasing: binary search for the nearest
    auto it = std::lower_bound(window.begin(), window.end(), t,
                               [&](std::size_t i, double val) { return trace.times[i] < val; });
    for (auto probe : {it, it == window.begin() ? it : std::prev(it)}) {
      if (probe != window.end() && std::abs(trace.times[*probe] - t) < dist) {
        best = *probe;
        dist = std::abs(trace.times[*probe] - t);
      }
    }
    chosen.insert(best);
  }
  std::vector<std::size_t> used(chosen.begin(), chosen.end());
  if (used.size() < 10) used = window;

  std::vector<double> xs, ys;
  xs.reserve(used.size());
  ys.reserve(used.size());
  for (std::size_t i : used) {
    xs.push_back(std::log(trace.times[i]));
    ys.push_back(std::log(trace.energies[i]));
  }
  const detail::LineFit line = detail::fit_line(xs, ys);

  DecayFit fit;
  fit.exponent = line.slope;
  fit.residual = line.rms_residual;
  fit.window_start = t_a;
  fit.window_end = t_b;
  fit.samples_used = static_cast<int>(used.size());
  return fit;
}

std::vector<double> observed_orders_from_errors(const std::vector<double>& errors) {
  std::vector<double> orders;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    if (errors[i] > 0.0 && errors[i + 1] > 0.0) {
      orders.push_back(std::log2(errors[i] / errors[i + 1]));
    } else {
      orders.push_back(nan_value());
    }
  }
  return orders;
}

std::vector<double> observed_orders_richardson(const std::vector<double>& probes) {
  std::vector<double> orders;
  for (std::size_t i = 0; i + 2 < probes.size(); ++i) {
    const double d1 = probes[i] - probes[i + 1];
    const double d2 = probes[i + 1] - probes[i + 2];
    if (d1 != 0.0 && d2 != 0.0 && d1 / d2 > 0.0) {
      orders.push_back(std::log2(d1 / d2));
    } else {
      orders.push_back(nan_value());
    }
  }
  return orders;
}

ConvergenceStudy convergence_study(const PhysicalParams& p, BcMode bc,
                                   const std::vector<int>& sizes) {
  if (sizes.size() < 3) throw std::invalid_argument("convergence_study: need >= 3 mesh sizes");
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    if (sizes[i + 1] != 2 * sizes[i]) {
      throw std::invalid_argument("convergence_study: sizes must double at each refinement");
    }
  }

  ConvergenceStudy study;
  study.sizes = sizes;
  for (int n : sizes) {
    const Mesh mesh = Mesh::uniform(p.L0, p.L, n, n);
    const DofMap dofs = DofMap::build(mesh, bc);
    const Generator gen(assemble(p, mesh, dofs), p.gamma);
    const EigenResult eig = eigenvalues(gen);

    // Lowest eigenfrequency: smallest nonzero |Im| (the heat branch is
    // real; round-off puts it at |Im| ~ 0).
    const double floor = 1e-9 * std::max(1.0, eig.omega_max);
    double probe = std::numeric_limits<double>::infinity();
    for (const auto& ev : eig.eigenvalues) {
      const double im = std::abs(ev.imag());
      if (im > floor) {
        probe = im;
        break;  // sorted by |Im|
      }
    }
    study.probes.push_back(probe);
  }

  const bool uniform_spans = p.rho1 == p.rho2 && p.alpha1 == p.alpha2 && p.beta1 == p.beta2;
  if (bc == BcMode::Pinned && p.gamma == 0.0 && uniform_spans) {
    study.reference = rayleigh_dispersion(p.rho1, p.alpha1, p.beta1, p.L, 1);
    for (double probe : study.probes) study.errors.push_back(std::abs(probe - *study.reference));
    study.orders = observed_orders_from_errors(study.errors);
  } else {
    study.orders = observed_orders_richardson(study.probes);
  }

  study.degenerate = std::adjacent_find(study.probes.begin(), study.probes.end(),
                                        [](double a, double b) { return a != b; }) ==
                     study.probes.end();
  if (study.degenerate) {
    std::fill(study.orders.begin(), study.orders.end(), nan_value());
  }
  return study;
}

bool RegimeReport::all_passed() const {
  for (const auto& c : checks) {
    if (c.applicable && !c.passed) return false;
  }
  return true;
}

RegimeReport regime_report(const PhysicalParams& p, const EnergyTrace& trace,
                           const ResolventScan& scan, const EigenResult& eig) {
  // All inputs must come from the same config.
  const std::string* hash = nullptr;
  for (const std::string* h : {&trace.meta.config_hash, &scan.config_hash, &eig.config_hash}) {
    if (h->empty()) continue;
    if (hash && *hash != *h) {
      throw std::invalid_argument("regime_report: config hash mismatch between inputs");
    }
    hash = h;
  }

  RegimeReport report;
  report.regime = classify_regime(p);
  report.config_hash = hash ? *hash : "";
  report.spectral_abscissa = eig.spectral_abscissa;

  if (trace.energies.empty()) throw std::invalid_argument("regime_report: empty trace");
  report.energy_initial = trace.energies.front();
  report.energy_final = trace.energies.back();
  const double e0 = report.energy_initial;

  // Energy monotonicity and per-step balance.
  {
    const double slack = 1e-10 * e0;
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < trace.energies.size(); ++i) {
      if (trace.energies[i + 1] > trace.energies[i] + slack) {
        monotone = false;
        break;
      }
    }
    report.checks.push_back({"energy_nonincreasing", true, monotone,
                             "slack 1e-10*E(0), E(0)=" + fmt(e0)});
    const bool balanced = trace.meta.max_balance_residual <= 1e-10 * e0;
    report.checks.push_back({"energy_balance", true, balanced,
                             "max residual " + fmt(trace.meta.max_balance_residual) +
                                 " vs 1e-10*E(0)=" + fmt(1e-10 * e0)});
  }

  // Spectral abscissa and strong-stability trend (need gamma != 0).
  const bool damped = p.gamma != 0.0;
  report.checks.push_back({"spectral_abscissa_negative", damped,
                           damped ? eig.spectral_abscissa < 0.0 : true,
                           damped ? "abscissa " + fmt(eig.spectral_abscissa)
                                  : "NOT APPLICABLE (gamma = 0)"});
  {
    const bool ok = e0 > 0.0 && report.energy_final < 0.9 * e0;
    report.checks.push_back({"strong_stability_trend", damped, damped ? ok : true,
                             damped ? "E(T)/E(0) = " + fmt(e0 > 0 ? report.energy_final / e0 : 0)
                                    : "NOT APPLICABLE (gamma = 0)"});
  }

  // Scan shape: peak position and tail envelope.
  report.scan_samples = static_cast<int>(scan.scaled.size());
  if (!scan.scaled.empty()) {
    const auto it = std::max_element(scan.scaled.begin(), scan.scaled.end());
    report.scan_argmax_index = static_cast<int>(it - scan.scaled.begin());
    report.scan_argmax_lambda = scan.lambdas[report.scan_argmax_index];
    report.scan_max_scaled = *it;
    report.scan_peak_in_lower_third = 3 * report.scan_argmax_index < report.scan_samples;

    const std::size_t half = scan.scaled.size() / 2;
    double running_max = scan.scaled[half];
    double ripple = 1.0;
    for (std::size_t i = half + 1; i < scan.scaled.size(); ++i) {
      ripple = std::max(ripple, scan.scaled[i] / running_max);
      running_max = std::max(running_max, scan.scaled[i]);
    }
    report.scan_upper_ripple = ripple;
    report.checks.push_back({"scan_peak_low_frequency", true, report.scan_peak_in_lower_third,
                             "argmax lambda " + fmt(report.scan_argmax_lambda) + " at index " +
                                 fmt(report.scan_argmax_index) + "/" + fmt(report.scan_samples)});
    report.checks.push_back({"scan_tail_bounded", true, ripple <= 1.5,
                             "upper-half envelope ripple " + fmt(ripple) + " (tol 1.5)"});
  }

  // Pre-asymptotic decay fit over [T/4, T].
  const double horizon = trace.meta.horizon;
  try {
    report.decay = fit_decay_exponent(trace, horizon / 4.0, horizon);
    report.decay_fitted = true;
  } catch (const std::invalid_argument&) {
    report.decay_fitted = false;  // zero data or too few samples
  }
  return report;
}

}  // namespace tebeam
