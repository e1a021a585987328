#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <functional>
#include <set>
#include <vector>

#include "tebeam/analysis.hpp"
#include "tebeam/detail/least_squares.hpp"

using namespace tebeam;

namespace {

EnergyTrace synthetic_trace(double t0, double t1, int samples,
                            const std::function<double(double)>& energy) {
  EnergyTrace trace;
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    trace.times.push_back(t);
    trace.energies.push_back(energy(t));
    trace.dissipations.push_back(0.0);
    trace.balance_residuals.push_back(0.0);
  }
  trace.meta.horizon = t1;
  return trace;
}

}  // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("decay fit recovers exact power laws") {
  const auto trace = synthetic_trace(0.5, 100.0, 4000, [](double t) { return std::pow(t, -2.0); });
  const DecayFit fit = fit_decay_exponent(trace, 1.0, 100.0);
  CHECK(std::abs(fit.exponent + 2.0) <= 1e-6);
  CHECK(fit.residual <= 1e-9);

  const auto t1 = synthetic_trace(0.5, 100.0, 4000, [](double t) { return 3.7 / t; });
  CHECK(std::abs(fit_decay_exponent(t1, 1.0, 100.0).exponent + 1.0) <= 1e-6);
}

TEST_CASE("decay fit of a constant is zero") {
  const auto trace = synthetic_trace(0.5, 50.0, 1000, [](double) { return 5.0; });
  CHECK(std::abs(fit_decay_exponent(trace, 1.0, 50.0).exponent) <= 1e-12);
}

TEST_CASE("decay fit of an exponential matches the closed-form regression") {
  const auto trace = synthetic_trace(1.0, 30.0, 8000, [](double t) { return std::exp(-t); });
  const DecayFit fit = fit_decay_exponent(trace, 10.0, 20.0);

  // Independent oracle: regress log E = -t on the same geometric sample
  // of the window, from the analytic values.
  std::set<double> snapped_times;
  const std::size_t targets = 64;
  const double dt = (30.0 - 1.0) / 7999;
  for (std::size_t k = 0; k < targets; ++k) {
    const double t = 10.0 * std::pow(2.0, static_cast<double>(k) / (targets - 1));
    snapped_times.insert(1.0 + std::round((t - 1.0) / dt) * dt);
  }
  std::vector<double> xs, ys;
  for (double t : snapped_times) {
    xs.push_back(std::log(t));
    ys.push_back(-t);
  }
  const auto line = detail::fit_line(xs, ys);
  CHECK(fit.exponent == doctest::Approx(line.slope).epsilon(1e-3));
  // The slope of log E vs log t for E = e^-t sits near -t at the
  // window's log-midpoint (~ -14.4 here).
  CHECK(fit.exponent > -15.5);
  CHECK(fit.exponent < -13.5);
}

TEST_CASE("decay fit is invariant under energy rescaling") {
  const auto trace = synthetic_trace(0.5, 60.0, 2000, [](double t) { return std::pow(t, -1.3); });
  auto scaled = trace;
  for (double& e : scaled.energies) e *= 1737.0;
  const double a = fit_decay_exponent(trace, 1.0, 60.0).exponent;
  const double b = fit_decay_exponent(scaled, 1.0, 60.0).exponent;
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("decay fit rejects bad windows") {
  const auto trace = synthetic_trace(0.5, 10.0, 50, [](double t) { return 1.0 / t; });
  CHECK_THROWS_AS(fit_decay_exponent(trace, 5.0, 50.0), std::invalid_argument);   // outside
  CHECK_THROWS_AS(fit_decay_exponent(trace, 9.0, 9.5), std::invalid_argument);    // too few
  auto zeroed = trace;
  zeroed.energies[30] = 0.0;
  CHECK_THROWS_AS(fit_decay_exponent(zeroed, 1.0, 10.0), std::invalid_argument);  // E <= 0
}

TEST_CASE("observed orders from manufactured errors") {
  const auto orders = observed_orders_from_errors({1.0, 1.0 / 16.0, 1.0 / 256.0});
  REQUIRE(orders.size() == 2);
  CHECK(orders[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(orders[1] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("richardson orders from probe values") {
  // p_n = p + C 2^{-3n}: differences shrink by 8 per level.
  std::vector<double> probes;
  for (int n = 0; n < 4; ++n) probes.push_back(2.0 + std::pow(8.0, -n));
  const auto orders = observed_orders_richardson(probes);
  REQUIRE(orders.size() == 2);
  CHECK(orders[0] == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("convergence study: pinned conservative oracle observes order >= 3.5") {
  PhysicalParams p;
  p.gamma = 0.0;
  const ConvergenceStudy study = convergence_study(p, BcMode::Pinned, {4, 8, 16});
  REQUIRE(study.reference.has_value());
  CHECK(*study.reference == doctest::Approx(rayleigh_dispersion(1, 1, 1, 1, 1)));
  REQUIRE(study.orders.size() == 2);
  for (double o : study.orders) CHECK(o >= 3.5);
  CHECK(!study.degenerate);
}

TEST_CASE("convergence study flags degenerate and invalid inputs") {
  PhysicalParams p;
  CHECK_THROWS_AS(convergence_study(p, BcMode::Clamped, {4, 8}), std::invalid_argument);
  CHECK_THROWS_AS(convergence_study(p, BcMode::Clamped, {4, 8, 12}), std::invalid_argument);

  const auto orders = observed_orders_from_errors({0.0, 0.0});
  REQUIRE(orders.size() == 1);
  CHECK(std::isnan(orders[0]));
}

TEST_CASE("regime report: healthy damped run passes, hashes must match") {
  PhysicalParams p;
  p.rho1 = 2.0;
  p.alpha1 = 2.0;  // FAST set
  const Mesh mesh = Mesh::uniform(p.L0, p.L, 8, 8);
  const DofMap dofs = DofMap::build(mesh, BcMode::Clamped);
  const Generator gen(assemble(p, mesh, dofs), p.gamma);

  InitialData data;
  data.displacement = {"poly-clamped", {1.0, 1.0}};
  data.temperature = {"sine-bump", {1.0}};
  EnergyTrace trace = simulate(gen, project_initial(data, mesh, dofs), 1e-2, 40.0, 10);
  trace.meta.config_hash = "cafe";

  const DenseOperator op(gen);
  EigenResult eig = eigenvalues(op);
  eig.config_hash = "cafe";
  ResolventScan scan = resolvent_scan(op, log_grid(1.0, eig.omega_max / 3.0, 60), 1, 2);
  scan.config_hash = "cafe";

  const RegimeReport report = regime_report(p, trace, scan, eig);
  CHECK(report.regime.tag == Regime::Fast);
  CHECK(report.config_hash == "cafe");
  CHECK(report.spectral_abscissa < 0.0);
  for (const auto& c : report.checks) {
    if (c.name == "energy_nonincreasing" || c.name == "energy_balance") CHECK(c.passed);
    if (c.name == "spectral_abscissa_negative") CHECK(c.passed);
  }
  CHECK(report.decay_fitted);

  EigenResult other = eig;
  other.config_hash = "beef";
  CHECK_THROWS_AS(regime_report(p, trace, scan, other), std::invalid_argument);
}

TEST_CASE("regime report: gamma = 0 marks stability checks not applicable") {
  PhysicalParams p;
  p.gamma = 0.0;
  const Mesh mesh = Mesh::uniform(p.L0, p.L, 6, 6);
  const DofMap dofs = DofMap::build(mesh, BcMode::Clamped);
  const Generator gen(assemble(p, mesh, dofs), p.gamma);
  InitialData data;
  data.displacement = {"poly-clamped", {1.0, 1.0}};
  const EnergyTrace trace = simulate(gen, project_initial(data, mesh, dofs), 1e-2, 2.0, 5);
  const EigenResult eig = eigenvalues(gen);
  const DenseOperator op(gen);
  const ResolventScan scan = resolvent_scan(op, log_grid(1.0, 2.0, 10), 1);

  const RegimeReport report = regime_report(p, trace, scan, eig);
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.name == "strong_stability_trend") {
      CHECK(!c.applicable);
      CHECK(c.detail.find("NOT APPLICABLE") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
}

TEST_SUITE_END();
