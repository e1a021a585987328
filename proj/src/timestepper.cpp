#include "tebeam/timestepper.hpp"

#include <cmath>

namespace tebeam {

StateVector project_initial(const InitialData& data, const Mesh& m, const DofMap& dofs) {
  StateVector s = StateVector::zero(dofs.n_beam, dofs.n_heat);
  for (int node = 0; node < m.node_count(); ++node) {
    const double x = m.nodes[node];
    const ValueSlope disp = node <= m.n1 ? eval_span1(data.displacement, x, m.L0, m.L)
                                         : eval_span2(data.displacement, x, m.L0, m.L);
    const ValueSlope vel = node <= m.n1 ? eval_span1(data.velocity, x, m.L0, m.L)
                                        : eval_span2(data.velocity, x, m.L0, m.L);
    const int vdof = dofs.beam[2 * node];
    const int sdof = dofs.beam[2 * node + 1];
    if (vdof >= 0) {
      s.displacement(vdof) = disp.value;
      s.velocity(vdof) = vel.value;
    }
    if (sdof >= 0) {
      s.displacement(sdof) = disp.slope;
      s.velocity(sdof) = vel.slope;
    }
  }
  for (int i = 1; i < m.n1; ++i) {
    s.temperature(dofs.heat[i]) = eval_temperature(data.temperature, m.nodes[i], m.L0);
  }
  return s;
}

CrankNicolson::CrankNicolson(const Generator& gen, double dt) : gen_(gen), dt_(dt) {
  if (dt == 0.0 || !std::isfinite(dt)) throw std::invalid_argument("step: dt must be nonzero");
  const auto& sys = gen.system();
  const int nb = gen.beam_dofs();
  const int nth = gen.heat_dofs();
  const double g = gen.gamma();

  // Eliminating q+ = q + dt/2 (p + p+) from the midpoint update leaves a
  // coupled (p+, theta+) system.
  system_.resize(nb + nth, nb + nth);
  system_.topLeftCorner(nb, nb) = sys.beam_mass + (dt * dt / 4.0) * sys.beam_stiffness;
  system_.topRightCorner(nb, nth) = -(dt / 2.0) * g * sys.coupling.transpose();
  system_.bottomLeftCorner(nth, nb) = (dt / 2.0) * g * sys.coupling;
  system_.bottomRightCorner(nth, nth) = sys.heat_mass + (dt / 2.0) * sys.heat_stiffness;
  solver_.compute(system_);
}

StateVector CrankNicolson::step(const StateVector& s) const {
  const auto& sys = gen_.system();
  const int nb = gen_.beam_dofs();
  const int nth = gen_.heat_dofs();
  const double g = gen_.gamma();
  const double dt = dt_;

  Eigen::VectorXd rhs(nb + nth);
  rhs.head(nb) = sys.beam_mass * s.velocity -
                 sys.beam_stiffness * (dt * s.displacement + (dt * dt / 4.0) * s.velocity) +
                 (dt / 2.0) * g * (sys.coupling.transpose() * s.temperature);
  rhs.tail(nth) = sys.heat_mass * s.temperature -
                  (dt / 2.0) * (sys.heat_stiffness * s.temperature) -
                  (dt / 2.0) * g * (sys.coupling * s.velocity);

  Eigen::VectorXd sol = solver_.solve(rhs);
  sol += solver_.solve(rhs - system_ * sol);  // one refinement pass

  StateVector out;
  out.velocity = sol.head(nb);
  out.temperature = sol.tail(nth);
  out.displacement = s.displacement + (dt / 2.0) * (s.velocity + out.velocity);
  if (!sol.allFinite() || !out.displacement.allFinite()) {
    throw NumericalError("step: linear solve produced non-finite values");
  }
  return out;
}

StateVector step_cn(const Generator& gen, const StateVector& s, double dt) {
  return CrankNicolson(gen, dt).step(s);
}

EnergyTrace simulate(const Generator& gen, const StateVector& s0, double dt, double horizon,
                     int sample_every) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be > 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("simulate: horizon must be > 0");
  if (sample_every < 1) throw std::invalid_argument("simulate: sample_every must be >= 1");

  const CrankNicolson stepper(gen, dt);
  const int steps = std::max(1, static_cast<int>(std::llround(horizon / dt)));

  EnergyTrace trace;
  trace.meta.dt = dt;
  trace.meta.horizon = horizon;
  trace.meta.sample_every = sample_every;
  trace.meta.steps = steps;
  trace.meta.gamma = gen.gamma();

  StateVector s = s0;
  trace.times.push_back(0.0);
  trace.energies.push_back(gen.energy(s));
  trace.dissipations.push_back(gen.dissipation(s));
  trace.balance_residuals.push_back(0.0);

  for (int k = 1; k <= steps; ++k) {
    const StateVector next = stepper.step(s);

    StateVector mid, diff;
    mid.displacement = 0.5 * (s.displacement + next.displacement);
    mid.velocity = 0.5 * (s.velocity + next.velocity);
    mid.temperature = 0.5 * (s.temperature + next.temperature);
    diff.displacement = next.displacement - s.displacement;
    diff.velocity = next.velocity - s.velocity;
    diff.temperature = next.temperature - s.temperature;

    const double diss_mid = gen.dissipation(mid);
    // <s+ - s, (s+ + s)/2>_E equals E(s+) - E(s) algebraically but
    // avoids the large cancellation of the direct difference.
    const double residual = gen.energy_inner(diff, mid) + dt * diss_mid;
    trace.meta.max_balance_residual =
        std::max(trace.meta.max_balance_residual, std::abs(residual));

    s = next;
    if (k % sample_every == 0 || k == steps) {
      trace.times.push_back(k * dt);
      trace.energies.push_back(gen.energy(s));
      trace.dissipations.push_back(diss_mid);
      trace.balance_residuals.push_back(residual);
    }
  }
  return trace;
}

}  // namespace tebeam
