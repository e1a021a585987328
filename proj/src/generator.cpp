#include "tebeam/generator.hpp"

namespace tebeam {

StateVector StateVector::zero(int n_beam, int n_heat) {
  StateVector s;
  s.displacement = Eigen::VectorXd::Zero(n_beam);
  s.velocity = Eigen::VectorXd::Zero(n_beam);
  s.temperature = Eigen::VectorXd::Zero(n_heat);
  return s;
}

Generator::Generator(SystemMatrices sys, double gamma)
    : sys_(std::move(sys)),
      gamma_(gamma),
      nb_(static_cast<int>(sys_.beam_mass.rows())),
      nth_(static_cast<int>(sys_.heat_mass.rows())) {
  if (sys_.beam_stiffness.rows() != nb_ || sys_.coupling.rows() != nth_ ||
      sys_.coupling.cols() != nb_ || sys_.heat_stiffness.rows() != nth_) {
    throw std::invalid_argument("generator: inconsistent system matrix dimensions");
  }
  beam_mass_llt_.compute(sys_.beam_mass);
  heat_mass_llt_.compute(sys_.heat_mass);
  if (beam_mass_llt_.info() != Eigen::Success || heat_mass_llt_.info() != Eigen::Success) {
    throw NumericalError("generator: mass matrix not positive definite (assembly bug)");
  }
  beam_stiffness_llt_.compute(sys_.beam_stiffness);
  heat_stiffness_llt_.compute(sys_.heat_stiffness);
  if (beam_stiffness_llt_.info() != Eigen::Success ||
      heat_stiffness_llt_.info() != Eigen::Success) {
    throw NumericalError("generator: stiffness matrix not positive definite");
  }
}

void Generator::require_dims(const StateVector& s, const char* who) const {
  if (s.displacement.size() != nb_ || s.velocity.size() != nb_ || s.temperature.size() != nth_) {
    throw std::invalid_argument(std::string(who) + ": state dimension mismatch");
  }
}

StateVector Generator::apply(const StateVector& s) const {
  require_dims(s, "apply");
  StateVector out;
  out.displacement = s.velocity;
  out.velocity = beam_mass_llt_.solve(gamma_ * (sys_.coupling.transpose() * s.temperature) -
                                      sys_.beam_stiffness * s.displacement);
  out.temperature = heat_mass_llt_.solve(-(sys_.heat_stiffness * s.temperature) -
                                         gamma_ * (sys_.coupling * s.velocity));
  return out;
}

double Generator::energy(const StateVector& s) const {
  return 0.5 * energy_inner(s, s);
}

double Generator::dissipation(const StateVector& s) const {
  require_dims(s, "dissipation");
  return s.temperature.dot(sys_.heat_stiffness * s.temperature);
}

double Generator::energy_inner(const StateVector& a, const StateVector& b) const {
  require_dims(a, "energy_inner");
  require_dims(b, "energy_inner");
  return a.displacement.dot(sys_.beam_stiffness * b.displacement) +
         a.velocity.dot(sys_.beam_mass * b.velocity) +
         a.temperature.dot(sys_.heat_mass * b.temperature);
}

double Generator::apply_inner(const StateVector& a, const StateVector& b) const {
  require_dims(a, "apply_inner");
  require_dims(b, "apply_inner");
  const Eigen::VectorXd stiff_q = sys_.beam_stiffness * a.displacement;
  // <(Aa)_q, b_q>_Kb; the velocity row contributes -Kb a_q + gamma D^T a_th
  // paired with b_p, the heat row -Kth a_th - gamma D a_p paired with b_th.
  return a.velocity.dot(sys_.beam_stiffness * b.displacement) - stiff_q.dot(b.velocity) +
         gamma_ * (sys_.coupling.transpose() * a.temperature).dot(b.velocity) -
         (sys_.heat_stiffness * a.temperature).dot(b.temperature) -
         gamma_ * (sys_.coupling * a.velocity).dot(b.temperature);
}

StateVector Generator::solve(const StateVector& f) const {
  require_dims(f, "solve");
  auto direct = [this](const StateVector& rhs) {
    StateVector s;
    s.velocity = rhs.displacement;
    s.temperature = heat_stiffness_llt_.solve(-gamma_ * (sys_.coupling * rhs.displacement) -
                                              sys_.heat_mass * rhs.temperature);
    s.displacement = beam_stiffness_llt_.solve(
        gamma_ * (sys_.coupling.transpose() * s.temperature) - sys_.beam_mass * rhs.velocity);
    return s;
  };

  StateVector s = direct(f);
  // One refinement pass keeps the apply/solve round trip near machine
  // precision even when the stiffness blocks are ill conditioned.
  const StateVector as = apply(s);
  StateVector residual;
  residual.displacement = f.displacement - as.displacement;
  residual.velocity = f.velocity - as.velocity;
  residual.temperature = f.temperature - as.temperature;
  const StateVector corr = direct(residual);
  s.displacement += corr.displacement;
  s.velocity += corr.velocity;
  s.temperature += corr.temperature;

  if (!s.displacement.allFinite() || !s.velocity.allFinite() || !s.temperature.allFinite()) {
    throw NumericalError("solve: non-finite solution");
  }
  return s;
}

}  // namespace tebeam
