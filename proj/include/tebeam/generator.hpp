#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "tebeam/assembly.hpp"

namespace tebeam {

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Discrete state: beam displacement and velocity coefficients (Hermite
/// DOFs across both spans) plus temperature coefficients (interior
/// span-1 nodes).
struct StateVector {
  Eigen::VectorXd displacement;
  Eigen::VectorXd velocity;
  Eigen::VectorXd temperature;

  static StateVector zero(int n_beam, int n_heat);
};

/// First-order evolution operator of the semi-discrete system, with the
/// block (Kb, Mb, Mth) energy metric:
///
///   d/dt displacement = velocity
///   Mb  d/dt velocity = -Kb q + gamma D^T theta
///   Mth d/dt theta    = -Kth theta - gamma D velocity
///
/// Mass and stiffness factorizations are cached at construction. The
/// object is immutable afterwards and safe to share across threads.
class Generator {
 public:
  Generator(SystemMatrices sys, double gamma);

  StateVector apply(const StateVector& s) const;

  /// 1/2 <s, s> in the energy metric -- the discrete E(t). Always >= 0.
  double energy(const StateVector& s) const;

  /// theta^T Kth theta, the kappa-weighted Dirichlet energy of the
  /// temperature. Equals -Re<A s, s> identically.
  double dissipation(const StateVector& s) const;

  /// Energy inner product <a, b> (no 1/2 factor).
  double energy_inner(const StateVector& a, const StateVector& b) const;

  /// <A a, b> in the energy metric, evaluated from the weak-form blocks
  /// (the mass matrices cancel algebraically, so no mass solve is
  /// involved and the skew cancellations happen at full precision).
  double apply_inner(const StateVector& a, const StateVector& b) const;

  /// Solves A s = f; unique for every f since the stiffness blocks are
  /// definite (0 is in the resolvent set).
  StateVector solve(const StateVector& f) const;

  const SystemMatrices& system() const { return sys_; }
  double gamma() const { return gamma_; }
  int beam_dofs() const { return nb_; }
  int heat_dofs() const { return nth_; }
  int dim() const { return 2 * nb_ + nth_; }

 private:
  void require_dims(const StateVector& s, const char* who) const;

  SystemMatrices sys_;
  double gamma_ = 0.0;
  int nb_ = 0;
  int nth_ = 0;
  Eigen::LLT<Eigen::MatrixXd> beam_mass_llt_;
  Eigen::LLT<Eigen::MatrixXd> heat_mass_llt_;
  Eigen::LLT<Eigen::MatrixXd> beam_stiffness_llt_;
  Eigen::LLT<Eigen::MatrixXd> heat_stiffness_llt_;
};

}  // namespace tebeam
