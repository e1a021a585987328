#pragma once

#include <string>
#include <vector>

#include "tebeam/generator.hpp"
#include "tebeam/initial_data.hpp"
#include "tebeam/mesh.hpp"

namespace tebeam {

struct TraceMeta {
  double dt = 0.0;
  double horizon = 0.0;
  int sample_every = 1;
  int steps = 0;
  int n1 = 0, n2 = 0;
  BcMode bc = BcMode::Clamped;
  double gamma = 0.0;
  double max_balance_residual = 0.0;  ///< max |dE + dt*dissipation(mid)| over all steps
  std::string config_hash;
};

/// Sampled energy history of one simulation. Row 0 is the initial state;
/// later rows carry the midpoint dissipation and energy-balance residual
/// of the step that produced them.
struct EnergyTrace {
  std::vector<double> times;
  std::vector<double> energies;
  std::vector<double> dissipations;
  std::vector<double> balance_residuals;
  TraceMeta meta;
};

/// Nodal interpolation of closed-form initial data onto the FE spaces:
/// beam DOFs take (value, slope) at the nodes, heat DOFs take values at
/// interior span-1 nodes. The shared interface DOF makes the projected
/// state satisfy the transmission conditions identically.
StateVector project_initial(const InitialData& data, const Mesh& m, const DofMap& dofs);

/// Implicit midpoint step with the block solve factored once per
/// (generator, dt). The system is assembled in mass-weighted form; mass
/// matrices are never inverted explicitly. Unconditionally stable here
/// and preserves the quadratic energy balance exactly.
class CrankNicolson {
 public:
  CrankNicolson(const Generator& gen, double dt);

  StateVector step(const StateVector& s) const;
  double dt() const { return dt_; }

 private:
  const Generator& gen_;
  double dt_;
  Eigen::MatrixXd system_;
  Eigen::PartialPivLU<Eigen::MatrixXd> solver_;
};

/// One implicit-midpoint step (factors on the fly). dt may be negative:
/// the backward step is the exact inverse of the forward one.
StateVector step_cn(const Generator& gen, const StateVector& s, double dt);

/// Repeated implicit-midpoint stepping over [0, horizon], sampling the
/// energy every `sample_every` steps (the final step is always sampled).
EnergyTrace simulate(const Generator& gen, const StateVector& s0, double dt, double horizon,
                     int sample_every = 1);

}  // namespace tebeam
