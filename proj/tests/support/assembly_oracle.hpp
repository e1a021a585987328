#pragma once

// Independent brute-force assembly: every global matrix entry is the
// adaptive-quadrature integral of the basis-product integrand, scattered
// by a plain double loop. Shares only the Mesh/DofMap layout with the
// library.

#include <Eigen/Dense>

#include "quadrature_oracle.hpp"
#include "tebeam/assembly.hpp"
#include "tebeam/mesh.hpp"
#include "tebeam/params.hpp"

namespace tebeam_test {

inline tebeam::SystemMatrices assemble_brute_force(const tebeam::PhysicalParams& p,
                                                   const tebeam::Mesh& m,
                                                   const tebeam::DofMap& dofs) {
  using Eigen::MatrixXd;
  tebeam::SystemMatrices sys;
  sys.beam_mass = MatrixXd::Zero(dofs.n_beam, dofs.n_beam);
  sys.beam_stiffness = MatrixXd::Zero(dofs.n_beam, dofs.n_beam);
  sys.heat_mass = MatrixXd::Zero(dofs.n_heat, dofs.n_heat);
  sys.heat_stiffness = MatrixXd::Zero(dofs.n_heat, dofs.n_heat);
  sys.coupling = MatrixXd::Zero(dofs.n_heat, dofs.n_beam);

  for (int e = 0; e < m.element_count(); ++e) {
    const double x0 = m.nodes[e];
    const double h = m.element_length(e);
    const bool span1 = m.in_span1(e);
    const double rho = span1 ? p.rho1 : p.rho2;
    const double alpha = span1 ? p.alpha1 : p.alpha2;
    const double beta = span1 ? p.beta1 : p.beta2;
    const int bdof[4] = {dofs.beam[2 * e], dofs.beam[2 * e + 1], dofs.beam[2 * (e + 1)],
                         dofs.beam[2 * (e + 1) + 1]};

    for (int i = 0; i < 4; ++i) {
      if (bdof[i] < 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (bdof[j] < 0) continue;
        const double mass = integrate(
            [&](double x) {
              return rho * hermite_ref(i, 0, x, x0, h) * hermite_ref(j, 0, x, x0, h) +
                     alpha * hermite_ref(i, 1, x, x0, h) * hermite_ref(j, 1, x, x0, h);
            },
            x0, x0 + h);
        const double stiff = integrate(
            [&](double x) {
              return beta * hermite_ref(i, 2, x, x0, h) * hermite_ref(j, 2, x, x0, h);
            },
            x0, x0 + h);
        sys.beam_mass(bdof[i], bdof[j]) += mass;
        sys.beam_stiffness(bdof[i], bdof[j]) += stiff;
      }
    }

    if (!span1) continue;
    const int hdof[2] = {dofs.heat[e], dofs.heat[e + 1]};
    for (int i = 0; i < 2; ++i) {
      if (hdof[i] < 0) continue;
      for (int j = 0; j < 2; ++j) {
        if (hdof[j] < 0) continue;
        sys.heat_mass(hdof[i], hdof[j]) += integrate(
            [&](double x) {
              return p.rho0 * p1_ref(i, 0, x, x0, h) * p1_ref(j, 0, x, x0, h);
            },
            x0, x0 + h);
        sys.heat_stiffness(hdof[i], hdof[j]) += integrate(
            [&](double x) {
              return p.kappa * p1_ref(i, 1, x, x0, h) * p1_ref(j, 1, x, x0, h);
            },
            x0, x0 + h);
      }
      for (int j = 0; j < 4; ++j) {
        if (bdof[j] < 0) continue;
        sys.coupling(hdof[i], bdof[j]) += integrate(
            [&](double x) { return p1_ref(i, 1, x, x0, h) * hermite_ref(j, 1, x, x0, h); },
            x0, x0 + h);
      }
    }
  }
  return sys;
}

}  // namespace tebeam_test
