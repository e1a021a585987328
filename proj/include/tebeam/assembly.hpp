#pragma once

#include <Eigen/Dense>
#include <array>

#include "tebeam/mesh.hpp"
#include "tebeam/params.hpp"

namespace tebeam {

struct ShapeValue {
  double value = 0.0;
  double d1 = 0.0;  ///< d/dx
  double d2 = 0.0;  ///< d2/dx2
};

/// Cubic Hermite basis on an element of length h at local coordinate
/// xi in [0, 1]. DOF order: (value, slope) at the left node, then the
/// right node. Slope functions carry a factor h so that DOFs are
/// physical slopes; derivatives are with respect to x.
std::array<ShapeValue, 4> hermite_shapes(double xi, double h);

/// Assembled matrices of the coupled weak form, stored dense.
///   beam_mass       rho ∫ φ φ + alpha ∫ φ' φ'   (per-span coefficients)
///   beam_stiffness  beta ∫ φ'' φ''
///   heat_mass       rho0 ∫ ψ ψ                  (span-1 P1 field)
///   heat_stiffness  kappa ∫ ψ' ψ'
///   coupling        ∫ ψ' φ' over span 1          (heat rows x beam cols)
struct SystemMatrices {
  Eigen::MatrixXd beam_mass;
  Eigen::MatrixXd beam_stiffness;
  Eigen::MatrixXd heat_mass;
  Eigen::MatrixXd heat_stiffness;
  Eigen::MatrixXd coupling;
};

/// Element-by-element Gauss assembly. The default 4-point rule is exact
/// for every polynomial integrand present (highest degree 6, the beam
/// mass product). Interface moment/shear balance is natural: no
/// interface terms are assembled.
SystemMatrices assemble(const PhysicalParams& p, const Mesh& m, const DofMap& dofs,
                        int gauss_points = 4);

}  // namespace tebeam
