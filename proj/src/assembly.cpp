#include "tebeam/assembly.hpp"

#include <stdexcept>

#include "tebeam/quadrature.hpp"

namespace tebeam {

std::array<ShapeValue, 4> hermite_shapes(double xi, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("hermite_shapes: element length must be > 0");
  if (xi < 0.0 || xi > 1.0) throw std::domain_error("hermite_shapes: xi outside [0, 1]");

  std::array<ShapeValue, 4> s;
  // Value functions.
  s[0].value = 1.0 + xi * xi * (-3.0 + 2.0 * xi);
  s[0].d1 = xi * (-6.0 + 6.0 * xi) / h;
  s[0].d2 = (-6.0 + 12.0 * xi) / (h * h);
  s[2].value = xi * xi * (3.0 - 2.0 * xi);
  s[2].d1 = xi * (6.0 - 6.0 * xi) / h;
  s[2].d2 = (6.0 - 12.0 * xi) / (h * h);
  // Slope functions (scaled by h).
  s[1].value = h * xi * (1.0 + xi * (-2.0 + xi));
  s[1].d1 = 1.0 + xi * (-4.0 + 3.0 * xi);
  s[1].d2 = (-4.0 + 6.0 * xi) / h;
  s[3].value = h * xi * xi * (-1.0 + xi);
  s[3].d1 = xi * (-2.0 + 3.0 * xi);
  s[3].d2 = (-2.0 + 6.0 * xi) / h;
  return s;
}

SystemMatrices assemble(const PhysicalParams& p, const Mesh& m, const DofMap& dofs,
                        int gauss_points) {
  if (static_cast<int>(dofs.beam.size()) != 2 * m.node_count() ||
      static_cast<int>(dofs.heat.size()) != m.n1 + 1) {
    throw std::invalid_argument("assemble: mesh/dofmap mismatch");
  }

  const GaussRule rule = gauss_legendre_01(gauss_points);
  const int nb = dofs.n_beam;
  const int nth = dofs.n_heat;

  SystemMatrices sys;
  sys.beam_mass = Eigen::MatrixXd::Zero(nb, nb);
  sys.beam_stiffness = Eigen::MatrixXd::Zero(nb, nb);
  sys.heat_mass = Eigen::MatrixXd::Zero(nth, nth);
  sys.heat_stiffness = Eigen::MatrixXd::Zero(nth, nth);
  sys.coupling = Eigen::MatrixXd::Zero(nth, nb);

  for (int e = 0; e < m.element_count(); ++e) {
    const double h = m.element_length(e);
    const bool span1 = m.in_span1(e);
    const double rho = span1 ? p.rho1 : p.rho2;
    const double alpha = span1 ? p.alpha1 : p.alpha2;
    const double beta = span1 ? p.beta1 : p.beta2;

    Eigen::Matrix4d mass_loc = Eigen::Matrix4d::Zero();
    Eigen::Matrix4d stiff_loc = Eigen::Matrix4d::Zero();
    Eigen::Matrix2d hmass_loc = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d hstiff_loc = Eigen::Matrix2d::Zero();
    Eigen::Matrix<double, 2, 4> coup_loc = Eigen::Matrix<double, 2, 4>::Zero();

    // Symmetric blocks accumulate their upper triangle only and mirror
    // afterwards: the assembled matrices are then symmetric to the bit.
    for (std::size_t g = 0; g < rule.points.size(); ++g) {
      const double xi = rule.points[g];
      const double w = rule.weights[g] * h;
      const auto sh = hermite_shapes(xi, h);
      for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
          mass_loc(i, j) += w * (rho * (sh[i].value * sh[j].value) +
                                 alpha * (sh[i].d1 * sh[j].d1));
          stiff_loc(i, j) += w * beta * (sh[i].d2 * sh[j].d2);
        }
      }
      if (span1) {
        const double psi[2] = {1.0 - xi, xi};
        const double dpsi[2] = {-1.0 / h, 1.0 / h};
        for (int i = 0; i < 2; ++i) {
          for (int j = i; j < 2; ++j) {
            hmass_loc(i, j) += w * p.rho0 * (psi[i] * psi[j]);
            hstiff_loc(i, j) += w * p.kappa * (dpsi[i] * dpsi[j]);
          }
          for (int j = 0; j < 4; ++j) coup_loc(i, j) += w * (dpsi[i] * sh[j].d1);
        }
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < i; ++j) {
        mass_loc(i, j) = mass_loc(j, i);
        stiff_loc(i, j) = stiff_loc(j, i);
      }
    }
    hmass_loc(1, 0) = hmass_loc(0, 1);
    hstiff_loc(1, 0) = hstiff_loc(0, 1);

    const int bdof[4] = {dofs.beam[2 * e], dofs.beam[2 * e + 1], dofs.beam[2 * (e + 1)],
                         dofs.beam[2 * (e + 1) + 1]};
    for (int i = 0; i < 4; ++i) {
      if (bdof[i] < 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (bdof[j] < 0) continue;
        sys.beam_mass(bdof[i], bdof[j]) += mass_loc(i, j);
        sys.beam_stiffness(bdof[i], bdof[j]) += stiff_loc(i, j);
      }
    }

    if (span1) {
      const int hdof[2] = {dofs.heat[e], dofs.heat[e + 1]};
      for (int i = 0; i < 2; ++i) {
        if (hdof[i] < 0) continue;
        for (int j = 0; j < 2; ++j) {
          if (hdof[j] < 0) continue;
          sys.heat_mass(hdof[i], hdof[j]) += hmass_loc(i, j);
          sys.heat_stiffness(hdof[i], hdof[j]) += hstiff_loc(i, j);
        }
        for (int j = 0; j < 4; ++j) {
          if (bdof[j] < 0) continue;
          sys.coupling(hdof[i], bdof[j]) += coup_loc(i, j);
        }
      }
    }
  }
  return sys;
}

}  // namespace tebeam
