#include "tebeam/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace tebeam {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// Legendre recurrence, weights come from the first eigenvector
// components.
GaussRule gauss_legendre_01(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre_01: need at least 1 point");
  const int n = points;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_legendre_01: eigensolver failed");

  GaussRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = es.eigenvalues()(i);          // node on [-1, 1]
    const double w = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    rule.points[i] = 0.5 * (x + 1.0);
    rule.weights[i] = 0.5 * w;
  }
  return rule;
}

}  // namespace tebeam
