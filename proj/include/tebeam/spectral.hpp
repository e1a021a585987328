#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tebeam/generator.hpp"

namespace tebeam {

struct SingularResolvent : NumericalError {
  using NumericalError::NumericalError;
};

/// Dense materialization of the evolution operator together with its
/// similarity transform into energy-orthonormal coordinates
/// (F = upper Cholesky factor of the block metric, frame = F A F^-1).
/// Euclidean norms in the frame equal energy norms of states.
class DenseOperator {
 public:
  explicit DenseOperator(const Generator& gen);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const Eigen::MatrixXd& energy_frame() const { return frame_; }

  /// Energy norm of a flat (q, p, theta) coefficient vector.
  double energy_norm(const Eigen::VectorXcd& state) const;

 private:
  Eigen::MatrixXd matrix_;
  Eigen::MatrixXd frame_;
  Eigen::MatrixXd chol_;  // lower factor of the block metric
};

struct EigenResult {
  std::vector<std::complex<double>> eigenvalues;  ///< sorted by |Im|, then Im, then Re
  double spectral_abscissa = 0.0;
  double omega_max = 0.0;  ///< largest |Im|
  int dim = 0;
  int n_beam = 0;
  int n_heat = 0;
  std::string config_hash;
};

struct EigenPairs {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  ///< columns, in the raw (q, p, theta) coordinates
};

/// Full dense eigensolve of the materialized generator. Throws when the
/// state dimension exceeds `dense_limit`.
EigenResult eigenvalues(const Generator& gen, int dense_limit = 3000);
EigenResult eigenvalues(const DenseOperator& op, int dense_limit = 3000);
EigenPairs eigenpairs(const DenseOperator& op, int dense_limit = 3000);

/// Energy-norm resolvent r(lambda) = ||(i lambda - A)^-1||, computed as
/// the reciprocal smallest singular value of the shifted energy-frame
/// matrix. Throws SingularResolvent when the shift is singular to
/// tolerance (condition above 1e14, i.e. lambda sits at an eigenvalue).
double resolvent_norm(const DenseOperator& op, double lambda);
double resolvent_norm(const Generator& gen, double lambda);

struct ResolventScan {
  std::vector<double> lambdas;  ///< accepted sample points
  std::vector<double> norms;    ///< r(lambda)
  std::vector<double> scaled;   ///< r(lambda) / lambda^ell
  std::vector<double> skipped;  ///< grid points rejected as eigenvalue collisions
  int ell = 1;
  std::string config_hash;
};

/// Samples r on the grid (parallel over grid points). Grid must be
/// positive and increasing; ell in {1, 2}.
ResolventScan resolvent_scan(const DenseOperator& op, const std::vector<double>& grid, int ell,
                             int threads = 1);

/// Logarithmic grid on [lo, hi]. The default scan band is
/// [0.1, omega_max/3] with 200 points; the /3 cap keeps the scan inside
/// the mesh-resolved frequency range.
std::vector<double> log_grid(double lo, double hi, int points);

struct BranchFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< rms in log space
  int count = 0;
};

/// Least-squares slope of log(-Re) vs log(Im) over the eigenvalues with
/// Im in [im_lo, im_hi], Im > 0 and Re < 0. Needs at least 5 such
/// points. A diagnostic only; nothing asserts eigenvalue asymptotics.
BranchFit branch_fit(const EigenResult& eig, double im_lo, double im_hi);

}  // namespace tebeam
