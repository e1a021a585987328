#include "tebeam/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "tebeam/detail/least_squares.hpp"

namespace tebeam {

DenseOperator::DenseOperator(const Generator& gen) {
  const auto& sys = gen.system();
  const int nb = gen.beam_dofs();
  const int nth = gen.heat_dofs();
  const int n = 2 * nb + nth;
  const double g = gen.gamma();

  Eigen::LLT<Eigen::MatrixXd> mb(sys.beam_mass), mth(sys.heat_mass), kb(sys.beam_stiffness);
  if (mb.info() != Eigen::Success || mth.info() != Eigen::Success || kb.info() != Eigen::Success) {
    throw NumericalError("dense operator: metric block not positive definite");
  }

  matrix_ = Eigen::MatrixXd::Zero(n, n);
  matrix_.block(0, nb, nb, nb).setIdentity();
  matrix_.block(nb, 0, nb, nb) = -mb.solve(sys.beam_stiffness);
  matrix_.block(nb, 2 * nb, nb, nth) = g * mb.solve(sys.coupling.transpose());
  matrix_.block(2 * nb, nb, nth, nb) = -g * mth.solve(sys.coupling);
  matrix_.block(2 * nb, 2 * nb, nth, nth) = -mth.solve(sys.heat_stiffness);

  chol_ = Eigen::MatrixXd::Zero(n, n);
  chol_.topLeftCorner(nb, nb) = kb.matrixL();
  chol_.block(nb, nb, nb, nb) = mb.matrixL();
  chol_.bottomRightCorner(nth, nth) = mth.matrixL();

  // frame = L^T A L^-T
  const Eigen::MatrixXd lta = chol_.transpose() * matrix_;
  frame_ = chol_.triangularView<Eigen::Lower>().solve(lta.transpose()).transpose();
}

double DenseOperator::energy_norm(const Eigen::VectorXcd& state) const {
  return (chol_.transpose().cast<std::complex<double>>() * state).norm();
}

EigenPairs eigenpairs(const DenseOperator& op, int dense_limit) {
  if (op.dim() > dense_limit) {
    throw std::invalid_argument("eigenvalues: state dimension exceeds the dense limit");
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(op.matrix(), true);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalues: dense eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

EigenResult collect_result(const Eigen::VectorXcd& values, int nb, int nth) {
  EigenResult result;
  result.dim = static_cast<int>(values.size());
  result.n_beam = nb;
  result.n_heat = nth;
  result.eigenvalues.resize(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) result.eigenvalues[i] = values(i);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              const double ia = std::abs(a.imag()), ib = std::abs(b.imag());
              if (ia != ib) return ia < ib;
              if (a.imag() != b.imag()) return a.imag() < b.imag();
              return a.real() < b.real();
            });
  result.spectral_abscissa = -std::numeric_limits<double>::infinity();
  for (const auto& ev : result.eigenvalues) {
    result.spectral_abscissa = std::max(result.spectral_abscissa, ev.real());
    result.omega_max = std::max(result.omega_max, std::abs(ev.imag()));
  }
  return result;
}

}  // namespace

EigenResult eigenvalues(const DenseOperator& op, int dense_limit) {
  if (op.dim() > dense_limit) {
    throw std::invalid_argument("eigenvalues: state dimension exceeds the dense limit");
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(op.matrix(), false);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalues: dense eigensolver failed");
  return collect_result(es.eigenvalues(), 0, 0);
}

EigenResult eigenvalues(const Generator& gen, int dense_limit) {
  const DenseOperator op(gen);
  EigenResult result = eigenvalues(op, dense_limit);
  result.n_beam = gen.beam_dofs();
  result.n_heat = gen.heat_dofs();
  return result;
}

double resolvent_norm(const DenseOperator& op, double lambda) {
  Eigen::MatrixXcd shifted = (-op.energy_frame()).cast<std::complex<double>>();
  shifted.diagonal().array() += std::complex<double>(0.0, lambda);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(shifted);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || smax / smin > 1e14) {
    throw SingularResolvent("resolvent: shift is singular to tolerance (lambda at an eigenvalue)");
  }
  return 1.0 / smin;
}

double resolvent_norm(const Generator& gen, double lambda) {
  return resolvent_norm(DenseOperator(gen), lambda);
}

ResolventScan resolvent_scan(const DenseOperator& op, const std::vector<double>& grid, int ell,
                             int threads) {
  if (grid.empty()) throw std::invalid_argument("resolvent_scan: empty grid");
  if (ell != 1 && ell != 2) throw std::invalid_argument("resolvent_scan: ell must be 1 or 2");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("resolvent_scan: grid must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("resolvent_scan: grid must be increasing");
    }
  }

  std::vector<double> norms(grid.size(), 0.0);
  std::vector<char> ok(grid.size(), 0);

  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const int nthreads = std::clamp(threads, 1, hw);
  auto worker = [&](std::size_t first) {
    for (std::size_t i = first; i < grid.size(); i += static_cast<std::size_t>(nthreads)) {
      try {
        norms[i] = resolvent_norm(op, grid[i]);
        ok[i] = 1;
      } catch (const SingularResolvent&) {
        ok[i] = 0;
      }
    }
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, static_cast<std::size_t>(t));
    for (auto& th : pool) th.join();
  }

  ResolventScan scan;
  scan.ell = ell;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!ok[i]) {
      scan.skipped.push_back(grid[i]);
      continue;
    }
    scan.lambdas.push_back(grid[i]);
    scan.norms.push_back(norms[i]);
    scan.scaled.push_back(norms[i] / std::pow(grid[i], ell));
  }
  return scan;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("log_grid: need 0 < lo <= hi");
  if (points < 1) throw std::invalid_argument("log_grid: need at least 1 point");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < points; ++i) {
    grid[i] = lo * std::exp(ratio * static_cast<double>(i) / (points - 1));
  }
  grid.back() = hi;
  return grid;
}

BranchFit branch_fit(const EigenResult& eig, double im_lo, double im_hi) {
  std::vector<double> xs, ys;
  for (const auto& ev : eig.eigenvalues) {
    if (ev.imag() > 0.0 && ev.real() < 0.0 && ev.imag() >= im_lo && ev.imag() <= im_hi) {
      xs.push_back(std::log(ev.imag()));
      ys.push_back(std::log(-ev.real()));
    }
  }
  if (xs.size() < 5) {
    throw std::invalid_argument("branch_fit: need at least 5 eigenvalues in the band");
  }
  const detail::LineFit fit = detail::fit_line(xs, ys);
  return {fit.slope, fit.intercept, fit.rms_residual, static_cast<int>(xs.size())};
}

}  // namespace tebeam
