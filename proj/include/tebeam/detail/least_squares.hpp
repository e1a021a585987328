#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tebeam::detail {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

/// Ordinary least squares through (x, y) pairs.
inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need at least 2 matching points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace tebeam::detail
