#pragma once

#include <vector>

namespace tebeam {

/// Gauss-Legendre rule mapped to [0, 1]; exact for polynomials of degree
/// <= 2*points - 1. Weights sum to 1.
struct GaussRule {
  std::vector<double> points;
  std::vector<double> weights;
};

GaussRule gauss_legendre_01(int points);

}  // namespace tebeam
