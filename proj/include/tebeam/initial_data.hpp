#pragma once

#include <string>
#include <vector>

namespace tebeam {

/// Named closed-form expression plus coefficients. The preset family is
/// fixed; there is no general expression parser.
struct FieldSpec {
  std::string preset = "zero";
  std::vector<double> coeffs;
};

/// Initial data for the coupled system. `displacement` and `velocity`
/// each describe a (u, y) pair across both spans; `temperature`
/// describes theta on [0, L0]. Every preset satisfies the clamped-end,
/// interface-continuity and theta-Dirichlet conditions by construction.
///
/// Displacement/velocity presets:
///   "zero"
///   "poly-clamped"    u = c1 x^2 (x - L0)^2,  y = c2 (x - L0)^2 (x - L)^2
///   "matched-spline"  u = c x^2, y = cubic Hermite blend of the interface
///                     value/slope down to zero value and slope at L
/// Temperature presets:
///   "zero"
///   "sine-bump"       theta = c sin(pi x / L0)
struct InitialData {
  FieldSpec displacement;
  FieldSpec velocity;
  FieldSpec temperature;
};

struct ValueSlope {
  double value = 0.0;
  double slope = 0.0;
};

/// Evaluate the u-part of a displacement pair at x in [0, L0].
ValueSlope eval_span1(const FieldSpec& f, double x, double L0, double L);

/// Evaluate the y-part of a displacement pair at x in [L0, L].
ValueSlope eval_span2(const FieldSpec& f, double x, double L0, double L);

double eval_temperature(const FieldSpec& f, double x, double L0);

/// Numerically checks the endpoint and interface conditions of the data
/// (tolerance 1e-14 relative to the data's amplitude). Returns one
/// message per violated condition.
std::vector<std::string> check_initial_data(const InitialData& d, double L0, double L);

}  // namespace tebeam
