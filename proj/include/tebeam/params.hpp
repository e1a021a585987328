#pragma once

#include <string>
#include <vector>

namespace tebeam {

/// Physical constants of the two-span beam/heat system.
///
/// Span 1 (thermoelastic) occupies [0, L0], span 2 (purely elastic)
/// occupies [L0, L]. The heat field lives on span 1 only.
struct PhysicalParams {
  double rho1 = 1.0;    ///< mass density, span 1
  double rho2 = 1.0;    ///< mass density, span 2
  double alpha1 = 1.0;  ///< rotary inertia, span 1
  double alpha2 = 1.0;  ///< rotary inertia, span 2
  double beta1 = 1.0;   ///< flexural stiffness, span 1
  double beta2 = 1.0;   ///< flexural stiffness, span 2
  double rho0 = 1.0;    ///< specific heat
  double kappa = 1.0;   ///< thermal conductivity
  double gamma = 1.0;   ///< thermoelastic coupling; 0 = decoupled oracle mode
  double L0 = 0.5;      ///< interface position
  double L = 1.0;       ///< total length
};

enum class Severity { Error, Warning };

struct Violation {
  std::string field;
  std::string message;
  Severity severity = Severity::Error;
};

/// Checks positivity/ordering constraints, one entry per violated
/// invariant. gamma == 0 produces a warning (decoupled conservative
/// mode), never an error.
std::vector<Violation> validate(const PhysicalParams& p);

/// True when validate() reported at least one hard error.
bool has_errors(const std::vector<Violation>& violations);

enum class Regime { Fast, Slow };

/// Expected decay regime. Fast (ell = 1, energy ~ t^-2) requires
/// rho1 >= rho2 and alpha1 >= alpha2; slow (ell = 2, energy ~ t^-1)
/// otherwise.
struct RegimeClass {
  Regime tag = Regime::Fast;
  int ell = 1;
};

RegimeClass classify_regime(const PhysicalParams& p);

/// Angular frequency of the n-th pinned-pinned mode of a single
/// Rayleigh beam: omega^2 = beta k^4 / (rho + alpha k^2), k = n pi / span.
/// alpha = 0 recovers the Euler-Bernoulli beam.
double rayleigh_dispersion(double rho, double alpha, double beta, double span, int n);

}  // namespace tebeam
