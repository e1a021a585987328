#include "tebeam/params.hpp"

#include <cmath>
#include <stdexcept>

namespace tebeam {

std::vector<Violation> validate(const PhysicalParams& p) {
  std::vector<Violation> out;

  auto positive = [&out](const char* name, double v) {
    if (!std::isfinite(v)) {
      out.push_back({name, std::string(name) + " must be finite"});
    } else if (v <= 0.0) {
      out.push_back({name, std::string(name) + " must be > 0"});
    }
  };

  positive("rho1", p.rho1);
  positive("rho2", p.rho2);
  positive("alpha1", p.alpha1);
  positive("alpha2", p.alpha2);
  positive("beta1", p.beta1);
  positive("beta2", p.beta2);
  positive("rho0", p.rho0);
  positive("kappa", p.kappa);

  if (!std::isfinite(p.L0) || !std::isfinite(p.L) || !(0.0 < p.L0 && p.L0 < p.L)) {
    out.push_back({"L0", "require 0 < L0 < L"});
  }

  if (!std::isfinite(p.gamma)) {
    out.push_back({"gamma", "gamma must be finite"});
  } else if (p.gamma == 0.0) {
    out.push_back({"gamma",
                   "gamma = 0 decouples the heat field; running the conservative oracle mode",
                   Severity::Warning});
  }
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    if (v.severity == Severity::Error) return true;
  }
  return false;
}

RegimeClass classify_regime(const PhysicalParams& p) {
  if (p.rho1 >= p.rho2 && p.alpha1 >= p.alpha2) return {Regime::Fast, 1};
  return {Regime::Slow, 2};
}

double rayleigh_dispersion(double rho, double alpha, double beta, double span, int n) {
  if (!(rho > 0.0) || !(beta > 0.0) || !(span > 0.0) || !(alpha >= 0.0)) {
    throw std::invalid_argument("rayleigh_dispersion: rho, beta, span must be > 0 and alpha >= 0");
  }
  if (n < 1) throw std::invalid_argument("rayleigh_dispersion: mode index must be >= 1");
  const double k = static_cast<double>(n) * M_PI / span;
  const double k2 = k * k;
  return std::sqrt(beta * k2 * k2 / (rho + alpha * k2));
}

}  // namespace tebeam
