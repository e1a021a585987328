#include "tebeam/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tebeam {

namespace {

double coeff(const FieldSpec& f, std::size_t i, double fallback) {
  return i < f.coeffs.size() ? f.coeffs[i] : fallback;
}

[[noreturn]] void unknown_preset(const char* kind, const std::string& name) {
  throw std::invalid_argument(std::string("unknown ") + kind + " preset '" + name + "'");
}

}  // namespace

ValueSlope eval_span1(const FieldSpec& f, double x, double L0, double /*L*/) {
  if (f.preset == "zero") return {};
  if (f.preset == "poly-clamped") {
    const double c1 = coeff(f, 0, 1.0);
    return {c1 * x * x * (x - L0) * (x - L0), c1 * 2.0 * x * (x - L0) * (2.0 * x - L0)};
  }
  if (f.preset == "matched-spline") {
    const double c = coeff(f, 0, 1.0);
    return {c * x * x, 2.0 * c * x};
  }
  unknown_preset("displacement", f.preset);
}

ValueSlope eval_span2(const FieldSpec& f, double x, double L0, double L) {
  if (f.preset == "zero") return {};
  if (f.preset == "poly-clamped") {
    const double c1 = coeff(f, 0, 1.0);
    const double c2 = coeff(f, 1, c1);
    return {c2 * (x - L0) * (x - L0) * (x - L) * (x - L),
            c2 * 2.0 * (x - L0) * (x - L) * (2.0 * x - L0 - L)};
  }
  if (f.preset == "matched-spline") {
    // Hermite blend from the interface value/slope of u = c x^2 to a
    // clamped right end.
    const double c = coeff(f, 0, 1.0);
    const double a = c * L0 * L0;
    const double b = 2.0 * c * L0;
    const double h = L - L0;
    const double s = (x - L0) / h;
    const double h00 = 1.0 + s * s * (-3.0 + 2.0 * s);
    const double h10 = s * (1.0 + s * (-2.0 + s));
    const double dh00 = s * (-6.0 + 6.0 * s);
    const double dh10 = 1.0 + s * (-4.0 + 3.0 * s);
    return {a * h00 + b * h * h10, a * dh00 / h + b * dh10};
  }
  unknown_preset("displacement", f.preset);
}

double eval_temperature(const FieldSpec& f, double x, double L0) {
  if (f.preset == "zero") return 0.0;
  if (f.preset == "sine-bump") return coeff(f, 0, 1.0) * std::sin(M_PI * x / L0);
  unknown_preset("temperature", f.preset);
}

std::vector<std::string> check_initial_data(const InitialData& d, double L0, double L) {
  std::vector<std::string> out;

  auto check_pair = [&](const FieldSpec& f, const char* name) {
    // Amplitude scale from a coarse sample of both spans.
    double scale = 1.0;
    for (int i = 0; i <= 16; ++i) {
      const double t = static_cast<double>(i) / 16.0;
      const ValueSlope a = eval_span1(f, t * L0, L0, L);
      const ValueSlope b = eval_span2(f, L0 + t * (L - L0), L0, L);
      scale = std::max({scale, std::abs(a.value), std::abs(b.value)});
    }
    const double tol = 1e-14 * scale;

    const ValueSlope left = eval_span1(f, 0.0, L0, L);
    const ValueSlope right = eval_span2(f, L, L0, L);
    const ValueSlope iface1 = eval_span1(f, L0, L0, L);
    const ValueSlope iface2 = eval_span2(f, L0, L0, L);
    if (std::abs(left.value) > tol) out.push_back(std::string(name) + ": u(0) != 0");
    if (std::abs(left.slope) > tol) out.push_back(std::string(name) + ": u_x(0) != 0");
    if (std::abs(right.value) > tol) out.push_back(std::string(name) + ": y(L) != 0");
    if (std::abs(right.slope) > tol) out.push_back(std::string(name) + ": y_x(L) != 0");
    if (std::abs(iface1.value - iface2.value) > tol)
      out.push_back(std::string(name) + ": u(L0) != y(L0)");
    if (std::abs(iface1.slope - iface2.slope) > tol)
      out.push_back(std::string(name) + ": u_x(L0) != y_x(L0)");
  };

  check_pair(d.displacement, "displacement");
  check_pair(d.velocity, "velocity");

  double tscale = 1.0;
  for (int i = 0; i <= 16; ++i) {
    tscale = std::max(tscale, std::abs(eval_temperature(d.temperature, L0 * i / 16.0, L0)));
  }
  if (std::abs(eval_temperature(d.temperature, 0.0, L0)) > 1e-14 * tscale)
    out.push_back("temperature: theta(0) != 0");
  if (std::abs(eval_temperature(d.temperature, L0, L0)) > 1e-14 * tscale)
    out.push_back("temperature: theta(L0) != 0");
  return out;
}

}  // namespace tebeam
