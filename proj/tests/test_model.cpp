#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>

#include "tebeam/initial_data.hpp"
#include "tebeam/params.hpp"

using namespace tebeam;

TEST_SUITE_BEGIN("model");

TEST_CASE("validate accepts the unit parameter set") {
  PhysicalParams p;  // all 1.0, L0=0.5, L=1.0
  CHECK(validate(p).empty());
}

TEST_CASE("validate reports positivity violations by field") {
  PhysicalParams p;
  p.kappa = 0.0;
  const auto v = validate(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "kappa must be > 0");
  CHECK(v[0].field == "kappa");
  CHECK(has_errors(v));
}

TEST_CASE("validate rejects a degenerate interface") {
  PhysicalParams p;
  p.L0 = 1.0;
  p.L = 1.0;
  const auto v = validate(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "require 0 < L0 < L");
}

TEST_CASE("gamma = 0 is a warning, not an error") {
  PhysicalParams p;
  p.gamma = 0.0;
  const auto v = validate(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].severity == Severity::Warning);
  CHECK(!has_errors(v));
}

TEST_CASE("validate flags non-finite entries") {
  PhysicalParams p;
  p.rho2 = std::nan("");
  p.gamma = std::numeric_limits<double>::infinity();
  const auto v = validate(p);
  CHECK(v.size() == 2);
  CHECK(has_errors(v));
}

TEST_CASE("regime classification follows the coefficient orderings") {
  PhysicalParams p;
  p.rho1 = 2;
  p.rho2 = 1;
  p.alpha1 = 2;
  p.alpha2 = 1;
  CHECK(classify_regime(p).tag == Regime::Fast);
  CHECK(classify_regime(p).ell == 1);

  PhysicalParams eq;  // equality satisfies >=
  CHECK(classify_regime(eq).tag == Regime::Fast);

  PhysicalParams s;
  s.rho1 = 1;
  s.rho2 = 2;
  s.alpha1 = 2;
  s.alpha2 = 1;
  CHECK(classify_regime(s).tag == Regime::Slow);
  CHECK(classify_regime(s).ell == 2);

  // Pure function of the comparisons: rescaling everything else is inert.
  s.beta1 = 17.0;
  s.kappa = 0.01;
  CHECK(classify_regime(s).tag == Regime::Slow);
}

TEST_CASE("dispersion: Euler-Bernoulli limit at alpha = 0") {
  for (int n = 1; n <= 4; ++n) {
    const double k = n * M_PI / 2.0;
    CHECK(rayleigh_dispersion(1.0, 0.0, 1.0, 2.0, n) == doctest::Approx(k * k).epsilon(1e-14));
  }
}

TEST_CASE("dispersion: unit-parameter value on a pi span") {
  CHECK(rayleigh_dispersion(1.0, 1.0, 1.0, M_PI, 1) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-15));
}

TEST_CASE("dispersion: strictly increasing in the mode index") {
  const double rho = 2.3, alpha = 0.7, beta = 1.9, span = 1.3;
  double prev = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const double w = rayleigh_dispersion(rho, alpha, beta, span, n);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("dispersion satisfies its defining identity to round-off") {
  const double rho = 1.7, alpha = 0.4, beta = 3.1, span = 0.9;
  for (int n = 1; n <= 50; ++n) {
    const double w = rayleigh_dispersion(rho, alpha, beta, span, n);
    const double k2 = std::pow(n * M_PI / span, 2);
    const double residual = w * w * (rho + alpha * k2) - beta * k2 * k2;
    CHECK(std::abs(residual) <= 1e-12 * beta * k2 * k2);
  }
}

TEST_CASE("dispersion rejects bad input") {
  CHECK_THROWS_AS(rayleigh_dispersion(0.0, 1.0, 1.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_dispersion(1.0, -1.0, 1.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_dispersion(1.0, 1.0, 1.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("every shipped preset satisfies the data invariants") {
  const double L0 = 0.5, L = 1.25;
  InitialData d;
  d.displacement = {"poly-clamped", {2.0, -1.5}};
  d.velocity = {"matched-spline", {0.7}};
  d.temperature = {"sine-bump", {3.0}};
  CHECK(check_initial_data(d, L0, L).empty());

  d.displacement = {"matched-spline", {1.0}};
  d.velocity = {"zero", {}};
  d.temperature = {"zero", {}};
  CHECK(check_initial_data(d, L0, L).empty());
}

TEST_CASE("matched-spline blends the interface value and slope") {
  const double L0 = 0.5, L = 1.0, c = 2.0;
  FieldSpec f{"matched-spline", {c}};
  const auto u = eval_span1(f, L0, L0, L);
  const auto y = eval_span2(f, L0, L0, L);
  CHECK(u.value == doctest::Approx(c * L0 * L0));
  CHECK(u.slope == doctest::Approx(2 * c * L0));
  CHECK(y.value == doctest::Approx(u.value));
  CHECK(y.slope == doctest::Approx(u.slope));
  const auto end = eval_span2(f, L, L0, L);
  CHECK(std::abs(end.value) < 1e-14);
  CHECK(std::abs(end.slope) < 1e-14);
}

TEST_CASE("unknown presets are rejected") {
  CHECK_THROWS_AS(eval_span1({"wavelet", {}}, 0.1, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_temperature({"gaussian", {}}, 0.1, 0.5), std::invalid_argument);
}

TEST_SUITE_END();
