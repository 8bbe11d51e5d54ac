#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sgdq/diagnostics.hpp"
#include "sgdq/grid_field.hpp"
#include "sgdq/spline_weights.hpp"

using namespace sgdq;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("error norms: exact cases and ordering") {
  const UniformGrid g = build_grid(-7.0, 7.0, -7.0, 7.0, 29, 29);

  SUBCASE("identical fields give zero errors and carry the labels") {
    const Field f = sample(g, [](double x, double y) { return std::sin(x) * y; });
    const ErrorReport r = error_norms(f, f, 3.5, 0.01);
    CHECK(r.l_inf == 0.0);
    CHECK(r.rms == 0.0);
    CHECK(r.time == 3.5);
    CHECK(r.dt == 0.01);
    CHECK(r.nx == 29);
    CHECK(r.ny == 29);
  }

  SUBCASE("a single differing node fixes both norms") {
    const Field a(g);
    Field b(g);
    b(11, 4) = -0.375;
    const ErrorReport r = error_norms(a, b);
    CHECK(r.l_inf == 0.375);
    CHECK(r.rms == doctest::Approx(0.375 / 29.0).epsilon(1e-14));  // sqrt(29*29) = 29
  }

  SUBCASE("max norm dominates the quadratic mean") {
    const Field a = sample(g, [](double x, double y) { return std::cos(x + y); });
    const Field b = sample(g, [](double x, double y) { return std::cos(x + y) + 0.01 * x * y; });
    const ErrorReport r = error_norms(a, b);
    CHECK(r.l_inf >= r.rms);
    CHECK(r.l_inf > 0.0);
  }

  SUBCASE("grid mismatch is rejected") {
    const Field a(g);
    const Field b(build_grid(0.0, 1.0, 0.0, 1.0, 5, 5));
    CHECK_THROWS_AS(error_norms(a, b), std::invalid_argument);
  }
}

TEST_CASE("ring radius: crest location along the axis") {
  const UniformGrid g = build_grid(-7.0, 7.0, -7.0, 7.0, 29, 29);  // y=0 is a node

  SUBCASE("the initial ring profile peaks at radius three") {
    const Field u = sample(g, [](double x, double y) {
      return 4.0 * std::atan(std::exp(3.0 - std::sqrt(x * x + y * y)));
    });
    const RingDiagnostic r = ring_radius(u, 0.0);
    CHECK(r.radius == 3.0);
    CHECK(r.amplitude == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(!r.degenerate);
    CHECK(r.time == 0.0);
  }

  SUBCASE("flat fields are flagged degenerate") {
    const Field zero(g);
    const RingDiagnostic r0 = ring_radius(zero);
    CHECK(r0.degenerate);
    CHECK(r0.amplitude <= 1e-12);

    // full rotation of the phase looks flat to the half-angle probe too
    const Field wrapped = sample(g, [](double, double) { return 2.0 * kPi; });
    CHECK(ring_radius(wrapped).degenerate);
  }

  SUBCASE("ties go to the smaller positive x") {
    Field u(g);
    u(18, 14) = kPi;  // x = 2, y = 0
    u(24, 14) = kPi;  // x = 5, y = 0
    const RingDiagnostic r = ring_radius(u);
    CHECK(r.radius == 2.0);
  }

  SUBCASE("a grid without positive x nodes is rejected") {
    const Field u(build_grid(-3.0, -1.0, -1.0, 1.0, 5, 5));
    CHECK_THROWS_AS(ring_radius(u), std::invalid_argument);
  }
}

TEST_CASE("diagonal radii separate the two ring axes") {
  const UniformGrid g = build_grid(-7.0, 7.0, -7.0, 7.0, 29, 29);

  SUBCASE("a circular profile gives equal diagonals") {
    const Field u = sample(g, [](double x, double y) {
      return 4.0 * std::atan(std::exp(3.0 - std::sqrt(x * x + y * y)));
    });
    const DiagonalRadii r = diagonal_ring_radii(u);
    CHECK(r.along_y_eq_x == doctest::Approx(r.along_y_eq_minus_x).epsilon(1e-12));
    // nearest diagonal node to distance 3: x = y = 2 or 2.5
    CHECK(r.along_y_eq_x >= 2.0 * std::sqrt(2.0) - 1e-12);
    CHECK(r.along_y_eq_x <= 2.5 * std::sqrt(2.0) + 1e-12);
  }

  SUBCASE("an anisotropic profile splits them") {
    const Field u = sample(g, [](double x, double y) {
      const double arg = std::sqrt((x - y) * (x - y) / 3.0 + (x + y) * (x + y) / 2.0);
      return 4.0 * std::atan(std::exp(3.0 - arg));
    });
    const DiagonalRadii r = diagonal_ring_radii(u);
    CHECK(std::abs(r.along_y_eq_x - r.along_y_eq_minus_x) > 0.5);
    // the (x-y) direction divides by the larger constant, so that ring is wider
    CHECK(r.along_y_eq_minus_x > r.along_y_eq_x);
  }

  SUBCASE("needs a square symmetric grid") {
    const Field u(build_grid(-7.0, 7.0, -6.0, 6.0, 29, 29));
    CHECK_THROWS_AS(diagonal_ring_radii(u), std::invalid_argument);
  }
}

TEST_CASE("discrete energy: closed-form references") {
  const UniformGrid g = build_grid(-7.0, 7.0, -7.0, 7.0, 29, 29);
  const WeightSet w = build_weight_set(g);
  const ScalarFn one = [](double, double) { return 1.0; };

  SUBCASE("the zero state carries zero energy") {
    SolverState s;
    s.t = 1.0;
    s.u = Field(g);
    s.v = Field(g);
    const EnergyDiagnostic e = discrete_energy(s, w, one);
    CHECK(e.energy == 0.0);
    CHECK(e.time == 1.0);
  }

  SUBCASE("a flat phase of pi integrates the potential exactly") {
    // density is phi (1 - cos pi) = 2 over a 14 x 14 box: energy 392
    SolverState s;
    s.u = sample(g, [](double, double) { return kPi; });
    s.v = Field(g);
    const EnergyDiagnostic e = discrete_energy(s, w, one);
    CHECK(e.energy == doctest::Approx(392.0).epsilon(1e-9));
  }

  SUBCASE("a pure velocity field integrates v^2/2") {
    // v = 3 everywhere: density 4.5, box 196 -> 882; u = 0 adds nothing
    SolverState s;
    s.u = Field(g);
    s.v = Field(g, 3.0);
    const EnergyDiagnostic e = discrete_energy(s, w, one);
    CHECK(e.energy == doctest::Approx(882.0).epsilon(1e-12));
  }

  SUBCASE("scaling phi scales the potential part only") {
    SolverState s;
    s.u = sample(g, [](double, double) { return kPi; });
    s.v = Field(g);
    const ScalarFn half = [](double, double) { return 0.5; };
    const EnergyDiagnostic e = discrete_energy(s, w, half);
    CHECK(e.energy == doctest::Approx(196.0).epsilon(1e-9));
  }

  SUBCASE("input validation") {
    SolverState s;
    s.u = Field(g);
    s.v = Field(build_grid(0.0, 1.0, 0.0, 1.0, 5, 5));
    CHECK_THROWS_AS(discrete_energy(s, w, one), std::invalid_argument);
    s.v = Field(g);
    CHECK_THROWS_AS(discrete_energy(s, w, ScalarFn{}), std::invalid_argument);
  }
}
