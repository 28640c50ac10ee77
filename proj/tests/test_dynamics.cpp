#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "circumnav/dynamics.hpp"
#include "oracles.hpp"

using namespace circumnav;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;

double endpoint_error(const UavState& a, const UavState& b) {
  return (a.position - b.position).norm();
}
}  // namespace

TEST_CASE("unicycle state rate", "[dynamics]") {
  const auto r1 = derivative({{0, 0}, 0.0}, 1.0, 0.0);
  CHECK(r1.x_dot == Approx(1.0));
  CHECK(r1.y_dot == Approx(0.0).margin(1e-15));
  CHECK(r1.psi_dot == 0.0);

  const auto r2 = derivative({{0, 0}, pi / 2}, 1.0, 0.5);
  CHECK(r2.x_dot == Approx(0.0).margin(1e-15));
  CHECK(r2.y_dot == Approx(1.0));
  CHECK(r2.psi_dot == 0.5);

  const auto r3 = derivative({{0, 0}, pi / 4}, 2.0, -1.0);
  CHECK(r3.x_dot == Approx(std::sqrt(2.0)));
  CHECK(r3.y_dot == Approx(std::sqrt(2.0)));
  CHECK(r3.psi_dot == -1.0);

  CHECK_THROWS_AS(derivative({{0, 0}, 0.0}, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(derivative({{0, 0}, 0.0}, 1.0, std::nan("")), std::invalid_argument);
}

TEST_CASE("straight-line motion is exact for both schemes", "[dynamics]") {
  const UavState start{{1, 2}, 0.0};
  const UavState rk4 = step(start, 1.0, 0.0, {0.01, IntegrationScheme::RK4});
  CHECK(rk4.position.x == Approx(1.01).margin(1e-15));
  CHECK(rk4.position.y == Approx(2.0).margin(1e-15));
  CHECK(rk4.heading == 0.0);

  const UavState euler = step(start, 1.0, 0.0, {0.01, IntegrationScheme::Euler});
  CHECK(euler.position.x == rk4.position.x);
  CHECK(euler.position.y == rk4.position.y);
  CHECK(euler.heading == rk4.heading);
}

TEST_CASE("single RK4 step tracks the closed-form arc", "[dynamics]") {
  const UavState start{{3, -1}, 0.7};
  const UavState expected = oracles::exact_arc(start, 1.0, 0.1, 0.01);
  const UavState got = step(start, 1.0, 0.1, {0.01, IntegrationScheme::RK4});
  CHECK(endpoint_error(got, expected) < 1e-12);
  CHECK(got.heading == Approx(expected.heading).margin(1e-12));

  // coarser step, larger rate: local error stays O(dt^5)
  const UavState e2 = oracles::exact_arc(start, 1.0, 0.5, 0.1);
  const UavState g2 = step(start, 1.0, 0.5, {0.1, IntegrationScheme::RK4});
  CHECK(endpoint_error(g2, e2) < 1e-8);
}

TEST_CASE("halving dt shrinks the arc endpoint error by >= 8x", "[dynamics]") {
  const UavState start{{0, 0}, 0.3};
  const double speed = 1.0, omega = 0.5, horizon = 20.0;
  const UavState exact = oracles::exact_arc(start, speed, omega, horizon);

  double prev_error = 0.0;
  for (int level = 0; level < 3; ++level) {
    const double dt = 0.2 / (1 << level);
    const auto n = static_cast<int>(std::llround(horizon / dt));
    UavState s = start;
    for (int i = 0; i < n; ++i) s = step(s, speed, omega, {dt, IntegrationScheme::RK4});
    const double err = endpoint_error(s, exact);
    if (level > 0) REQUIRE(prev_error / err >= 8.0);
    prev_error = err;
  }
}

TEST_CASE("step never travels farther than V*dt", "[dynamics]") {
  const UavState start{{0, 0}, 1.1};
  for (double omega : {0.0, 0.05, -0.3, 2.0}) {
    for (double dt : {0.001, 0.01, 0.1}) {
      const UavState s = step(start, 2.0, omega, {dt, IntegrationScheme::RK4});
      const double dist = (s.position - start.position).norm();
      REQUIRE(dist <= 2.0 * dt + 1e-12);
      if (omega == 0.0) REQUIRE(dist == Approx(2.0 * dt).margin(1e-9));
    }
  }
}

TEST_CASE("identical inputs step to bit-identical outputs", "[dynamics]") {
  const UavState start{{5, -3}, 2.2};
  const UavState a = step(start, 1.3, -0.07, {0.01, IntegrationScheme::RK4});
  const UavState b = step(start, 1.3, -0.07, {0.01, IntegrationScheme::RK4});
  CHECK(a.position.x == b.position.x);
  CHECK(a.position.y == b.position.y);
  CHECK(a.heading == b.heading);
}

TEST_CASE("heading is re-wrapped after each step", "[dynamics]") {
  UavState s{{0, 0}, 6.2};
  for (int i = 0; i < 2000; ++i) {
    s = step(s, 1.0, 0.5, {0.1, IntegrationScheme::RK4});
    REQUIRE(s.heading >= 0.0);
    REQUIRE(s.heading < kTwoPi);
  }
}
