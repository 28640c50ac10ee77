#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "circumnav/geometry.hpp"
#include "oracles.hpp"

using namespace circumnav;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("wrap_angle maps onto [0, 2*pi)", "[geometry]") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(-pi / 2) == Approx(3 * pi / 2).margin(1e-15));
  CHECK(wrap_angle(5 * pi) == Approx(pi).margin(1e-12));
  CHECK(wrap_angle(kTwoPi) == Approx(0.0).margin(1e-15));
  CHECK(wrap_angle(-1e-18) < kTwoPi);  // must not round up onto 2*pi

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double a = (static_cast<double>(rng()) / 1.8e19 - 0.5) * 1e3;
    const double w = wrap_angle(a);
    REQUIRE(w >= 0.0);
    REQUIRE(w < kTwoPi);
    REQUIRE(std::remainder(w - a, kTwoPi) == Approx(0.0).margin(1e-9));
  }

  CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("relative geometry of canonical poses", "[geometry]") {
  SECTION("heading directly at the target") {
    const auto g = relative_geometry({{0, 0}, 0.0}, {10, 0}, 1.0);
    CHECK(g.range == Approx(10.0));
    CHECK(g.bearing == Approx(0.0).margin(1e-15));
    CHECK(g.range_rate == Approx(-1.0));
  }
  SECTION("heading perpendicular to the line of sight") {
    const auto g = relative_geometry({{0, 0}, 0.0}, {0, -10}, 1.0);
    CHECK(g.range == Approx(10.0));
    CHECK(g.bearing == Approx(pi / 2));
    CHECK(g.range_rate == Approx(0.0).margin(1e-15));
  }
  SECTION("oblique pose, against the finite-difference oracle") {
    const UavState s{{3, 4}, 0.0};
    const auto g = relative_geometry(s, {0, 0}, 1.0);
    CHECK(g.range == Approx(5.0));
    CHECK(g.bearing == Approx(2.2142974355881810));
    CHECK(g.range_rate == Approx(0.6).margin(1e-12));
    CHECK(g.range_rate == Approx(oracles::fd_range_rate(s, {0, 0}, 1.0)).margin(1e-9));
  }
}

TEST_CASE("range rate identity and finite-difference slope", "[geometry]") {
  std::mt19937_64 rng(11);
  auto u = [&](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < 200; ++i) {
    const UavState s{{u(-50, 50), u(-50, 50)}, u(0, kTwoPi)};
    const Vec2 target{u(-50, 50), u(-50, 50)};
    if ((target - s.position).norm() < 1e-3) continue;
    const double speed = u(0.1, 5.0);
    const auto g = relative_geometry(s, target, speed);
    REQUIRE(g.range > 0.0);
    REQUIRE(std::abs(g.range_rate) <= speed + 1e-12);
    REQUIRE(g.range_rate == Approx(-speed * std::cos(g.bearing)).margin(1e-12));
    REQUIRE(g.range_rate ==
            Approx(oracles::fd_range_rate(s, target, speed)).margin(1e-6 * speed));
  }
}

TEST_CASE("bearing is invariant under rigid motions", "[geometry]") {
  std::mt19937_64 rng(13);
  auto u = [&](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < 200; ++i) {
    const UavState s{{u(-20, 20), u(-20, 20)}, u(0, kTwoPi)};
    const Vec2 target{u(-20, 20), u(-20, 20)};
    if ((target - s.position).norm() < 1e-3) continue;
    const auto base = relative_geometry(s, target, 1.0);

    const Vec2 shift{u(-100, 100), u(-100, 100)};
    const double rot = u(0, kTwoPi);
    const auto transform = [&](const Vec2& p) {
      return Vec2{std::cos(rot) * p.x - std::sin(rot) * p.y + shift.x,
                  std::sin(rot) * p.x + std::cos(rot) * p.y + shift.y};
    };
    const UavState moved{transform(s.position), wrap_angle(s.heading + rot)};
    const auto g = relative_geometry(moved, transform(target), 1.0);
    REQUIRE(g.bearing == Approx(base.bearing).margin(1e-9));
    REQUIRE(g.range == Approx(base.range).margin(1e-9));
  }
}

TEST_CASE("relative_geometry rejects coincident vehicle and target", "[geometry]") {
  CHECK_THROWS_AS(relative_geometry({{1, 2}, 0.0}, {1, 2}, 1.0), std::domain_error);
  CHECK_THROWS_AS(relative_geometry({{0, 0}, 0.0}, {1, 0}, 0.0), std::invalid_argument);
}

TEST_CASE("tangent heading cosine", "[geometry]") {
  CHECK(tangent_cos(10.0, 10.0) == 0.0);
  CHECK(tangent_cos(20.0, 10.0) == Approx(-0.8660254037844386));
  // at the smooth law's equilibrium radius for r_d = 10, k = 0.01 the value
  // is -(sqrt(2) - 1)
  CHECK(tangent_cos(10.986841134678100, 10.0) == Approx(-0.4142135623730950).margin(1e-6));
  CHECK_THROWS_AS(tangent_cos(9.999, 10.0), std::domain_error);
  CHECK_THROWS_AS(tangent_cos(10.0, 0.0), std::domain_error);
}

TEST_CASE("tangent_cos matches the trig form and the circle identity", "[geometry]") {
  for (double r_d : {0.5, 1.0, 10.0, 42.0}) {
    for (double factor : {1.0, 1.0 + 1e-12, 1.001, 1.1, 2.0, 10.0, 1e4}) {
      const double r = r_d * factor;
      const double tc = tangent_cos(r, r_d);
      REQUIRE(tc <= 0.0);
      REQUIRE(tc >= -1.0);
      REQUIRE(tc == Approx(std::cos(pi - std::asin(r_d / r))).margin(1e-12));
      const double q = r_d / r;
      REQUIRE(tc * tc + q * q == Approx(1.0).margin(1e-12));
    }
  }
  // monotone decreasing toward -1 as r grows
  double prev = tangent_cos(10.0, 10.0);
  for (double r = 11.0; r < 1e5; r *= 3.0) {
    const double tc = tangent_cos(r, 10.0);
    REQUIRE(tc < prev);
    prev = tc;
  }
  CHECK(prev > -1.0);
  CHECK(prev == Approx(-1.0).margin(1e-6));
}
