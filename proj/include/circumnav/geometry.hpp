#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circumnav {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Planar position or displacement, meters.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
  constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

  double norm() const { return std::hypot(x, y); }
};

/// Unicycle pose. The heading is kept wrapped to [0, 2*pi) by everything
/// that produces states (integrator, samplers); consumers may rely on it.
struct UavState {
  Vec2 position;
  double heading = 0.0;  // radians
};

/// Wraps an angle to [0, 2*pi).
inline double wrap_angle(double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("wrap_angle: non-finite angle");
  }
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod of a tiny negative can round back up
  return w;
}

/// Signed angular distance from b to a, in (-pi, pi].
inline double angle_diff(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  return d;
}

/// Target-relative view of the vehicle.
///
/// bearing is the counterclockwise angle from the vehicle->target line of
/// sight to the current heading, in [0, 2*pi). For a static target the range
/// rate satisfies range_rate = -V*cos(bearing).
struct RelativeGeometry {
  double range = 0.0;       // meters, > 0
  double range_rate = 0.0;  // meters/second, |range_rate| <= V
  double bearing = 0.0;     // radians in [0, 2*pi)
};

/// Computes range, range rate and bearing of `state` relative to `target`
/// for a vehicle moving at constant speed along its heading.
///
/// Throws std::domain_error when the vehicle coincides with the target.
inline RelativeGeometry relative_geometry(const UavState& state,
                                          const Vec2& target, double speed) {
  if (!(speed > 0.0)) {
    throw std::invalid_argument("relative_geometry: speed must be positive");
  }
  const Vec2 los = target - state.position;
  const double range = los.norm();
  if (!(range > 0.0)) {
    throw std::domain_error("relative_geometry: vehicle is at the target (zero range)");
  }
  const double bearing = wrap_angle(state.heading - std::atan2(los.y, los.x));
  return {range, -speed * std::cos(bearing), bearing};
}

/// Cosine of the offset between the tangent heading and the line of sight:
/// cos(pi - asin(r_d/r)) for r >= r_d, evaluated as -sqrt(1 - (r_d/r)^2) to
/// avoid the trig round trip near r = r_d. Result lies in [-1, 0]; it is 0
/// exactly at r = r_d and tends to -1 as r grows.
inline double tangent_cos(double range, double desired_radius) {
  if (!(desired_radius > 0.0) || !(range >= desired_radius)) {
    throw std::domain_error("tangent_cos: requires r >= r_d > 0");
  }
  const double q = desired_radius / range;
  return -std::sqrt(1.0 - q * q);
}

}  // namespace circumnav
