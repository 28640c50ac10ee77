#pragma once

#include <cmath>
#include <stdexcept>

#include "circumnav/geometry.hpp"

namespace circumnav {

enum class ControlLaw { Smooth, Signum };

/// Verdict of a gain against the law-specific sufficient stability bound.
/// Gains at or below the bound are permitted (the bounds are sufficient, not
/// necessary) but carry no convergence guarantee.
enum class GainValidity { Valid, BelowTheoremBound };

/// Parameters shared by both turn-rate laws.
///
/// The gain's units depend on the law: 1/(m^2 s) for the smooth law, rad/s
/// for the signum law. A negative gain mirrors the rotation direction
/// (counterclockwise instead of clockwise).
struct ControllerParams {
  double gain = 0.0;            // k, nonzero
  double desired_radius = 0.0;  // r_d, meters, > 0
  double speed = 0.0;           // V, meters/second, > 0
  ControlLaw law = ControlLaw::Smooth;
};

/// The only vehicle information a control law receives: range and range
/// rate. Deliberately excludes position and bearing.
struct RangeObservation {
  double range = 0.0;       // meters, > 0
  double range_rate = 0.0;  // meters/second
};

namespace detail {
inline void require_valid(const ControllerParams& p) {
  if (!(p.desired_radius > 0.0) || !(p.speed > 0.0) || p.gain == 0.0 ||
      !std::isfinite(p.gain)) {
    throw std::invalid_argument("ControllerParams: requires r_d > 0, V > 0, k != 0");
  }
}
}  // namespace detail

/// sign(v) with sign(0) := 0, the symmetric choice for the sliding surface.
inline double signum(double v) {
  return static_cast<double>(v > 0.0) - static_cast<double>(v < 0.0);
}

/// Smooth turn-rate law. Outside (or on) the desired circle the command is
/// proportional to the gap between the tangent-heading rate of r^2 and its
/// measured rate:
///
///   omega = k * [2 r V tangent_cos(r, r_d) - 2 r rdot],  r >= r_d
///   omega = 0,                                           otherwise
inline double smooth_omega(const RangeObservation& obs, const ControllerParams& p) {
  detail::require_valid(p);
  if (obs.range < p.desired_radius) return 0.0;
  const double tc = tangent_cos(obs.range, p.desired_radius);
  return p.gain * (2.0 * obs.range * p.speed * tc - 2.0 * obs.range * obs.range_rate);
}

/// Saturated (signum) turn-rate law:
///
///   omega = k * sign(V tangent_cos(r, r_d) - rdot),  r >= r_d
///   omega = 0,                                       otherwise
///
/// |omega| never exceeds |k|.
inline double signum_omega(const RangeObservation& obs, const ControllerParams& p) {
  detail::require_valid(p);
  if (obs.range < p.desired_radius) return 0.0;
  const double tc = tangent_cos(obs.range, p.desired_radius);
  return p.gain * signum(p.speed * tc - obs.range_rate);
}

/// Dispatches to the law selected in the parameters.
inline double control_omega(const RangeObservation& obs, const ControllerParams& p) {
  return p.law == ControlLaw::Smooth ? smooth_omega(obs, p) : signum_omega(obs, p);
}

/// Radius of the steady circular motion reached by the smooth law:
///
///   r_a = sqrt((r_d^2 + sqrt(r_d^4 + 1/k^2)) / 2)
///
/// Always >= r_d, approaching r_d as |k| grows. Satisfies the fixed-point
/// relation 1/(4 k^2) = r_a^4 (1 - r_d^2/r_a^2).
inline double predicted_radius(double desired_radius, double gain) {
  if (!(desired_radius > 0.0)) {
    throw std::invalid_argument("predicted_radius: r_d must be positive");
  }
  if (gain == 0.0 || !std::isfinite(gain)) {
    throw std::invalid_argument("predicted_radius: k must be nonzero");
  }
  const double rd2 = desired_radius * desired_radius;
  return std::sqrt(0.5 * (rd2 + std::sqrt(rd2 * rd2 + 1.0 / (gain * gain))));
}

/// Precompensated command radius for the smooth law:
///
///   r~_d = r_d * sqrt(1 - 1/(4 k^2 r_d^4))
///
/// Feeding r~_d to the smooth law moves its equilibrium onto r_d exactly.
/// Defined only for |k| > 1/(2 r_d^2); throws std::domain_error otherwise.
inline double compensated_rd(double desired_radius, double gain) {
  if (!(desired_radius > 0.0) || gain == 0.0 || !std::isfinite(gain)) {
    throw std::invalid_argument("compensated_rd: requires r_d > 0 and k != 0");
  }
  const double rd2 = desired_radius * desired_radius;
  const double b = 1.0 / (4.0 * gain * gain * rd2 * rd2);
  if (!(b < 1.0)) {
    throw std::domain_error("compensated_rd: requires |k| > 1/(2 r_d^2)");
  }
  return desired_radius * std::sqrt(1.0 - b);
}

/// Sufficient gain bound of the selected law: 1/(2 r_d^2) for the smooth
/// law, V/r_d for the signum law.
inline double gain_bound(const ControllerParams& p) {
  detail::require_valid(p);
  return p.law == ControlLaw::Smooth
             ? 1.0 / (2.0 * p.desired_radius * p.desired_radius)
             : p.speed / p.desired_radius;
}

/// Valid iff |k| strictly exceeds the law-specific bound.
inline GainValidity validate_gain(const ControllerParams& p) {
  return std::abs(p.gain) > gain_bound(p) ? GainValidity::Valid
                                          : GainValidity::BelowTheoremBound;
}

}  // namespace circumnav
