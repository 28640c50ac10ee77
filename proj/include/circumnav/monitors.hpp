#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "circumnav/controllers.hpp"
#include "circumnav/trace.hpp"

namespace circumnav {

enum class RotationDirection { Clockwise, CounterClockwise, Indeterminate };

inline const char* to_string(RotationDirection d) {
  switch (d) {
    case RotationDirection::Clockwise: return "clockwise";
    case RotationDirection::CounterClockwise: return "counterclockwise";
    default: return "indeterminate";
  }
}

/// True when `angle` lies on the counterclockwise arc [lo, hi], with a
/// wrap-aware tolerance at both endpoints.
inline bool on_arc(double angle, double lo, double hi, double tol = 1e-6) {
  const double d = wrap_angle(angle - lo);
  return d <= (hi - lo) + tol || d >= kTwoPi - tol;
}

/// Number of maximal contiguous sample intervals with r < radius.
inline int count_cd_episodes(const SimTrace& trace, double radius) {
  int episodes = 0;
  bool inside = false;
  for (const auto& s : trace.samples) {
    const bool now = s.geom.range < radius;
    if (now && !inside) ++episodes;
    inside = now;
  }
  return episodes;
}

/// Earliest sample time after which the bearing stays on the arc [lo, hi]
/// for the rest of the trace; nullopt when the final sample is still
/// outside.
inline std::optional<double> bearing_capture_time(const SimTrace& trace,
                                                  double arc_lo, double arc_hi,
                                                  double tol = 1e-6) {
  const auto& ss = trace.samples;
  if (ss.empty()) return std::nullopt;
  std::ptrdiff_t last_out = -1;
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(ss.size()) - 1; i >= 0; --i) {
    if (!on_arc(ss[static_cast<std::size_t>(i)].geom.bearing, arc_lo, arc_hi, tol)) {
      last_out = i;
      break;
    }
  }
  if (last_out < 0) return ss.front().t;
  const auto next = static_cast<std::size_t>(last_out) + 1;
  if (next >= ss.size()) return std::nullopt;
  return ss[next].t;
}

/// Capture of the upper half-plane bearing set [0, pi].
inline std::optional<double> bearing_capture_time(const SimTrace& trace) {
  return bearing_capture_time(trace, 0.0, std::numbers::pi);
}

/// Lyapunov value of the smooth law at one sample:
///
///   V = 1 - sin(theta_b) + phi(r),
///   phi(r) = integral from r_a to r of (-1/z + 2 k sqrt(z^2 - r_d^2)) dz
///
/// evaluated in closed form. phi >= 0 with its minimum 0 at r = r_a, so
/// V >= 0. Requires r >= r_d; negative gains monitor the same magnitude.
inline double lyapunov_smooth(const RelativeGeometry& geom, const ControllerParams& p) {
  const double r_d = p.desired_radius;
  if (!(geom.range >= r_d)) {
    throw std::domain_error("lyapunov_smooth: requires r >= r_d");
  }
  const double k = std::abs(p.gain);
  const double r_a = predicted_radius(r_d, k);
  const auto antideriv = [r_d](double z) {
    const double s = std::sqrt(std::max(0.0, z * z - r_d * r_d));
    return 0.5 * z * s - 0.5 * r_d * r_d * std::log(z + s);
  };
  const double phi = -std::log(geom.range / r_a) +
                     2.0 * k * (antideriv(geom.range) - antideriv(r_a));
  // phi is analytically >= 0; rounding near r = r_a can leave a few ulps of
  // negative residue.
  return std::max(0.0, 1.0 - std::sin(geom.bearing) + phi);
}

/// Lyapunov value of the signum law: r - r_d. Requires r >= r_d.
inline double lyapunov_signum(const RelativeGeometry& geom, double desired_radius) {
  if (!(geom.range >= desired_radius)) {
    throw std::domain_error("lyapunov_signum: requires r >= r_d");
  }
  return geom.range - desired_radius;
}

/// Counts consecutive-sample pairs, after bearing capture and with both
/// samples at r >= r_d, where the applicable Lyapunov value increases by
/// more than 1e-6 + 1e-4*dt. The values are recomputed from the geometry so
/// the check does not depend on what the simulation recorded.
///
/// The capture event is law-specific, matching where each law's descent
/// claim holds: [0, pi] for the smooth law, [0, pi/2] for the signum law
/// (r - r_d genuinely grows while the bearing is still in (pi/2, pi]). The
/// signum arc carries a chatter allowance of four per-step bearing kicks,
/// (|k| + V/r_d)*dt, since the sampled sliding mode crosses pi/2 forever.
inline int check_lyapunov_descent(const SimTrace& trace, const ControllerParams& p) {
  std::optional<double> captured;
  if (p.law == ControlLaw::Smooth) {
    captured = bearing_capture_time(trace);
  } else {
    const double kick =
        (std::abs(p.gain) + p.speed / p.desired_radius) * trace.config.integration.dt;
    captured = bearing_capture_time(trace, 0.0, 0.5 * std::numbers::pi,
                                    std::max(1e-6, 4.0 * kick));
  }
  if (!captured) return 0;
  const double tol = 1e-6 + 1e-4 * trace.config.integration.dt;
  int violations = 0;
  bool have_prev = false;
  double prev = 0.0;
  for (const auto& s : trace.samples) {
    if (s.t < *captured || s.geom.range < p.desired_radius) {
      have_prev = false;
      continue;
    }
    const double v = p.law == ControlLaw::Smooth
                         ? lyapunov_smooth(s.geom, p)
                         : lyapunov_signum(s.geom, p.desired_radius);
    if (have_prev && v - prev > tol) ++violations;
    prev = v;
    have_prev = true;
  }
  return violations;
}

/// Net rotation sense of the line-of-sight vector over the trailing
/// `window` seconds: Clockwise when the unwrapped line-of-sight angle drops
/// by more than pi/4, CounterClockwise when it gains more than pi/4.
inline RotationDirection rotation_direction(const SimTrace& trace, double window) {
  const auto& ss = trace.samples;
  if (ss.empty()) return RotationDirection::Indeterminate;
  const double t_start = std::max(ss.front().t, ss.back().t - window);
  double net = 0.0;
  bool first = true;
  double prev_angle = 0.0;
  for (const auto& s : ss) {
    if (s.t < t_start) continue;
    const Vec2 los = trace.config.target - s.state.position;
    const double a = std::atan2(los.y, los.x);
    if (!first) net += angle_diff(a, prev_angle);
    prev_angle = a;
    first = false;
  }
  constexpr double threshold = std::numbers::pi / 4.0;
  if (net < -threshold) return RotationDirection::Clockwise;
  if (net > threshold) return RotationDirection::CounterClockwise;
  return RotationDirection::Indeterminate;
}

/// Earliest time t with |r(s) - target_radius| <= band for every sample in
/// [t, t+hold] and onward through the end of the trace; nullopt when the
/// trace never settles (or ends less than `hold` after settling).
inline std::optional<double> convergence_time(const SimTrace& trace,
                                              double target_radius, double band,
                                              double hold) {
  if (!(band > 0.0) || !(hold > 0.0)) {
    throw std::invalid_argument("convergence_time: band and hold must be positive");
  }
  const auto& ss = trace.samples;
  if (ss.empty()) return std::nullopt;
  std::ptrdiff_t last_out = -1;
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(ss.size()) - 1; i >= 0; --i) {
    if (std::abs(ss[static_cast<std::size_t>(i)].geom.range - target_radius) > band) {
      last_out = i;
      break;
    }
  }
  std::optional<double> entered;
  if (last_out < 0) {
    entered = ss.front().t;
  } else if (static_cast<std::size_t>(last_out) + 1 < ss.size()) {
    entered = ss[static_cast<std::size_t>(last_out) + 1].t;
  }
  if (entered && ss.back().t - *entered >= hold - 1e-12) return entered;
  return std::nullopt;
}

/// Tolerances and windows used when condensing a trace into a RunReport.
/// Defaults are sized for the desk-scale scenario (V = 1 m/s, r_d = 10 m).
struct MonitorThresholds {
  double steady_window = 500.0;      // seconds of tail used for steady-state stats
  double convergence_band = 0.05;    // meters
  double convergence_hold = 100.0;   // seconds
  double bearing_band = 0.02;        // radians about the steady bearing
  double radius_band_smooth = 0.05;  // meters about the predicted radius
  double radius_band_signum = 0.10;  // meters about the desired radius
  double rotation_window = 0.0;      // seconds; 0 selects two orbit periods
};

/// Per-run verdicts and summary statistics.
struct RunReport {
  int run_index = 0;
  bool aborted = false;
  std::string abort_reason;
  double target_radius = 0.0;  // predicted equilibrium (smooth) or r_d (signum)
  double final_radius = 0.0;
  double steady_radius_mean = 0.0;
  double steady_radius_min = 0.0;
  double steady_radius_max = 0.0;
  std::optional<double> convergence_time;
  int cd_entry_episodes = 0;
  std::optional<double> bearing_capture_time;
  double steady_bearing_max_dev = 0.0;  // radians, from pi/2 (or 3*pi/2 for k < 0)
  RotationDirection rotation = RotationDirection::Indeterminate;
  int lyapunov_violations = 0;
  double max_abs_omega = 0.0;
  std::map<std::string, bool> verdicts;

  bool all_pass() const {
    if (aborted) return false;
    for (const auto& [name, ok] : verdicts) {
      if (!ok) return false;
    }
    return true;
  }
};

/// Condenses a completed trace into pass/fail verdicts against the claimed
/// steady-state behavior. Boundary claims carry the discrete-time allowance
/// eps_int = V*dt: a one-step overshoot across r = r_d is an integration
/// artifact, not an entry episode.
inline RunReport make_run_report(const SimTrace& trace,
                                 const MonitorThresholds& th = {}) {
  const auto& cfg = trace.config;
  const auto& ss = trace.samples;
  if (ss.empty()) {
    throw std::invalid_argument("make_run_report: empty trace");
  }
  const ControllerParams p{cfg.gain, trace.effective_radius, cfg.speed, cfg.law};
  const bool clockwise_expected = cfg.gain > 0.0;
  constexpr double pi = std::numbers::pi;

  RunReport rep;
  rep.target_radius = cfg.law == ControlLaw::Smooth
                          ? predicted_radius(trace.effective_radius, std::abs(cfg.gain))
                          : trace.effective_radius;
  rep.final_radius = ss.back().geom.range;

  const double t_end = ss.back().t;
  const double span = t_end - ss.front().t;
  const double window = std::min(th.steady_window, span);
  const double steady_bearing = clockwise_expected ? 0.5 * pi : 1.5 * pi;
  double sum = 0.0, lo = 0.0, hi = 0.0, bearing_dev = 0.0;
  std::size_t n = 0;
  for (const auto& s : ss) {
    rep.max_abs_omega = std::max(rep.max_abs_omega, std::abs(s.omega));
    if (s.t < t_end - window) continue;
    const double r = s.geom.range;
    if (n == 0) {
      lo = hi = r;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    sum += r;
    bearing_dev = std::max(bearing_dev, std::abs(angle_diff(s.geom.bearing, steady_bearing)));
    ++n;
  }
  rep.steady_radius_mean = sum / static_cast<double>(n);
  rep.steady_radius_min = lo;
  rep.steady_radius_max = hi;
  rep.steady_bearing_max_dev = bearing_dev;

  const double eps_int = cfg.speed * cfg.integration.dt;
  rep.cd_entry_episodes = count_cd_episodes(trace, trace.effective_radius - eps_int);
  rep.bearing_capture_time =
      clockwise_expected ? bearing_capture_time(trace)
                         : bearing_capture_time(trace, pi, kTwoPi);
  // The descent claims are stated for positive gains; the mirrored-gain
  // runs are judged on rotation and radius instead.
  rep.lyapunov_violations = clockwise_expected ? check_lyapunov_descent(trace, p) : 0;
  const double rot_window =
      th.rotation_window > 0.0
          ? th.rotation_window
          : std::min(span, 2.0 * kTwoPi * rep.target_radius / cfg.speed);
  rep.rotation = rotation_direction(trace, rot_window);
  rep.convergence_time = convergence_time(trace, rep.target_radius,
                                          th.convergence_band, th.convergence_hold);

  const double radius_band = cfg.law == ControlLaw::Smooth ? th.radius_band_smooth
                                                           : th.radius_band_signum;
  rep.verdicts["single_boundary_entry"] = rep.cd_entry_episodes <= 1;
  rep.verdicts["bearing_capture"] = rep.bearing_capture_time.has_value();
  rep.verdicts["bearing_settles"] = bearing_dev <= th.bearing_band;
  if (clockwise_expected && !cfg.rdot.filtered) {
    // Descent is proven for exact range rate only; filter lag produces real
    // (and expected) transient ascent, so the verdict is scoped out there.
    rep.verdicts["lyapunov_descent"] = rep.lyapunov_violations == 0;
  }
  rep.verdicts["radius_convergence"] =
      std::abs(rep.steady_radius_mean - rep.target_radius) <= radius_band;
  rep.verdicts["rotation_direction"] =
      rep.rotation == (clockwise_expected ? RotationDirection::Clockwise
                                          : RotationDirection::CounterClockwise);
  if (cfg.law == ControlLaw::Signum) {
    rep.verdicts["saturated_command"] =
        rep.max_abs_omega <= std::abs(cfg.gain) * (1.0 + 1e-12);
  }
  return rep;
}

}  // namespace circumnav
