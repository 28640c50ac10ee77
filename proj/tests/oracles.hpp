#pragma once

// Test-only reference implementations, deliberately independent of the
// library's evaluation paths: brute-force quadrature, bisection root
// finding, finite differences and closed-form kinematics.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "circumnav/geometry.hpp"

namespace oracles {

/// Adaptive Simpson quadrature of f over [a, b] (a may exceed b).
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int depth = 40) {
  const auto simpson = [&](double lo, double hi) {
    return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi));
  };
  std::function<double(double, double, double, double, int)> recurse =
      [&](double lo, double hi, double whole, double eps, int level) -> double {
    const double mid = 0.5 * (lo + hi);
    const double left = simpson(lo, mid);
    const double right = simpson(mid, hi);
    if (level <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
      return left + right + (left + right - whole) / 15.0;
    }
    return recurse(lo, mid, left, 0.5 * eps, level - 1) +
           recurse(mid, hi, right, 0.5 * eps, level - 1);
  };
  return recurse(a, b, simpson(a, b), tol, depth);
}

/// Root of 1/(4k^2) = r^4 (1 - r_d^2/r^2) on [r_d, 10 r_d] by plain
/// bisection. The residual is positive at r_d and decreasing in r.
inline double equilibrium_radius_by_bisection(double r_d, double k) {
  const auto residual = [&](double r) {
    return 1.0 / (4.0 * k * k) - std::pow(r, 4) * (1.0 - (r_d * r_d) / (r * r));
  };
  double lo = r_d, hi = 10.0 * r_d;
  if (residual(hi) > 0.0) throw std::runtime_error("bisection: bracket too small");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Range rate by central finite difference of ||target - p(t)|| under
/// straight-line motion at constant speed along the heading.
inline double fd_range_rate(const circumnav::UavState& s, const circumnav::Vec2& target,
                            double speed, double h = 1e-6) {
  const auto range_at = [&](double t) {
    const circumnav::Vec2 p{s.position.x + t * speed * std::cos(s.heading),
                            s.position.y + t * speed * std::sin(s.heading)};
    return (target - p).norm();
  };
  return (range_at(h) - range_at(-h)) / (2.0 * h);
}

/// Exact endpoint of a constant-turn-rate arc (or a straight line when
/// omega == 0).
inline circumnav::UavState exact_arc(const circumnav::UavState& s, double speed,
                                     double omega, double t) {
  circumnav::UavState out = s;
  if (omega == 0.0) {
    out.position.x += speed * t * std::cos(s.heading);
    out.position.y += speed * t * std::sin(s.heading);
  } else {
    const double radius = speed / omega;
    out.position.x += radius * (std::sin(s.heading + omega * t) - std::sin(s.heading));
    out.position.y -= radius * (std::cos(s.heading + omega * t) - std::cos(s.heading));
    out.heading = circumnav::wrap_angle(s.heading + omega * t);
  }
  return out;
}

}  // namespace oracles
