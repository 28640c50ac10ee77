#pragma once

#include <stdexcept>

namespace circumnav {

/// First-order "dirty derivative" s/(tau*s + 1) in an explicit-Euler
/// discretization. Tracks the rate of its input with lag ~tau; on a ramp the
/// steady-state estimate is exact. Initialization pins the lag state to the
/// first sample so the first estimate is 0 rather than a spike.
class RateFilter {
 public:
  RateFilter(double initial_range, double tau) : lag_(initial_range), tau_(tau) {
    if (!(tau > 0.0)) {
      throw std::invalid_argument("RateFilter: tau must be positive");
    }
    if (!(initial_range > 0.0)) {
      throw std::invalid_argument("RateFilter: initial range must be positive");
    }
  }

  /// Consumes one range sample and returns the rate estimate. The explicit
  /// update is stable only for dt < tau; larger steps throw.
  double step(double range, double dt) {
    if (!(dt > 0.0) || !(dt < tau_)) {
      throw std::domain_error("RateFilter::step: requires 0 < dt < tau");
    }
    const double rate = (range - lag_) / tau_;
    lag_ += dt * rate;
    return rate;
  }

  double tau() const { return tau_; }
  double lag_state() const { return lag_; }

 private:
  double lag_;  // low-passed copy of the input
  double tau_;
};

}  // namespace circumnav
