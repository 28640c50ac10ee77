#pragma once

#include <cmath>
#include <stdexcept>

#include "circumnav/geometry.hpp"

namespace circumnav {

enum class IntegrationScheme { RK4, Euler };

/// Fixed-step integration settings. The recommended upper bound
/// dt <= 0.1*r_d/V is scenario-dependent and enforced (as a warning) by the
/// scenario validator.
struct IntegrationSettings {
  double dt = 0.01;  // seconds, > 0
  IntegrationScheme scheme = IntegrationScheme::RK4;
};

/// Instantaneous state rate of the constant-speed unicycle.
struct StateRate {
  double x_dot;
  double y_dot;
  double psi_dot;
};

inline StateRate derivative(const UavState& state, double speed, double omega) {
  if (!(speed > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("derivative: requires V > 0 and finite omega");
  }
  return {speed * std::cos(state.heading), speed * std::sin(state.heading), omega};
}

/// Advances the state by one step with the turn-rate command held constant
/// over the step (zero-order hold). The heading of the returned state is
/// wrapped to [0, 2*pi).
inline UavState step(const UavState& state, double speed, double omega,
                     const IntegrationSettings& settings) {
  if (!(settings.dt > 0.0)) {
    throw std::invalid_argument("step: dt must be positive");
  }
  const double dt = settings.dt;
  UavState out = state;

  if (settings.scheme == IntegrationScheme::Euler) {
    const StateRate k = derivative(state, speed, omega);
    out.position.x += dt * k.x_dot;
    out.position.y += dt * k.y_dot;
    out.heading += dt * k.psi_dot;
  } else {
    auto shifted = [&](const StateRate& k, double h) {
      UavState s = state;
      s.position.x += h * k.x_dot;
      s.position.y += h * k.y_dot;
      s.heading += h * k.psi_dot;
      return s;
    };
    const StateRate k1 = derivative(state, speed, omega);
    const StateRate k2 = derivative(shifted(k1, 0.5 * dt), speed, omega);
    const StateRate k3 = derivative(shifted(k2, 0.5 * dt), speed, omega);
    const StateRate k4 = derivative(shifted(k3, dt), speed, omega);
    out.position.x += dt / 6.0 * (k1.x_dot + 2.0 * k2.x_dot + 2.0 * k3.x_dot + k4.x_dot);
    out.position.y += dt / 6.0 * (k1.y_dot + 2.0 * k2.y_dot + 2.0 * k3.y_dot + k4.y_dot);
    out.heading += dt / 6.0 * (k1.psi_dot + 2.0 * k2.psi_dot + 2.0 * k3.psi_dot + k4.psi_dot);
  }

  out.heading = wrap_angle(out.heading);
  return out;
}

}  // namespace circumnav
