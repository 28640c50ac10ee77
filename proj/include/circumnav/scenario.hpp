#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "circumnav/controllers.hpp"
#include "circumnav/dynamics.hpp"

namespace circumnav {

/// Source of the range-rate signal handed to the controller: ground truth
/// (-V cos theta_b, matching the assumptions of the stability proofs) or the
/// dirty-derivative estimate with time constant tau.
struct RdotSource {
  bool filtered = false;
  double tau = 0.5;  // seconds, used only when filtered
};

/// Axis-aligned initial-condition box; positions sampled uniformly, heading
/// uniform on [0, 2*pi). Zero-width edges pin that coordinate.
struct InitBox {
  double x_min = 0.0;
  double x_max = 10.0;
  double y_min = 0.0;
  double y_max = 10.0;
};

/// Full description of a batch: plant, controller, measurement source,
/// integration, initial conditions and seeding.
struct ScenarioConfig {
  double speed = 1.0;            // V, meters/second
  Vec2 target{0.0, -10.0};       // meters
  double desired_radius = 10.0;  // r_d, meters
  double gain = 0.01;            // k
  ControlLaw law = ControlLaw::Smooth;
  bool compensate_rd = false;    // command compensated_rd(r_d, k) instead of r_d
  RdotSource rdot;
  IntegrationSettings integration;
  double duration = 3000.0;      // seconds
  std::variant<InitBox, UavState> init = InitBox{};
  std::uint64_t seed = 0;
  int runs = 1;

  /// Radius actually handed to the controller.
  double effective_desired_radius() const {
    return compensate_rd ? compensated_rd(desired_radius, gain) : desired_radius;
  }

  ControllerParams controller_params() const {
    return {gain, effective_desired_radius(), speed, law};
  }

  /// Throws std::invalid_argument on the first hard violation.
  void validate() const {
    if (!(speed > 0.0) || !std::isfinite(speed)) {
      throw std::invalid_argument("config: v must be positive and finite");
    }
    if (!std::isfinite(target.x) || !std::isfinite(target.y)) {
      throw std::invalid_argument("config: target must be finite");
    }
    if (!(desired_radius > 0.0) || !std::isfinite(desired_radius)) {
      throw std::invalid_argument("config: r_d must be positive and finite");
    }
    if (gain == 0.0 || !std::isfinite(gain)) {
      throw std::invalid_argument("config: k must be nonzero and finite");
    }
    if (!(integration.dt > 0.0)) {
      throw std::invalid_argument("config: dt must be positive");
    }
    if (!(duration > 0.0)) {
      throw std::invalid_argument("config: duration must be positive");
    }
    if (runs < 1) {
      throw std::invalid_argument("config: runs must be >= 1");
    }
    if (rdot.filtered) {
      if (!(rdot.tau > 0.0)) {
        throw std::invalid_argument("config: filter tau must be positive");
      }
      if (!(integration.dt < rdot.tau)) {
        throw std::invalid_argument("config: dt must be < filter tau for a stable filter update");
      }
    }
    if (compensate_rd &&
        !(std::abs(gain) > 1.0 / (2.0 * desired_radius * desired_radius))) {
      throw std::invalid_argument(
          "config: compensate_rd requires |k| > 1/(2 r_d^2)");
    }
    if (const auto* box = std::get_if<InitBox>(&init)) {
      if (!(box->x_min <= box->x_max) || !(box->y_min <= box->y_max) ||
          !std::isfinite(box->x_min) || !std::isfinite(box->x_max) ||
          !std::isfinite(box->y_min) || !std::isfinite(box->y_max)) {
        throw std::invalid_argument("config: init box must be finite with min <= max");
      }
    } else {
      const auto& s = std::get<UavState>(init);
      if (!std::isfinite(s.position.x) || !std::isfinite(s.position.y) ||
          !std::isfinite(s.heading)) {
        throw std::invalid_argument("config: init state must be finite");
      }
    }
  }

  /// Advisory notes that do not block a run.
  std::vector<std::string> warnings() const {
    std::vector<std::string> notes;
    if (integration.dt > 0.1 * desired_radius / speed) {
      notes.push_back("dt exceeds the recommended bound 0.1*r_d/V; expect coarse orbits");
    }
    if (validate_gain(controller_params()) == GainValidity::BelowTheoremBound) {
      notes.push_back("|k| is at or below the theorem bound for this law; no convergence guarantee");
    }
    return notes;
  }
};

}  // namespace circumnav
