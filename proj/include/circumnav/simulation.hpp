#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "circumnav/estimation.hpp"
#include "circumnav/monitors.hpp"
#include "circumnav/rng.hpp"
#include "circumnav/scenario.hpp"
#include "circumnav/trace.hpp"

namespace circumnav {

/// Raised when the vehicle reaches the target (range below 1 nm); the
/// relative geometry is undefined there and the run is aborted.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Draws one initial state from the box: position uniform over the box,
/// heading uniform on [0, 2*pi).
inline UavState sample_initial_state(const InitBox& box, std::mt19937_64& rng) {
  UavState s;
  s.position.x = uniform_in(rng, box.x_min, box.x_max);
  s.position.y = uniform_in(rng, box.y_min, box.y_max);
  s.heading = uniform01(rng) * kTwoPi;
  return s;
}

/// Initial state of run `run_index`: the configured explicit state, or a box
/// sample from the run's derived seed. Deterministic in (seed, run_index).
inline UavState initial_state_for_run(const ScenarioConfig& cfg, std::uint64_t run_index) {
  if (const auto* fixed = std::get_if<UavState>(&cfg.init)) {
    UavState s = *fixed;
    s.heading = wrap_angle(s.heading);
    return s;
  }
  std::mt19937_64 rng(derive_run_seed(cfg.seed, run_index));
  return sample_initial_state(std::get<InitBox>(cfg.init), rng);
}

/// Runs one closed-loop simulation over [0, duration].
///
/// Per step: ground-truth geometry, then the configured range-rate source,
/// then the turn-rate command from (r, rdot) only, then one integrator step
/// with the command held. The sample recorded at each time carries the
/// command computed *at* that time.
inline SimTrace run_simulation(const ScenarioConfig& cfg, const UavState& initial) {
  cfg.validate();

  SimTrace trace;
  trace.config = cfg;
  trace.effective_radius = cfg.effective_desired_radius();

  const ControllerParams params{cfg.gain, trace.effective_radius, cfg.speed, cfg.law};
  const double dt = cfg.integration.dt;
  const auto steps = static_cast<std::size_t>(std::llround(cfg.duration / dt));
  trace.samples.reserve(steps + 1);

  std::optional<RateFilter> filter;
  UavState state = initial;
  state.heading = wrap_angle(state.heading);

  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    if ((cfg.target - state.position).norm() < 1e-9) {
      throw SingularityError("vehicle reached the target at t = " + std::to_string(t));
    }
    const RelativeGeometry geom = relative_geometry(state, cfg.target, cfg.speed);

    TraceSample sample;
    sample.t = t;
    sample.state = state;
    sample.geom = geom;

    double rdot = geom.range_rate;
    if (cfg.rdot.filtered) {
      if (!filter) filter.emplace(geom.range, cfg.rdot.tau);
      rdot = filter->step(geom.range, dt);
      sample.rdot_est = rdot;
    }

    sample.omega = control_omega({geom.range, rdot}, params);
    if (geom.range >= trace.effective_radius) {
      sample.lyap = cfg.law == ControlLaw::Smooth
                        ? lyapunov_smooth(geom, params)
                        : lyapunov_signum(geom, trace.effective_radius);
    }
    trace.samples.push_back(sample);

    if (i < steps) {
      state = step(state, cfg.speed, sample.omega, cfg.integration);
    }
  }
  return trace;
}

}  // namespace circumnav
