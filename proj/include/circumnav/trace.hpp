#pragma once

#include <optional>
#include <vector>

#include "circumnav/geometry.hpp"
#include "circumnav/scenario.hpp"

namespace circumnav {

/// One integration-step record. `geom` is ground truth recomputed from the
/// state; `rdot_est` is present only when the filtered source is active;
/// `lyap` is present whenever the law's Lyapunov value is defined (r >= the
/// effective desired radius).
struct TraceSample {
  double t = 0.0;
  UavState state;
  RelativeGeometry geom;
  double omega = 0.0;
  std::optional<double> rdot_est;
  std::optional<double> lyap;
};

/// Time-ordered simulation record plus the resolved configuration snapshot.
/// Samples are spaced exactly dt apart starting at t = 0.
struct SimTrace {
  ScenarioConfig config;
  double effective_radius = 0.0;  // compensated_rd(r_d, k) when compensation is on
  std::vector<TraceSample> samples;
};

}  // namespace circumnav
