#pragma once

// Range-only circumnavigation: unicycle kinematics, the two turn-rate laws
// (smooth and saturated), equilibrium-radius analysis, the dirty-derivative
// range-rate estimator, trajectory monitors, and the batch harness.

#include "circumnav/geometry.hpp"
#include "circumnav/dynamics.hpp"
#include "circumnav/controllers.hpp"
#include "circumnav/estimation.hpp"
#include "circumnav/scenario.hpp"
#include "circumnav/trace.hpp"
#include "circumnav/monitors.hpp"
#include "circumnav/simulation.hpp"
#include "circumnav/batch.hpp"
#include "circumnav/trace_io.hpp"
