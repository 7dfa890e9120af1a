#pragma once

#include <cstdint>
#include <vector>

#include "udnsim/point.hpp"
#include "udnsim/scenario.hpp"

namespace udnsim {

struct TrajectorySample {
  std::int64_t tic = 0;
  Point2 position;
};

// Position after tic * tic_ms milliseconds of straight-line travel from
// route.start towards route.end, clamped at the end point once the route is
// exhausted. tic 0 is the start point.
Point2 position_at(const Route& route, double velocity_mps, std::int64_t tic, int tic_ms);

// All samples for a run: tics 0..run_time_ms/tic_ms inclusive.
// run_time_ms must be divisible by tic_ms.
std::vector<TrajectorySample> trajectory(const Route& route, double velocity_mps,
                                         std::int64_t run_time_ms, int tic_ms);

}  // namespace udnsim
