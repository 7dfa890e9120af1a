#include "udnsim/mobility.hpp"

#include <stdexcept>

namespace udnsim {

Point2 position_at(const Route& route, double velocity_mps, std::int64_t tic, int tic_ms) {
  if (tic < 0) throw std::invalid_argument("position_at: negative tic");
  if (tic_ms <= 0) throw std::invalid_argument("position_at: tic_ms must be positive");
  const double length = route.length_m();
  // Travelled distance is computed from the absolute tic, not accumulated,
  // so sample t is independent of how many samples were taken before it.
  const double travelled = velocity_mps * static_cast<double>(tic) *
                           (static_cast<double>(tic_ms) / 1000.0);
  if (travelled >= length || length == 0.0) return route.end;
  const double f = travelled / length;
  return Point2{route.start.x + f * (route.end.x - route.start.x),
                route.start.y + f * (route.end.y - route.start.y)};
}

std::vector<TrajectorySample> trajectory(const Route& route, double velocity_mps,
                                         std::int64_t run_time_ms, int tic_ms) {
  if (tic_ms <= 0) throw std::invalid_argument("trajectory: tic_ms must be positive");
  if (run_time_ms < 0 || run_time_ms % tic_ms != 0) {
    throw std::invalid_argument("trajectory: run_time_ms must be a non-negative multiple of tic_ms");
  }
  const std::int64_t steps = run_time_ms / tic_ms;
  std::vector<TrajectorySample> samples;
  samples.reserve(static_cast<std::size_t>(steps) + 1);
  for (std::int64_t t = 0; t <= steps; ++t) {
    samples.push_back({t, position_at(route, velocity_mps, t, tic_ms)});
  }
  return samples;
}

}  // namespace udnsim
