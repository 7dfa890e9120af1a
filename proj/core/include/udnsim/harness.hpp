#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "udnsim/config_file.hpp"
#include "udnsim/handover.hpp"
#include "udnsim/kpi.hpp"

namespace udnsim {

// A study grid: the cartesian product of the axes, walked in canonical order
// (case, then ttt, then density, then velocity). Iteration count and master
// seed come from base.scenario.
struct SweepSpec {
  std::vector<RouteKind> cases;
  std::vector<int> ttt_list;
  std::vector<int> density_list;
  std::vector<double> velocity_list;
  SimConfig base;
  HandoverParams ho;  // ttt_tics is overridden per grid point
  bool crn = false;   // common random numbers: seeds ignore the ttt axis
  int threads = 1;    // 0 = hardware concurrency
};

struct SweepResult {
  std::vector<KpiCell> cells;              // canonical order
  std::vector<double> cell_cpu_seconds;    // per-cell wall time, same order
  double total_wall_seconds = 0.0;
  SimConfig base;
  bool crn = false;
  std::uint64_t master_seed = 0;
  std::string tool_version;
};

// Seed for one (grid point, iteration) pair. Fields are absorbed in a fixed
// order (case, ttt, density, velocity, iteration); with crn the ttt axis is
// left out so every TTT setting replays identical deployments and draws.
std::uint64_t cell_iteration_seed(std::uint64_t master_seed, const GridPoint& point,
                                  int iteration, bool crn);

// Per-iteration observer hook, used by the CLI trace sink.
using IterationObserverFactory =
    std::function<TicObserver(int iteration, std::uint64_t seed)>;

// Runs base.scenario.iterations independent runs of one grid point: each
// iteration redraws the deployment and the channel from its own seed, then
// the runs are aggregated. Throws std::invalid_argument when the effective
// config fails validation.
KpiCell run_cell(const GridPoint& point, const SimConfig& base, const HandoverParams& ho,
                 bool crn = false, const IterationObserverFactory& make_observer = {});

// Full grid in canonical order. Cells are independent, so any thread count
// produces identical results; timing fields are filled per cell.
SweepResult run_sweep(const SweepSpec& spec);

// Study presets over the Table II baseline carried in `base`.
// Both routes, TTT 1..12, densities 10..50, fixed velocity 50.
SweepSpec preset_fig4(const SimConfig& base, const HandoverParams& ho);
// Route B, TTT 1..12, density 10, velocities 10..50.
SweepSpec preset_fig5(const SimConfig& base, const HandoverParams& ho);
// Table layout: same grid as preset_fig4.
SweepSpec preset_tables(const SimConfig& base, const HandoverParams& ho);

}  // namespace udnsim
