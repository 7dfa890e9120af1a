#pragma once

#include <optional>
#include <span>

#include "udnsim/handover.hpp"
#include "udnsim/scenario.hpp"

namespace udnsim {

// One coordinate of the study grid.
struct GridPoint {
  RouteKind case_label = RouteKind::CaseA;
  int ttt_tics = 1;
  int den_gnb = 10;
  double velocity_kmh = 50.0;
};

// Aggregated metrics for one grid cell. Geometry means stay in the dB
// domain. The optional fields are empty when no run saw a handover.
struct KpiCell {
  RouteKind case_label = RouteKind::CaseA;
  int ttt_tics = 1;
  int den_gnb = 10;
  double velocity_kmh = 50.0;
  int iterations = 0;

  double mean_ho_rate = 0.0;
  std::optional<double> ho_avg_geo_db;         // mean of per-run means
  std::optional<double> pooled_ho_avg_geo_db;  // mean over all events pooled
  bool failure = false;                        // mean_ho_rate < 1
  int iterations_with_handover = 0;
  double connection_losses_mean = 0.0;
};

// Per-run mean candidate geometry at handover execution; empty for runs
// without handovers.
std::optional<double> ho_avg_geo(const RunResult& run);

// Cross-iteration aggregation. runs must be non-empty; reordering runs does
// not change any output (sums are performed in sorted order).
KpiCell aggregate(std::span<const RunResult> runs, const GridPoint& point);

}  // namespace udnsim
