#include "udnsim/kpi.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace udnsim {

namespace {

double sorted_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

std::optional<double> ho_avg_geo(const RunResult& run) {
  if (run.ho_best_geos.empty()) return std::nullopt;
  double sum = 0.0;
  for (double g : run.ho_best_geos) sum += g;
  return sum / static_cast<double>(run.ho_best_geos.size());
}

KpiCell aggregate(std::span<const RunResult> runs, const GridPoint& point) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs");

  KpiCell cell;
  cell.case_label = point.case_label;
  cell.ttt_tics = point.ttt_tics;
  cell.den_gnb = point.den_gnb;
  cell.velocity_kmh = point.velocity_kmh;
  cell.iterations = static_cast<int>(runs.size());

  // Counts are exact in double, so plain sums are already order-free.
  long long ho_sum = 0;
  long long loss_sum = 0;
  std::vector<double> run_means;
  std::vector<double> pooled;
  for (const RunResult& r : runs) {
    ho_sum += r.ho_times;
    loss_sum += r.connection_losses;
    if (auto m = ho_avg_geo(r)) {
      run_means.push_back(*m);
      pooled.insert(pooled.end(), r.ho_best_geos.begin(), r.ho_best_geos.end());
    }
  }

  const double n = static_cast<double>(runs.size());
  cell.mean_ho_rate = static_cast<double>(ho_sum) / n;
  cell.connection_losses_mean = static_cast<double>(loss_sum) / n;
  cell.iterations_with_handover = static_cast<int>(run_means.size());
  if (!run_means.empty()) {
    cell.ho_avg_geo_db = sorted_mean(std::move(run_means));
    cell.pooled_ho_avg_geo_db = sorted_mean(std::move(pooled));
  }
  cell.failure = cell.mean_ho_rate < 1.0;
  return cell;
}

}  // namespace udnsim
