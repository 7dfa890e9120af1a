#include "udnsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "udnsim/version.hpp"

namespace udnsim {

namespace {

std::uint64_t case_tag(RouteKind kind) {
  switch (kind) {
    case RouteKind::CaseA: return 0;
    case RouteKind::CaseB: return 1;
    case RouteKind::Custom: return 2;
  }
  return ~0ull;
}

// Effective per-point config: the grid point overrides route, density,
// velocity and ttt; everything else comes from the base.
std::pair<SimConfig, HandoverParams> effective_config(const GridPoint& point,
                                                      const SimConfig& base,
                                                      const HandoverParams& ho) {
  SimConfig cfg = base;
  cfg.scenario.den_gnb = point.den_gnb;
  cfg.scenario.velocity_kmh = point.velocity_kmh;
  switch (point.case_label) {
    case RouteKind::CaseA: cfg.scenario.route = Route::case_a(); break;
    case RouteKind::CaseB: cfg.scenario.route = Route::case_b(); break;
    case RouteKind::Custom: break;  // keep the base route
  }
  HandoverParams hp = ho;
  hp.ttt_tics = point.ttt_tics;
  return {cfg, hp};
}

void validate_or_throw(const SimConfig& cfg, const HandoverParams& hp) {
  std::vector<std::string> errors = validate_config(cfg);
  if (hp.ttt_tics < 1) errors.push_back("ttt_tics must be at least 1");
  if (hp.ho_exec_time_tics < 0) errors.push_back("ho_exec_time_tics must be non-negative");
  if (hp.avg_window < 1) errors.push_back("avg_window must be at least 1");
  if (!errors.empty()) {
    std::string joined;
    for (const auto& e : errors) {
      if (!joined.empty()) joined += "; ";
      joined += e;
    }
    throw std::invalid_argument(joined);
  }
}

std::vector<GridPoint> grid_points(const SweepSpec& spec) {
  std::vector<GridPoint> points;
  points.reserve(spec.cases.size() * spec.ttt_list.size() * spec.density_list.size() *
                 spec.velocity_list.size());
  for (RouteKind kind : spec.cases) {
    for (int ttt : spec.ttt_list) {
      for (int den : spec.density_list) {
        for (double vel : spec.velocity_list) {
          points.push_back({kind, ttt, den, vel});
        }
      }
    }
  }
  return points;
}

}  // namespace

std::uint64_t cell_iteration_seed(std::uint64_t master_seed, const GridPoint& point,
                                  int iteration, bool crn) {
  SeedMixer mixer(master_seed);
  mixer.absorb(case_tag(point.case_label));
  if (!crn) mixer.absorb(static_cast<std::uint64_t>(point.ttt_tics));
  mixer.absorb(static_cast<std::uint64_t>(point.den_gnb));
  mixer.absorb(point.velocity_kmh);
  mixer.absorb(static_cast<std::uint64_t>(iteration));
  return mixer.value();
}

KpiCell run_cell(const GridPoint& point, const SimConfig& base, const HandoverParams& ho,
                 bool crn, const IterationObserverFactory& make_observer) {
  const auto [cfg, hp] = effective_config(point, base, ho);
  validate_or_throw(cfg, hp);

  const int iterations = cfg.scenario.iterations;
  const int count = cfg.scenario.gnb_count();
  std::vector<RunResult> runs;
  runs.reserve(static_cast<std::size_t>(iterations));
  for (int it = 0; it < iterations; ++it) {
    const std::uint64_t seed = cell_iteration_seed(cfg.scenario.seed, point, it, crn);
    RandomStream rng(seed);
    const std::vector<GnbSite> sites = place_gnbs(cfg.scenario.area, count, rng, base.site);
    TicObserver observer;
    if (make_observer) observer = make_observer(it, seed);
    RunResult rr = run_tu(cfg.scenario, sites, hp, cfg.link, rng, observer);
    rr.seed = seed;
    runs.push_back(std::move(rr));
  }
  return aggregate(runs, point);
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.cases.empty() || spec.ttt_list.empty() || spec.density_list.empty() ||
      spec.velocity_list.empty()) {
    throw std::invalid_argument("run_sweep: every grid axis needs at least one value");
  }

  const std::vector<GridPoint> points = grid_points(spec);
  SweepResult result;
  result.cells.resize(points.size());
  result.cell_cpu_seconds.resize(points.size(), 0.0);
  result.base = spec.base;
  result.crn = spec.crn;
  result.master_seed = spec.base.scenario.seed;
  result.tool_version = kToolVersion;

  unsigned workers = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(points.size()));

  const auto wall_start = std::chrono::steady_clock::now();
  auto run_one = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    result.cells[i] = run_cell(points[i], spec.base, spec.ho, spec.crn);
    const auto t1 = std::chrono::steady_clock::now();
    result.cell_cpu_seconds[i] = std::chrono::duration<double>(t1 - t0).count();
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= points.size()) return;
          try {
            run_one(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  result.total_wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return result;
}

namespace {

SweepSpec preset_base(const SimConfig& base, const HandoverParams& ho) {
  SweepSpec spec;
  spec.base = base;
  spec.ho = ho;
  spec.ttt_list = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  return spec;
}

}  // namespace

SweepSpec preset_fig4(const SimConfig& base, const HandoverParams& ho) {
  SweepSpec spec = preset_base(base, ho);
  spec.cases = {RouteKind::CaseA, RouteKind::CaseB};
  spec.density_list = {10, 20, 30, 40, 50};
  spec.velocity_list = {50.0};
  return spec;
}

SweepSpec preset_fig5(const SimConfig& base, const HandoverParams& ho) {
  SweepSpec spec = preset_base(base, ho);
  spec.cases = {RouteKind::CaseB};
  spec.density_list = {10};
  spec.velocity_list = {10.0, 20.0, 30.0, 40.0, 50.0};
  return spec;
}

SweepSpec preset_tables(const SimConfig& base, const HandoverParams& ho) {
  return preset_fig4(base, ho);
}

}  // namespace udnsim
