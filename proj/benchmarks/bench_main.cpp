// Microbenchmarks for the per-tic hot path. A full run is ~7000 tics, each
// one measurement pass plus one state-machine step, so these three layers
// dominate every sweep.

#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "udnsim/handover.hpp"
#include "udnsim/mobility.hpp"
#include "udnsim/radio.hpp"
#include "udnsim/rng.hpp"
#include "udnsim/scenario.hpp"

namespace {

using namespace udnsim;

std::vector<GnbSite> deployment(int count) {
  RandomStream rng(42);
  return place_gnbs(AreaSpec{}, count, rng);
}

void BM_Pathloss(benchmark::State& state) {
  const LinkConfig link;
  double d = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pathloss_db(d, link));
    d = d < 1400.0 ? d + 1.0 : 1.0;
  }
}
BENCHMARK(BM_Pathloss);

void BM_MeasureInto(benchmark::State& state) {
  const auto sites = deployment(static_cast<int>(state.range(0)));
  const LinkConfig link;
  GeometryReport rep;
  const Route route = Route::case_a();
  std::int64_t tic = 0;
  for (auto _ : state) {
    const Point2 pos = position_at(route, 50.0 / 3.6, tic % 7000, 10);
    measure_into(rep, pos, sites, 0, link, nullptr, tic);
    benchmark::DoNotOptimize(rep.best_geo_db);
    ++tic;
  }
}
BENCHMARK(BM_MeasureInto)->Arg(10)->Arg(50);

void BM_Step(benchmark::State& state) {
  HandoverParams params;
  params.ttt_tics = 4;
  HandoverState st(params.avg_window);

  // Two-cell report with the margin just below hysteresis: the common
  // no-trigger tic (window push plus comparisons, no event bookkeeping).
  GeometryReport rep;
  rep.per_gnb = {{0, 10.0}, {1, 12.0}};
  rep.serving_geo_db = 10.0;
  rep.best_gnb = 1;
  rep.best_geo_db = 12.0;

  rep.tic = 0;
  st = initial_attach(rep, params);
  st.serving_gnb = 0;  // keep cell 0 serving so the margin stays sub-threshold

  std::int64_t tic = 1;
  for (auto _ : state) {
    rep.tic = tic;
    step(st, rep, params, tic);
    benchmark::DoNotOptimize(st.ho_timer);
    ++tic;
  }
}
BENCHMARK(BM_Step);

void BM_RunTu(benchmark::State& state) {
  ScenarioConfig scenario;
  scenario.den_gnb = static_cast<int>(state.range(0));
  const auto sites = deployment(scenario.gnb_count());
  const HandoverParams params{.ttt_tics = 4};
  const LinkConfig link;
  RandomStream rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_tu(scenario, sites, params, link, rng));
  }
}
BENCHMARK(BM_RunTu)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
