#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udnsim/point.hpp"
#include "udnsim/rng.hpp"

namespace udnsim {

struct AreaSpec {
  double width_m = 1000.0;
  double height_m = 1000.0;
};

enum class RouteKind { CaseA, CaseB, Custom };

const char* to_string(RouteKind kind);

// A straight-line route walked at constant speed. heading_deg is stored
// explicitly (0 = +x, counterclockwise) and must agree with the endpoints;
// validate_config cross-checks the two.
struct Route {
  RouteKind kind = RouteKind::CaseA;
  Point2 start{1000.0, 0.0};
  Point2 end{0.0, 1000.0};
  double heading_deg = 135.0;

  static Route case_a();  // corner-to-corner diagonal
  static Route case_b();  // east-to-west mid line
  static Route custom(Point2 start, Point2 end);

  double length_m() const { return distance(start, end); }
};

// Heading implied by a start/end pair, in [0, 360).
double heading_from_endpoints(Point2 start, Point2 end);

struct ScenarioConfig {
  AreaSpec area;
  int den_gnb = 10;  // sites per km^2
  Route route = Route::case_a();
  double velocity_kmh = 50.0;
  std::int64_t run_time_ms = 70000;
  int tic_ms = 10;
  int iterations = 100;
  std::uint64_t seed = 1;

  double velocity_mps() const { return velocity_kmh / 3.6; }
  std::int64_t tic_count() const { return run_time_ms / tic_ms; }  // steps after tic 0
  int gnb_count() const;  // density scaled by area in km^2
};

// Per-site radio constants shared by every gNB in a deployment.
struct SiteParams {
  double height_m = 15.0;
  double tx_power_dbm = 30.0;
  double antenna_gain_dbi = 15.0;
  double coverage_m = 300.0;
};

struct GnbSite {
  int id = 0;
  Point2 position;
  double height_m = 15.0;
  double tx_power_dbm = 30.0;
  double antenna_gain_dbi = 15.0;
  double coverage_m = 300.0;
};

// Uniform binomial point process: exactly `count` sites, i.i.d. uniform over
// the area. Draw order is fixed (per site: x then y) so placements are part
// of the reproducibility contract. ids are 0..count-1 in draw order.
std::vector<GnbSite> place_gnbs(const AreaSpec& area, int count, RandomStream& rng,
                                const SiteParams& params = {});

}  // namespace udnsim
