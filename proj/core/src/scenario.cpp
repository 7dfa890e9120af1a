#include "udnsim/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace udnsim {

const char* to_string(RouteKind kind) {
  switch (kind) {
    case RouteKind::CaseA: return "A";
    case RouteKind::CaseB: return "B";
    case RouteKind::Custom: return "custom";
  }
  return "?";
}

Route Route::case_a() {
  return Route{RouteKind::CaseA, {1000.0, 0.0}, {0.0, 1000.0}, 135.0};
}

Route Route::case_b() {
  return Route{RouteKind::CaseB, {1000.0, 500.0}, {0.0, 500.0}, 180.0};
}

Route Route::custom(Point2 start, Point2 end) {
  return Route{RouteKind::Custom, start, end, heading_from_endpoints(start, end)};
}

double heading_from_endpoints(Point2 start, Point2 end) {
  const double rad = std::atan2(end.y - start.y, end.x - start.x);
  double deg = rad * 180.0 / 3.141592653589793238462643383279502884;
  if (deg < 0.0) deg += 360.0;
  return deg;
}

int ScenarioConfig::gnb_count() const {
  const double area_km2 = area.width_m * area.height_m / 1.0e6;
  return static_cast<int>(std::lround(den_gnb * area_km2));
}

std::vector<GnbSite> place_gnbs(const AreaSpec& area, int count, RandomStream& rng,
                                const SiteParams& params) {
  if (count < 0) throw std::invalid_argument("place_gnbs: negative site count");
  std::vector<GnbSite> sites;
  sites.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    GnbSite s;
    s.id = i;
    s.position.x = rng.uniform(0.0, area.width_m);
    s.position.y = rng.uniform(0.0, area.height_m);
    s.height_m = params.height_m;
    s.tx_power_dbm = params.tx_power_dbm;
    s.antenna_gain_dbi = params.antenna_gain_dbi;
    s.coverage_m = params.coverage_m;
    sites.push_back(s);
  }
  return sites;
}

}  // namespace udnsim
