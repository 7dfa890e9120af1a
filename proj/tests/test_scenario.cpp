#include <stdexcept>
#include <cmath>
#include <set>

#include "doctest.h"
#include "udnsim/scenario.hpp"

using namespace udnsim;

TEST_CASE("route presets carry the study endpoints") {
  const Route a = Route::case_a();
  CHECK(a.kind == RouteKind::CaseA);
  CHECK(a.start.x == 1000.0);
  CHECK(a.start.y == 0.0);
  CHECK(a.end.x == 0.0);
  CHECK(a.end.y == 1000.0);
  CHECK(a.heading_deg == doctest::Approx(135.0).epsilon(1e-12));
  CHECK(a.length_m() == doctest::Approx(1000.0 * std::sqrt(2.0)).epsilon(1e-12));

  const Route b = Route::case_b();
  CHECK(b.kind == RouteKind::CaseB);
  CHECK(b.start.x == 1000.0);
  CHECK(b.start.y == 500.0);
  CHECK(b.end.x == 0.0);
  CHECK(b.end.y == 500.0);
  CHECK(b.heading_deg == doctest::Approx(180.0).epsilon(1e-12));
  CHECK(b.length_m() == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("heading_from_endpoints covers the quadrants") {
  CHECK(heading_from_endpoints({0, 0}, {1, 1}) == doctest::Approx(45.0));
  CHECK(heading_from_endpoints({0, 0}, {-1, 0}) == doctest::Approx(180.0));
  CHECK(heading_from_endpoints({0, 0}, {0, -1}) == doctest::Approx(270.0));
  CHECK(heading_from_endpoints({2, 2}, {3, 2}) == doctest::Approx(0.0));
}

TEST_CASE("gnb_count scales density by area") {
  ScenarioConfig sc;
  sc.den_gnb = 10;
  CHECK(sc.gnb_count() == 10);  // 1 km^2 default area
  sc.den_gnb = 50;
  CHECK(sc.gnb_count() == 50);
  sc.area = AreaSpec{2000.0, 2000.0};
  sc.den_gnb = 3;
  CHECK(sc.gnb_count() == 12);
  sc.area = AreaSpec{500.0, 500.0};
  sc.den_gnb = 40;
  CHECK(sc.gnb_count() == 10);
}

TEST_CASE("velocity and tic derivations") {
  ScenarioConfig sc;
  CHECK(sc.velocity_mps() == doctest::Approx(50.0 / 3.6).epsilon(1e-12));
  CHECK(sc.tic_count() == 7000);
}

TEST_CASE("place_gnbs stays in bounds with sequential ids") {
  RandomStream rng(2024);
  const AreaSpec area{1000.0, 1000.0};
  const auto sites = place_gnbs(area, 37, rng);
  REQUIRE(sites.size() == 37);
  for (int i = 0; i < 37; ++i) {
    CHECK(sites[i].id == i);
    CHECK(sites[i].position.x >= 0.0);
    CHECK(sites[i].position.x < 1000.0);
    CHECK(sites[i].position.y >= 0.0);
    CHECK(sites[i].position.y < 1000.0);
    CHECK(sites[i].tx_power_dbm == 30.0);
    CHECK(sites[i].antenna_gain_dbi == 15.0);
    CHECK(sites[i].coverage_m == 300.0);
    CHECK(sites[i].height_m == 15.0);
  }
}

TEST_CASE("place_gnbs spreads uniformly over the quadrants") {
  RandomStream rng(1);
  const AreaSpec area{1000.0, 1000.0};
  const auto sites = place_gnbs(area, 10000, rng);
  int quadrant[4] = {0, 0, 0, 0};
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& s : sites) {
    const int qx = s.position.x < 500.0 ? 0 : 1;
    const int qy = s.position.y < 500.0 ? 0 : 1;
    ++quadrant[qx + 2 * qy];
    mean_x += s.position.x;
    mean_y += s.position.y;
  }
  for (int q = 0; q < 4; ++q) {
    CHECK(quadrant[q] > 2300);
    CHECK(quadrant[q] < 2700);
  }
  CHECK(std::fabs(mean_x / 10000.0 - 500.0) < 15.0);
  CHECK(std::fabs(mean_y / 10000.0 - 500.0) < 15.0);
}

TEST_CASE("place_gnbs is seed-deterministic") {
  const AreaSpec area{800.0, 600.0};
  RandomStream a(7);
  RandomStream b(7);
  RandomStream c(8);
  const auto sa = place_gnbs(area, 20, a);
  const auto sb = place_gnbs(area, 20, b);
  const auto sc = place_gnbs(area, 20, c);
  bool identical = true;
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    identical &= sa[i].position.x == sb[i].position.x && sa[i].position.y == sb[i].position.y;
    differs |= sa[i].position.x != sc[i].position.x || sa[i].position.y != sc[i].position.y;
  }
  CHECK(identical);
  CHECK(differs);
}

TEST_CASE("place_gnbs with custom site params and random shapes") {
  RandomStream rng(99);
  SiteParams params;
  params.tx_power_dbm = 20.0;
  params.coverage_m = 150.0;
  params.antenna_gain_dbi = 5.0;
  params.height_m = 10.0;
  RandomStream shape_rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const double w = shape_rng.uniform(10.0, 5000.0);
    const double h = shape_rng.uniform(10.0, 5000.0);
    const int count = static_cast<int>(shape_rng.uniform(0.0, 200.0));
    const auto sites = place_gnbs(AreaSpec{w, h}, count, rng, params);
    REQUIRE(sites.size() == static_cast<std::size_t>(count));
    std::set<int> ids;
    for (const auto& s : sites) {
      ids.insert(s.id);
      CHECK(s.position.x >= 0.0);
      CHECK(s.position.x < w);
      CHECK(s.position.y >= 0.0);
      CHECK(s.position.y < h);
      CHECK(s.tx_power_dbm == 20.0);
      CHECK(s.coverage_m == 150.0);
    }
    CHECK(ids.size() == static_cast<std::size_t>(count));
  }
  CHECK_THROWS_AS((void)place_gnbs(AreaSpec{}, -1, rng), std::invalid_argument);
}
