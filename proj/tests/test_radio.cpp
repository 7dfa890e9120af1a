#include <cmath>

#include "doctest.h"
#include "reference_models.hpp"
#include "udnsim/radio.hpp"

using namespace udnsim;

namespace {

GnbSite site_at(int id, double x, double y) {
  GnbSite s;
  s.id = id;
  s.position = {x, y};
  return s;
}

}  // namespace

TEST_CASE("pathloss matches the urban macro law") {
  const LinkConfig cfg;
  CHECK(pathloss_db(1000.0, cfg) == doctest::Approx(128.1).epsilon(1e-12));
  CHECK(pathloss_db(100.0, cfg) == doctest::Approx(128.1 - 37.6).epsilon(1e-12));
  CHECK(pathloss_db(2000.0, cfg) ==
        doctest::Approx(128.1 + 37.6 * std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("pathloss floors the distance") {
  const LinkConfig cfg;
  const double at_floor = 128.1 - 3.0 * 37.6;  // one metre = 1e-3 km
  CHECK(pathloss_db(0.0, cfg) == doctest::Approx(at_floor).epsilon(1e-9));
  CHECK(pathloss_db(0.5, cfg) == doctest::Approx(at_floor).epsilon(1e-9));
  CHECK(pathloss_db(1.0, cfg) == doctest::Approx(at_floor).epsilon(1e-9));

  LinkConfig wide = cfg;
  wide.min_distance_m = 10.0;
  CHECK(pathloss_db(5.0, wide) == pathloss_db(10.0, wide));
}

TEST_CASE("pathloss is non-decreasing in distance") {
  const LinkConfig cfg;
  RandomStream rng(31);
  for (int i = 0; i < 300; ++i) {
    const double d1 = rng.uniform(0.0, 2000.0);
    const double d2 = d1 + rng.uniform(0.0, 500.0);
    CHECK(pathloss_db(d1, cfg) <= pathloss_db(d2, cfg) + 1e-12);
  }
}

TEST_CASE("noise power over the receive bandwidth") {
  LinkConfig cfg;
  CHECK(noise_power_dbm(cfg) == doctest::Approx(-97.0).epsilon(1e-12));
  cfg.bandwidth_hz = 1.0;
  CHECK(noise_power_dbm(cfg) == doctest::Approx(-167.0).epsilon(1e-12));
  cfg.bandwidth_hz = 20.0e6;
  CHECK(noise_power_dbm(cfg) == doctest::Approx(-93.9897).epsilon(1e-6));
}

TEST_CASE("received power budget at reference distances") {
  const LinkConfig cfg;
  const GnbSite s = site_at(0, 0.0, 0.0);
  CHECK(received_power_dbm(s, {100.0, 0.0}, cfg) == doctest::Approx(-45.5).epsilon(1e-9));
  CHECK(received_power_dbm(s, {600.0, 800.0}, cfg) == doctest::Approx(-83.1).epsilon(1e-9));

  LinkConfig gains = cfg;
  gains.rx_antenna_gain_dbi = 3.0;
  GnbSite hot = s;
  hot.tx_power_dbm = 36.0;
  hot.antenna_gain_dbi = 10.0;
  CHECK(received_power_dbm(hot, {100.0, 0.0}, gains) ==
        doctest::Approx(36.0 + 10.0 + 3.0 - 90.5).epsilon(1e-9));
}

TEST_CASE("disabled stochastic terms leave the stream untouched") {
  const LinkConfig cfg;  // sigma 0, fading off
  const GnbSite s = site_at(0, 0.0, 0.0);
  RandomStream rng(55);
  RandomStream mirror(55);
  for (int i = 0; i < 5; ++i) {
    CHECK(received_power_dbm(s, {50.0 + i, 20.0}, cfg, &rng) ==
          received_power_dbm(s, {50.0 + i, 20.0}, cfg, nullptr));
  }
  CHECK(rng.next_u64() == mirror.next_u64());
}

TEST_CASE("shadowing subtracts one normal draw") {
  LinkConfig cfg;
  cfg.shadowing_sigma_db = 8.0;
  const GnbSite s = site_at(0, 0.0, 0.0);
  RandomStream rng(101);
  RandomStream mirror(101);
  const double got = received_power_dbm(s, {100.0, 0.0}, cfg, &rng);
  CHECK(got == doctest::Approx(-45.5 - mirror.normal(0.0, 8.0)).epsilon(1e-12));
}

TEST_CASE("fading applies after shadowing in stream order") {
  LinkConfig cfg;
  cfg.shadowing_sigma_db = 4.0;
  cfg.fast_fading = true;
  const GnbSite s = site_at(0, 0.0, 0.0);
  RandomStream rng(77);
  RandomStream mirror(77);
  const double got = received_power_dbm(s, {100.0, 0.0}, cfg, &rng);
  const double shadow = mirror.normal(0.0, 4.0);
  const double gain = std::max(mirror.exponential1(), 1.0e-300);
  CHECK(got == doctest::Approx(-45.5 - shadow + 10.0 * std::log10(gain)).epsilon(1e-12));
}

TEST_CASE("single covering site turns geometry into SNR") {
  const LinkConfig cfg;
  const std::vector<GnbSite> sites = {site_at(0, 0.0, 0.0)};
  const auto geo = geometry_db({100.0, 0.0}, 0, sites, cfg);
  REQUIRE(geo.has_value());
  CHECK(*geo == doctest::Approx(-45.5 - (-97.0)).epsilon(1e-9));
}

TEST_CASE("two-site geometry matches a linear-domain hand computation") {
  const LinkConfig cfg;
  const std::vector<GnbSite> sites = {site_at(0, 0.0, 0.0), site_at(1, 300.0, 0.0)};
  const Point2 tu{100.0, 0.0};  // 100 m from serving, 200 m from interferer

  const double p_serving = std::pow(10.0, -45.5 / 10.0);
  const double rx_interferer = 45.0 - (128.1 + 37.6 * std::log10(0.2));
  const double p_interferer = std::pow(10.0, rx_interferer / 10.0);
  const double noise = std::pow(10.0, -97.0 / 10.0);
  const double expected = 10.0 * std::log10(p_serving / (p_interferer + noise));

  const auto geo = geometry_db(tu, 0, sites, cfg);
  REQUIRE(geo.has_value());
  CHECK(*geo == doctest::Approx(expected).epsilon(1e-12));
  CHECK(*geo == doctest::Approx(11.32).epsilon(0.0005));
}

TEST_CASE("coverage boundary is inclusive at the radius") {
  const LinkConfig cfg;
  const std::vector<GnbSite> sites = {site_at(0, 0.0, 0.0)};
  const auto in = measure({300.0, 0.0}, sites, 0, cfg);
  CHECK(in.per_gnb.size() == 1);
  CHECK(in.serving_geo_db.has_value());
  const auto out = measure({300.0001, 0.0}, sites, 0, cfg);
  CHECK(out.per_gnb.empty());
  CHECK_FALSE(out.serving_geo_db.has_value());
  CHECK_FALSE(out.best_gnb.has_value());
  CHECK_FALSE(out.best_geo_db.has_value());
}

TEST_CASE("best cell ties break to the lowest id") {
  const LinkConfig cfg;
  const std::vector<GnbSite> sites = {site_at(0, -100.0, 0.0), site_at(1, 100.0, 0.0)};
  const auto r = measure({0.0, 0.0}, sites, 1, cfg);
  REQUIRE(r.best_gnb.has_value());
  CHECK(*r.best_gnb == 0);
  REQUIRE(r.serving_geo_db.has_value());
  CHECK(*r.serving_geo_db == doctest::Approx(*r.best_geo_db).epsilon(1e-12));
}

TEST_CASE("dB conversions round-trip") {
  RandomStream rng(17);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(-200.0, 50.0);
    CHECK(mw_to_dbm(dbm_to_mw(x)) == doctest::Approx(x).epsilon(1e-12));
  }
  CHECK(dbm_to_mw(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dbm_to_mw(30.0) == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("measure agrees with the per-candidate reference model") {
  const LinkConfig cfg;
  RandomStream gen(404);
  for (int scene = 0; scene < 300; ++scene) {
    const int n = 1 + static_cast<int>(gen.uniform(0.0, 40.0));
    std::vector<GnbSite> sites;
    for (int i = 0; i < n; ++i) {
      sites.push_back(site_at(i, gen.uniform(0.0, 1000.0), gen.uniform(0.0, 1000.0)));
    }
    const Point2 tu{gen.uniform(0.0, 1000.0), gen.uniform(0.0, 1000.0)};
    std::optional<int> serving;
    const double pick = gen.uniform01();
    if (pick < 0.6) {
      serving = static_cast<int>(gen.uniform(0.0, static_cast<double>(n)));
    } else if (pick < 0.7) {
      serving = n + 7;  // stale id that no site carries
    }

    const GeometryReport got = measure(tu, sites, serving, cfg, nullptr, scene);
    const GeometryReport want = refmodel::report(tu, sites, serving, cfg, scene);

    CHECK(got.tic == want.tic);
    REQUIRE(got.per_gnb.size() == want.per_gnb.size());
    for (std::size_t k = 0; k < got.per_gnb.size(); ++k) {
      CHECK(got.per_gnb[k].gnb_id == want.per_gnb[k].gnb_id);
      CHECK(got.per_gnb[k].rx_power_dbm ==
            doctest::Approx(want.per_gnb[k].rx_power_dbm).epsilon(1e-9));
    }
    CHECK(got.serving_geo_db.has_value() == want.serving_geo_db.has_value());
    if (got.serving_geo_db) {
      CHECK(*got.serving_geo_db == doctest::Approx(*want.serving_geo_db).epsilon(1e-9));
    }
    CHECK(got.best_gnb.has_value() == want.best_gnb.has_value());
    if (got.best_gnb) {
      CHECK(*got.best_gnb == *want.best_gnb);
      CHECK(*got.best_geo_db == doctest::Approx(*want.best_geo_db).epsilon(1e-9));
    }
  }
}

TEST_CASE("an extra covering interferer lowers serving geometry") {
  const LinkConfig cfg;
  RandomStream gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GnbSite> sites = {site_at(0, gen.uniform(400.0, 600.0), gen.uniform(400.0, 600.0))};
    const Point2 tu{500.0, 500.0};
    const int extras = 1 + static_cast<int>(gen.uniform(0.0, 5.0));
    for (int i = 0; i < extras; ++i) {
      sites.push_back(site_at(1 + i, gen.uniform(300.0, 700.0), gen.uniform(300.0, 700.0)));
    }
    const auto alone = geometry_db(tu, 0, std::span(sites.data(), 1), cfg);
    const auto crowded = geometry_db(tu, 0, sites, cfg);
    REQUIRE(alone.has_value());
    REQUIRE(crowded.has_value());
    CHECK(*crowded < *alone + 1e-12);
  }
}

TEST_CASE("geometry rises with own transmit power") {
  const LinkConfig cfg;
  std::vector<GnbSite> sites = {site_at(0, 450.0, 500.0), site_at(1, 550.0, 500.0)};
  const auto before = geometry_db({500.0, 500.0}, 0, sites, cfg);
  sites[0].tx_power_dbm += 3.0;
  const auto after = geometry_db({500.0, 500.0}, 0, sites, cfg);
  REQUIRE(before.has_value());
  REQUIRE(after.has_value());
  CHECK(*after > *before);
}

TEST_CASE("measure_into reuses buffers without stale fields") {
  const LinkConfig cfg;
  const std::vector<GnbSite> sites = {site_at(0, 0.0, 0.0)};
  GeometryReport report;
  measure_into(report, {100.0, 0.0}, sites, 0, cfg, nullptr, 1);
  CHECK(report.per_gnb.size() == 1);
  CHECK(report.serving_geo_db.has_value());
  // Second fill from an uncovered position must clear every field.
  measure_into(report, {900.0, 900.0}, sites, 0, cfg, nullptr, 2);
  CHECK(report.tic == 2);
  CHECK(report.per_gnb.empty());
  CHECK_FALSE(report.serving_geo_db.has_value());
  CHECK_FALSE(report.best_gnb.has_value());
  CHECK_FALSE(report.best_geo_db.has_value());
}
