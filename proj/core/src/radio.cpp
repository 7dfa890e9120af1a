#include "udnsim/radio.hpp"

#include <algorithm>
#include <cmath>

namespace udnsim {

double pathloss_db(double distance_m, const LinkConfig& cfg) {
  const double d = std::max(distance_m, cfg.min_distance_m);
  return 128.1 + 37.6 * std::log10(d / 1000.0);
}

double noise_power_dbm(const LinkConfig& cfg) {
  return cfg.thermal_noise_dbm_per_hz + 10.0 * std::log10(cfg.bandwidth_hz) +
         cfg.noise_figure_db;
}

double received_power_dbm_at(const GnbSite& site, double distance_m, const LinkConfig& cfg,
                             RandomStream* rng) {
  double p = site.tx_power_dbm + site.antenna_gain_dbi + cfg.rx_antenna_gain_dbi -
             pathloss_db(distance_m, cfg);
  if (rng != nullptr) {
    if (cfg.shadowing_sigma_db > 0.0) {
      p -= rng->normal(0.0, cfg.shadowing_sigma_db);
    }
    if (cfg.fast_fading) {
      // Unit-mean exponential power gain (Rayleigh envelope); clamped away
      // from zero so the dB conversion stays finite.
      const double gain = std::max(rng->exponential1(), 1.0e-300);
      p += 10.0 * std::log10(gain);
    }
  }
  return p;
}

double received_power_dbm(const GnbSite& site, Point2 tu_pos, const LinkConfig& cfg,
                          RandomStream* rng) {
  return received_power_dbm_at(site, distance(site.position, tu_pos), cfg, rng);
}

void measure_into(GeometryReport& out, Point2 tu_pos, std::span<const GnbSite> sites,
                  std::optional<int> serving_id, const LinkConfig& cfg, RandomStream* rng,
                  std::int64_t tic) {
  out.tic = tic;
  out.per_gnb.clear();
  out.serving_geo_db.reset();
  out.best_gnb.reset();
  out.best_geo_db.reset();

  const double noise_mw = dbm_to_mw(noise_power_dbm(cfg));
  double sum_mw = 0.0;
  double serving_mw = 0.0;
  bool serving_covering = false;
  double best_mw = 0.0;
  int best_id = -1;

  for (const GnbSite& site : sites) {
    const double d2 = squared_distance(site.position, tu_pos);
    if (d2 > site.coverage_m * site.coverage_m) continue;
    const double rx_dbm = received_power_dbm_at(site, std::sqrt(d2), cfg, rng);
    out.per_gnb.push_back({site.id, rx_dbm});
    const double mw = dbm_to_mw(rx_dbm);
    sum_mw += mw;
    if (serving_id && site.id == *serving_id) {
      serving_mw = mw;
      serving_covering = true;
    }
    if (best_id < 0 || mw > best_mw || (mw == best_mw && site.id < best_id)) {
      best_mw = mw;
      best_id = site.id;
    }
  }

  // sum_mw accumulates non-negative terms, so sum_mw >= any single term and
  // the interference difference below cannot go negative.
  if (serving_covering) {
    out.serving_geo_db = mw_to_dbm(serving_mw / (sum_mw - serving_mw + noise_mw));
  }
  if (best_id >= 0) {
    out.best_gnb = best_id;
    out.best_geo_db = mw_to_dbm(best_mw / (sum_mw - best_mw + noise_mw));
  }
}

GeometryReport measure(Point2 tu_pos, std::span<const GnbSite> sites,
                       std::optional<int> serving_id, const LinkConfig& cfg, RandomStream* rng,
                       std::int64_t tic) {
  GeometryReport out;
  measure_into(out, tu_pos, sites, serving_id, cfg, rng, tic);
  return out;
}

std::optional<double> geometry_db(Point2 tu_pos, int serving_id, std::span<const GnbSite> sites,
                                  const LinkConfig& cfg, RandomStream* rng) {
  return measure(tu_pos, sites, serving_id, cfg, rng).serving_geo_db;
}

std::optional<BestCell> best_geometry(Point2 tu_pos, std::span<const GnbSite> sites,
                                      const LinkConfig& cfg, RandomStream* rng) {
  const GeometryReport r = measure(tu_pos, sites, std::nullopt, cfg, rng);
  if (!r.best_gnb) return std::nullopt;
  return BestCell{*r.best_gnb, *r.best_geo_db};
}

}  // namespace udnsim
