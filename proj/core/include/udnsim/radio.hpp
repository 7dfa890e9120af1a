#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udnsim/point.hpp"
#include "udnsim/rng.hpp"
#include "udnsim/scenario.hpp"

namespace udnsim {

struct LinkConfig {
  double carrier_ghz = 6.0;  // recorded; the pathloss law has no carrier term
  double bandwidth_hz = 10.0e6;
  double noise_figure_db = 7.0;
  double thermal_noise_dbm_per_hz = -174.0;
  double rx_antenna_gain_dbi = 0.0;
  double sinr_min_db = -7.0;
  double min_distance_m = 1.0;      // pathloss distance floor
  double shadowing_sigma_db = 0.0;  // 0 disables the draw
  bool fast_fading = false;         // Rayleigh power fading when enabled
};

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

// 128.1 + 37.6 log10(d_km); distance is floored at cfg.min_distance_m.
double pathloss_db(double distance_m, const LinkConfig& cfg);

// Noise power over the receive bandwidth, noise figure included.
double noise_power_dbm(const LinkConfig& cfg);

// Downlink received power. When rng is non-null the stochastic terms are
// drawn in a fixed order (shadowing, then fading); a null rng suppresses
// them, giving the deterministic budget. shadowing_sigma_db == 0 skips the
// shadowing draw entirely, so the stream advances identically whether the
// term is "drawn as 0" or not drawn.
double received_power_dbm(const GnbSite& site, Point2 tu_pos, const LinkConfig& cfg,
                          RandomStream* rng = nullptr);
// Same budget with the distance precomputed by the caller.
double received_power_dbm_at(const GnbSite& site, double distance_m, const LinkConfig& cfg,
                             RandomStream* rng = nullptr);

struct GnbPower {
  int gnb_id = 0;
  double rx_power_dbm = 0.0;
};

struct BestCell {
  int gnb_id = 0;
  double geo_db = 0.0;
};

// One tic's radio picture. per_gnb holds only covering sites (distance within
// coverage radius), ascending id. serving_geo_db is empty when there is no
// serving cell or it is not covering; best_* are empty when nothing covers.
struct GeometryReport {
  std::int64_t tic = 0;
  std::vector<GnbPower> per_gnb;
  std::optional<double> serving_geo_db;
  std::optional<int> best_gnb;
  std::optional<double> best_geo_db;
};

// Geometry of `serving_id`: its power over the sum of the other covering
// sites' powers plus noise, all in linear milliwatts. Empty when the site is
// out of coverage range. Draws (if any) happen for every covering site in
// ascending id order, mirroring measure().
std::optional<double> geometry_db(Point2 tu_pos, int serving_id, std::span<const GnbSite> sites,
                                  const LinkConfig& cfg, RandomStream* rng = nullptr);

// Best attainable geometry over covering sites; ties go to the lowest id.
// Maximising received power is equivalent: geometry is strictly increasing
// in own power once the covering set is fixed.
std::optional<BestCell> best_geometry(Point2 tu_pos, std::span<const GnbSite> sites,
                                      const LinkConfig& cfg, RandomStream* rng = nullptr);

// Full per-tic measurement: one power draw per covering site feeds the
// covering list, the serving geometry and the best-cell pick, so all three
// views are consistent with the same fading/shadowing realisation. Callers
// must pass sites sorted by ascending id (place_gnbs output is); per_gnb and
// the draw order then follow ascending id.
GeometryReport measure(Point2 tu_pos, std::span<const GnbSite> sites,
                       std::optional<int> serving_id, const LinkConfig& cfg,
                       RandomStream* rng = nullptr, std::int64_t tic = 0);

// Allocation-free variant for the per-tic loop; reuses out.per_gnb storage.
void measure_into(GeometryReport& out, Point2 tu_pos, std::span<const GnbSite> sites,
                  std::optional<int> serving_id, const LinkConfig& cfg,
                  RandomStream* rng = nullptr, std::int64_t tic = 0);

}  // namespace udnsim
