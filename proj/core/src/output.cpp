#include "udnsim/output.hpp"

#include <ostream>

#include "json.hpp"
#include "udnsim/numfmt.hpp"
#include "udnsim/version.hpp"

namespace udnsim {

namespace {

std::string opt_text(const std::optional<double>& v) {
  return v ? format_double(*v) : "nan";
}

nlohmann::ordered_json config_snapshot(const SimConfig& cfg) {
  nlohmann::ordered_json j;
  const auto& s = cfg.scenario;
  j["area_m"] = s.area.width_m;
  j["den_gnb"] = s.den_gnb;
  j["route"] = to_string(s.route.kind);
  j["start_x_m"] = s.route.start.x;
  j["start_y_m"] = s.route.start.y;
  j["end_x_m"] = s.route.end.x;
  j["end_y_m"] = s.route.end.y;
  j["velocity_kmh"] = s.velocity_kmh;
  j["run_time_ms"] = s.run_time_ms;
  j["tic_ms"] = s.tic_ms;
  j["iterations"] = s.iterations;
  j["seed"] = s.seed;
  j["carrier_ghz"] = cfg.link.carrier_ghz;
  j["bandwidth_hz"] = cfg.link.bandwidth_hz;
  j["noise_figure_db"] = cfg.link.noise_figure_db;
  j["tx_power_dbm"] = cfg.site.tx_power_dbm;
  j["gnb_antenna_gain_dbi"] = cfg.site.antenna_gain_dbi;
  j["rx_antenna_gain_dbi"] = cfg.link.rx_antenna_gain_dbi;
  j["gnb_coverage_m"] = cfg.site.coverage_m;
  j["gnb_height_m"] = cfg.site.height_m;
  j["sinr_min_db"] = cfg.link.sinr_min_db;
  j["shadowing_sigma_db"] = cfg.link.shadowing_sigma_db;
  j["fast_fading"] = cfg.link.fast_fading ? 1 : 0;
  j["min_distance_m"] = cfg.link.min_distance_m;
  return j;
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const KpiCell& c : result.cells) {
    out << to_string(c.case_label) << ',' << c.ttt_tics << ',' << c.den_gnb << ','
        << format_double(c.velocity_kmh) << ',' << c.iterations << ','
        << format_double(c.mean_ho_rate) << ',' << opt_text(c.ho_avg_geo_db) << ','
        << opt_text(c.pooled_ho_avg_geo_db) << ',' << (c.failure ? 1 : 0) << ','
        << format_double(c.connection_losses_mean) << '\n';
  }
}

void write_json(const SweepResult& result, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["tool"] = {{"name", kToolName}, {"version", result.tool_version}};
  doc["provenance"] = {{"master_seed", result.master_seed},
                       {"crn", result.crn},
                       {"config", config_snapshot(result.base)}};
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const KpiCell& c : result.cells) {
    nlohmann::ordered_json jc;
    jc["case"] = to_string(c.case_label);
    jc["ttt_tics"] = c.ttt_tics;
    jc["den_gnb"] = c.den_gnb;
    jc["velocity_kmh"] = c.velocity_kmh;
    jc["iterations"] = c.iterations;
    jc["mean_ho_rate"] = c.mean_ho_rate;
    if (c.ho_avg_geo_db) {
      jc["ho_avg_geo_db"] = *c.ho_avg_geo_db;
      jc["pooled_ho_avg_geo_db"] = *c.pooled_ho_avg_geo_db;
    } else {
      jc["ho_avg_geo_db"] = nullptr;
      jc["pooled_ho_avg_geo_db"] = nullptr;
    }
    jc["failure"] = c.failure;
    jc["iterations_with_handover"] = c.iterations_with_handover;
    jc["connection_losses_mean"] = c.connection_losses_mean;
    cells.push_back(std::move(jc));
  }
  doc["cells"] = std::move(cells);
  out << doc.dump(2) << '\n';
}

TraceWriter::TraceWriter(std::ostream& out) : out_(out) {
  out_ << kTraceHeader << '\n';
}

TicObserver TraceWriter::observer() {
  return [this](const TicSnapshot& snap) {
    out_ << snap.tic << ',' << format_double(snap.position.x) << ','
         << format_double(snap.position.y) << ',';
    if (snap.state.serving_gnb) out_ << *snap.state.serving_gnb;
    out_ << ',';
    if (snap.report.best_gnb) out_ << *snap.report.best_gnb;
    out_ << ',';
    out_ << (snap.report.serving_geo_db ? format_double(*snap.report.serving_geo_db) : "nan")
         << ','
         << (snap.report.best_geo_db ? format_double(*snap.report.best_geo_db) : "nan") << ','
         << snap.state.ho_timer << ',';
    if (snap.event != nullptr) out_ << to_string(snap.event->kind);
    out_ << '\n';
  };
}

}  // namespace udnsim
