#include "udnsim/config_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

#include "udnsim/numfmt.hpp"

namespace udnsim {

namespace {

const char* const kKnownKeys[] = {
    "area_m",          "den_gnb",          "route",
    "start_x_m",       "start_y_m",        "end_x_m",
    "end_y_m",         "velocity_kmh",     "run_time_ms",
    "tic_ms",          "iterations",       "seed",
    "carrier_ghz",     "bandwidth_hz",     "noise_figure_db",
    "tx_power_dbm",    "gnb_antenna_gain_dbi", "rx_antenna_gain_dbi",
    "gnb_coverage_m",  "gnb_height_m",     "sinr_min_db",
    "shadowing_sigma_db", "fast_fading",   "min_distance_m",
};

bool is_known_key(const std::string& key) {
  return std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys),
                      [&](const char* k) { return key == k; }) != std::end(kKnownKeys);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(const std::string& text) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
  return value;
}

struct RawEntry {
  std::string value;
  int line = 0;
};

struct Collector {
  std::map<std::string, RawEntry> entries;
  std::vector<std::string> errors;

  std::optional<std::string> take(const char* key) {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second.value;
  }

  int line_of(const char* key) const {
    const auto it = entries.find(key);
    return it == entries.end() ? 0 : it->second.line;
  }

  void fail(const char* key, const std::string& why) {
    errors.push_back("line " + std::to_string(line_of(key)) + ": " + std::string(key) + ": " + why);
  }

  template <typename T>
  void number(const char* key, T& target, const char* kind) {
    if (auto raw = take(key)) {
      if (auto v = parse_number<T>(*raw)) {
        target = *v;
      } else {
        fail(key, "expected " + std::string(kind) + ", got '" + *raw + "'");
      }
    }
  }
};

constexpr double kEndpointTolerance = 1.0e-9;

}  // namespace

ConfigError::ConfigError(std::vector<std::string> messages)
    : std::runtime_error([&messages] {
        std::string joined;
        for (const auto& m : messages) {
          if (!joined.empty()) joined += '\n';
          joined += m;
        }
        return joined;
      }()),
      messages_(std::move(messages)) {}

SimConfig parse_config(std::istream& in) {
  Collector c;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      c.errors.push_back("line " + std::to_string(line_no) + ": expected key=value, got '" +
                         stripped + "'");
      continue;
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!is_known_key(key)) {
      c.errors.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      continue;
    }
    if (c.entries.count(key) != 0) {
      c.errors.push_back("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      continue;
    }
    c.entries[key] = RawEntry{value, line_no};
  }

  SimConfig cfg;

  double area_m = cfg.scenario.area.width_m;
  c.number("area_m", area_m, "a number");
  cfg.scenario.area = AreaSpec{area_m, area_m};

  c.number("den_gnb", cfg.scenario.den_gnb, "an integer");
  c.number("velocity_kmh", cfg.scenario.velocity_kmh, "a number");
  c.number("run_time_ms", cfg.scenario.run_time_ms, "an integer");
  c.number("tic_ms", cfg.scenario.tic_ms, "an integer");
  c.number("iterations", cfg.scenario.iterations, "an integer");
  c.number("seed", cfg.scenario.seed, "an unsigned integer");

  c.number("carrier_ghz", cfg.link.carrier_ghz, "a number");
  c.number("bandwidth_hz", cfg.link.bandwidth_hz, "a number");
  c.number("noise_figure_db", cfg.link.noise_figure_db, "a number");
  c.number("tx_power_dbm", cfg.site.tx_power_dbm, "a number");
  c.number("gnb_antenna_gain_dbi", cfg.site.antenna_gain_dbi, "a number");
  c.number("rx_antenna_gain_dbi", cfg.link.rx_antenna_gain_dbi, "a number");
  c.number("gnb_coverage_m", cfg.site.coverage_m, "a number");
  c.number("gnb_height_m", cfg.site.height_m, "a number");
  c.number("sinr_min_db", cfg.link.sinr_min_db, "a number");
  c.number("shadowing_sigma_db", cfg.link.shadowing_sigma_db, "a number");
  c.number("min_distance_m", cfg.link.min_distance_m, "a number");

  if (auto raw = c.take("fast_fading")) {
    if (*raw == "0") {
      cfg.link.fast_fading = false;
    } else if (*raw == "1") {
      cfg.link.fast_fading = true;
    } else {
      c.fail("fast_fading", "expected 0 or 1, got '" + *raw + "'");
    }
  }

  std::optional<double> sx, sy, ex, ey;
  {
    double v = 0.0;
    if (c.take("start_x_m")) { c.number("start_x_m", v, "a number"); sx = v; }
    if (c.take("start_y_m")) { c.number("start_y_m", v, "a number"); sy = v; }
    if (c.take("end_x_m")) { c.number("end_x_m", v, "a number"); ex = v; }
    if (c.take("end_y_m")) { c.number("end_y_m", v, "a number"); ey = v; }
  }

  std::string route_str = "A";
  if (auto raw = c.take("route")) route_str = *raw;

  const bool any_endpoint = sx || sy || ex || ey;
  if (route_str == "A" || route_str == "B") {
    const Route preset = route_str == "A" ? Route::case_a() : Route::case_b();
    cfg.scenario.route = preset;
    if (any_endpoint) {
      auto check = [&](const char* key, const std::optional<double>& got, double want) {
        if (got && std::fabs(*got - want) > kEndpointTolerance) {
          c.fail(key, "does not match route " + route_str + " preset value " +
                          format_double(want));
        }
      };
      check("start_x_m", sx, preset.start.x);
      check("start_y_m", sy, preset.start.y);
      check("end_x_m", ex, preset.end.x);
      check("end_y_m", ey, preset.end.y);
    }
  } else if (route_str == "custom") {
    if (sx && sy && ex && ey) {
      cfg.scenario.route = Route::custom({*sx, *sy}, {*ex, *ey});
    } else {
      c.fail("route", "route=custom requires start_x_m, start_y_m, end_x_m and end_y_m");
    }
  } else {
    c.fail("route", "expected A, B or custom, got '" + route_str + "'");
  }

  if (!c.errors.empty()) throw ConfigError(std::move(c.errors));
  return cfg;
}

SimConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open config file '" + path + "'");
  }
  return parse_config(in);
}

std::string serialize_config(const SimConfig& cfg) {
  std::ostringstream out;
  const auto& s = cfg.scenario;
  out << "# scenario\n";
  out << "area_m=" << format_double(s.area.width_m) << '\n';
  out << "den_gnb=" << s.den_gnb << '\n';
  out << "route=" << to_string(s.route.kind) << '\n';
  out << "start_x_m=" << format_double(s.route.start.x) << '\n';
  out << "start_y_m=" << format_double(s.route.start.y) << '\n';
  out << "end_x_m=" << format_double(s.route.end.x) << '\n';
  out << "end_y_m=" << format_double(s.route.end.y) << '\n';
  out << "velocity_kmh=" << format_double(s.velocity_kmh) << '\n';
  out << "run_time_ms=" << s.run_time_ms << '\n';
  out << "tic_ms=" << s.tic_ms << '\n';
  out << "iterations=" << s.iterations << '\n';
  out << "seed=" << s.seed << '\n';
  out << "# radio\n";
  out << "carrier_ghz=" << format_double(cfg.link.carrier_ghz) << '\n';
  out << "bandwidth_hz=" << format_double(cfg.link.bandwidth_hz) << '\n';
  out << "noise_figure_db=" << format_double(cfg.link.noise_figure_db) << '\n';
  out << "tx_power_dbm=" << format_double(cfg.site.tx_power_dbm) << '\n';
  out << "gnb_antenna_gain_dbi=" << format_double(cfg.site.antenna_gain_dbi) << '\n';
  out << "rx_antenna_gain_dbi=" << format_double(cfg.link.rx_antenna_gain_dbi) << '\n';
  out << "gnb_coverage_m=" << format_double(cfg.site.coverage_m) << '\n';
  out << "gnb_height_m=" << format_double(cfg.site.height_m) << '\n';
  out << "sinr_min_db=" << format_double(cfg.link.sinr_min_db) << '\n';
  out << "shadowing_sigma_db=" << format_double(cfg.link.shadowing_sigma_db) << '\n';
  out << "fast_fading=" << (cfg.link.fast_fading ? 1 : 0) << '\n';
  out << "min_distance_m=" << format_double(cfg.link.min_distance_m) << '\n';

  char derived[128];
  std::snprintf(derived, sizeof(derived), "# derived: velocity_mps=%.2f gnb_count=%d tics_per_run=%lld\n",
                s.velocity_mps(), s.gnb_count(),
                static_cast<long long>(s.tic_ms > 0 && s.run_time_ms % s.tic_ms == 0 ? s.tic_count() : -1));
  out << derived;
  return out.str();
}

std::vector<std::string> validate_config(const SimConfig& cfg) {
  std::vector<std::string> errors;
  const auto& s = cfg.scenario;
  auto require = [&errors](bool ok, const std::string& msg) {
    if (!ok) errors.push_back(msg);
  };

  require(s.area.width_m > 0.0 && s.area.height_m > 0.0, "area_m must be positive");
  require(s.den_gnb >= 1, "den_gnb must be at least 1");
  if (s.area.width_m > 0.0 && s.den_gnb >= 1) {
    require(s.gnb_count() >= 1, "density and area give zero deployed sites");
  }
  require(s.velocity_kmh > 0.0, "velocity_kmh must be positive");
  require(s.run_time_ms > 0, "run_time_ms must be positive");
  require(s.tic_ms > 0, "tic_ms must be positive");
  if (s.tic_ms > 0 && s.run_time_ms > 0) {
    require(s.run_time_ms % s.tic_ms == 0,
            "run_time_ms must be an exact multiple of tic_ms");
  }
  require(s.iterations >= 1, "iterations must be at least 1");

  require(s.route.length_m() > 0.0, "route start and end must differ");
  if (s.route.length_m() > 0.0) {
    const double implied = heading_from_endpoints(s.route.start, s.route.end);
    double diff = std::fabs(s.route.heading_deg - implied);
    diff = std::fmod(diff, 360.0);
    if (diff > 180.0) diff = 360.0 - diff;
    require(diff <= 1.0e-6, "route heading " + format_double(s.route.heading_deg) +
                                " does not match endpoints (implied " +
                                format_double(implied) + ")");
  }
  if (s.route.kind == RouteKind::CaseA || s.route.kind == RouteKind::CaseB) {
    const Route preset =
        s.route.kind == RouteKind::CaseA ? Route::case_a() : Route::case_b();
    const bool match = std::fabs(s.route.start.x - preset.start.x) <= kEndpointTolerance &&
                       std::fabs(s.route.start.y - preset.start.y) <= kEndpointTolerance &&
                       std::fabs(s.route.end.x - preset.end.x) <= kEndpointTolerance &&
                       std::fabs(s.route.end.y - preset.end.y) <= kEndpointTolerance;
    require(match, std::string("route ") + to_string(s.route.kind) +
                       " endpoints do not match the preset");
  }

  require(cfg.link.carrier_ghz > 0.0, "carrier_ghz must be positive");
  require(cfg.link.bandwidth_hz > 0.0, "bandwidth_hz must be positive");
  require(cfg.site.coverage_m > 0.0, "gnb_coverage_m must be positive");
  require(cfg.site.height_m >= 0.0, "gnb_height_m must be non-negative");
  require(cfg.link.min_distance_m > 0.0, "min_distance_m must be positive");
  require(cfg.link.shadowing_sigma_db >= 0.0, "shadowing_sigma_db must be non-negative");
  return errors;
}

}  // namespace udnsim
