#include "udnsim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "udnsim/config_file.hpp"
#include "udnsim/harness.hpp"
#include "udnsim/numfmt.hpp"
#include "udnsim/output.hpp"
#include "udnsim/version.hpp"

namespace udnsim {

namespace {

struct IoFlags {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
};

void add_io_flags(CLI::App* sub, IoFlags& io) {
  sub->add_option("--config", io.config_path, "Config file (key=value lines)");
  sub->add_option("--out", io.out_path, "Output path (default: stdout)");
  sub->add_option("--format", io.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

SimConfig load_config(const IoFlags& io) {
  if (io.config_path.empty()) return SimConfig{};
  return parse_config_file(io.config_path);
}

RouteKind case_from_string(const std::string& s) {
  return s == "A" ? RouteKind::CaseA : RouteKind::CaseB;
}

A3Reference a3_from_string(const std::string& s) {
  return s == "instant" ? A3Reference::Instant : A3Reference::Avg;
}

int emit(const SweepResult& result, const IoFlags& io) {
  std::ostringstream buf;
  if (io.format == "json") {
    write_json(result, buf);
  } else {
    write_csv(result, buf);
  }
  if (io.out_path.empty() || io.out_path == "-") {
    std::cout << buf.str();
    std::cout.flush();
    return std::cout ? 0 : 2;
  }
  std::ofstream out(io.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << io.out_path << "'\n";
    return 2;
  }
  out << buf.str();
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << io.out_path << "' failed\n";
    return 2;
  }
  return 0;
}

SweepResult wrap_single_cell(KpiCell cell, const SimConfig& cfg) {
  SweepResult result;
  result.cells.push_back(std::move(cell));
  result.cell_cpu_seconds.push_back(0.0);
  result.base = cfg;
  result.crn = false;
  result.master_seed = cfg.scenario.seed;
  result.tool_version = kToolVersion;
  return result;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"udnsim: downlink handover study simulator"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  // run
  auto* run_sub = app.add_subcommand("run", "Simulate one grid cell");
  IoFlags run_io;
  std::string run_case;
  int run_ttt = 1;
  int run_density = 0;
  double run_velocity = 0.0;
  int run_iterations = 0;
  std::uint64_t run_seed = 0;
  std::string run_trace;
  std::string run_a3 = "avg";
  run_sub->add_option("--case", run_case, "Route preset")->check(CLI::IsMember({"A", "B"}));
  auto* run_ttt_opt =
      run_sub->add_option("--ttt", run_ttt, "Time-to-trigger in tics")->check(CLI::Range(1, 1 << 20));
  auto* run_density_opt = run_sub->add_option("--density", run_density, "gNBs per km^2")
                              ->check(CLI::Range(1, 1 << 20));
  auto* run_velocity_opt =
      run_sub->add_option("--velocity", run_velocity, "Speed in km/h")->check(CLI::PositiveNumber);
  auto* run_iter_opt = run_sub->add_option("--iterations", run_iterations, "Independent runs")
                           ->check(CLI::Range(1, 1 << 24));
  auto* run_seed_opt = run_sub->add_option("--seed", run_seed, "Master seed");
  run_sub->add_option("--trace", run_trace, "Write a per-tic trace to this path");
  run_sub->add_option("--a3-reference", run_a3, "Serving reference for the A3 margin")
      ->check(CLI::IsMember({"avg", "instant"}))
      ->capture_default_str();
  add_io_flags(run_sub, run_io);

  // sweep
  auto* sweep_sub = app.add_subcommand("sweep", "Simulate a grid of cells");
  IoFlags sweep_io;
  std::string sweep_preset;
  std::string sweep_case;
  std::vector<int> sweep_ttt;
  std::vector<int> sweep_density;
  std::vector<double> sweep_velocity;
  int sweep_iterations = 0;
  std::uint64_t sweep_seed = 0;
  bool sweep_crn = false;
  int sweep_threads = 0;
  std::string sweep_a3 = "avg";
  auto* preset_opt = sweep_sub->add_option("--preset", sweep_preset, "Named study grid")
                         ->check(CLI::IsMember({"fig4", "fig5", "tables"}));
  auto* sweep_case_opt =
      sweep_sub->add_option("--case", sweep_case, "Route preset for explicit grids")
          ->check(CLI::IsMember({"A", "B"}));
  auto* ttt_list_opt = sweep_sub
                           ->add_option("--ttt-list", sweep_ttt,
                                        "Comma-separated time-to-trigger values")
                           ->delimiter(',');
  auto* den_list_opt =
      sweep_sub->add_option("--density-list", sweep_density, "Comma-separated densities")
          ->delimiter(',');
  auto* vel_list_opt =
      sweep_sub->add_option("--velocity-list", sweep_velocity, "Comma-separated speeds (km/h)")
          ->delimiter(',');
  auto* sweep_iter_opt = sweep_sub->add_option("--iterations", sweep_iterations,
                                               "Independent runs per cell")
                             ->check(CLI::Range(1, 1 << 24));
  auto* sweep_seed_opt = sweep_sub->add_option("--seed", sweep_seed, "Master seed");
  sweep_sub->add_flag("--crn", sweep_crn,
                      "Common random numbers: reuse draws across the TTT axis");
  sweep_sub->add_option("--threads", sweep_threads, "Worker threads (0 = all cores)")
      ->check(CLI::Range(0, 4096));
  sweep_sub->add_option("--a3-reference", sweep_a3, "Serving reference for the A3 margin")
      ->check(CLI::IsMember({"avg", "instant"}))
      ->capture_default_str();
  preset_opt->excludes(ttt_list_opt)->excludes(den_list_opt)->excludes(vel_list_opt);
  add_io_flags(sweep_sub, sweep_io);

  // validate
  auto* validate_sub = app.add_subcommand("validate", "Parse, echo and check a config");
  std::string validate_config_path;
  validate_sub->add_option("--config", validate_config_path, "Config file to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_sub->parsed()) {
      SimConfig cfg = load_config(run_io);
      if (*run_seed_opt) cfg.scenario.seed = run_seed;
      if (*run_iter_opt) cfg.scenario.iterations = run_iterations;
      if (*run_density_opt) cfg.scenario.den_gnb = run_density;
      if (*run_velocity_opt) cfg.scenario.velocity_kmh = run_velocity;

      GridPoint point;
      point.case_label =
          run_case.empty() ? cfg.scenario.route.kind : case_from_string(run_case);
      point.ttt_tics = *run_ttt_opt ? run_ttt : 1;
      point.den_gnb = cfg.scenario.den_gnb;
      point.velocity_kmh = cfg.scenario.velocity_kmh;

      HandoverParams hp;
      hp.ttt_tics = point.ttt_tics;
      hp.sinr_min_db = cfg.link.sinr_min_db;
      hp.a3_reference = a3_from_string(run_a3);

      std::ofstream trace_stream;
      std::optional<TraceWriter> trace;
      IterationObserverFactory make_observer;
      if (!run_trace.empty()) {
        trace_stream.open(run_trace, std::ios::binary);
        if (!trace_stream) {
          std::cerr << "error: cannot open trace file '" << run_trace << "'\n";
          return 2;
        }
        trace.emplace(trace_stream);
        make_observer = [&trace](int, std::uint64_t) { return trace->observer(); };
      }

      KpiCell cell = run_cell(point, cfg, hp, false, make_observer);
      if (trace) {
        trace_stream.flush();
        if (!trace_stream) {
          std::cerr << "error: write to '" << run_trace << "' failed\n";
          return 2;
        }
      }
      return emit(wrap_single_cell(std::move(cell), cfg), run_io);
    }

    if (sweep_sub->parsed()) {
      SimConfig cfg = load_config(sweep_io);
      if (*sweep_seed_opt) cfg.scenario.seed = sweep_seed;
      if (*sweep_iter_opt) cfg.scenario.iterations = sweep_iterations;

      HandoverParams hp;
      hp.sinr_min_db = cfg.link.sinr_min_db;
      hp.a3_reference = a3_from_string(sweep_a3);

      SweepSpec spec;
      if (*preset_opt) {
        if (sweep_preset == "fig4") {
          spec = preset_fig4(cfg, hp);
        } else if (sweep_preset == "fig5") {
          spec = preset_fig5(cfg, hp);
        } else {
          spec = preset_tables(cfg, hp);
        }
      } else {
        if (sweep_ttt.empty() || sweep_density.empty() || sweep_velocity.empty()) {
          std::cerr << "error: sweep needs --preset or all of --ttt-list, --density-list, "
                       "--velocity-list\n";
          return 1;
        }
        spec.base = cfg;
        spec.ho = hp;
        spec.ttt_list = sweep_ttt;
        spec.density_list = sweep_density;
        spec.velocity_list = sweep_velocity;
        spec.cases = {*sweep_case_opt ? case_from_string(sweep_case)
                                      : cfg.scenario.route.kind};
      }
      spec.crn = sweep_crn;
      spec.threads = sweep_threads;

      SweepResult result = run_sweep(spec);
      std::cerr << "sweep: " << result.cells.size() << " cells in "
                << format_double(result.total_wall_seconds) << "s\n";
      return emit(result, sweep_io);
    }

    if (validate_sub->parsed()) {
      SimConfig cfg;
      if (!validate_config_path.empty()) cfg = parse_config_file(validate_config_path);
      std::cout << serialize_config(cfg);
      std::cout.flush();
      const std::vector<std::string> errors = validate_config(cfg);
      if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "invalid: " << e << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("udnsim");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace udnsim
