#pragma once

#include <iosfwd>
#include <string>

#include "udnsim/handover.hpp"
#include "udnsim/harness.hpp"

namespace udnsim {

inline constexpr const char* kCsvHeader =
    "case,ttt_tics,den_gnb,velocity_kmh,iterations,mean_ho_rate,ho_avg_geo_db,"
    "pooled_ho_avg_geo_db,failure,connection_losses_mean";

// One row per cell in sweep order. Undefined geometry means print as "nan",
// failure as 0/1. Number text is shortest-round-trip, so equal seeds give
// byte-identical files.
void write_csv(const SweepResult& result, std::ostream& out);

// Same cells as JSON plus a provenance block (master seed, crn flag, full
// config snapshot, tool version). Undefined geometry means are null. No
// timestamps or host data: equal seeds give byte-identical documents.
void write_json(const SweepResult& result, std::ostream& out);

inline constexpr const char* kTraceHeader =
    "tic,x_m,y_m,serving,best,serving_geo_db,best_geo_db,ho_timer,event";

// Per-tic trace sink. Iterations are written back to back; the tic column
// restarts at 0 where a new iteration begins. Missing ids print as empty
// fields, missing geometry as nan.
class TraceWriter {
 public:
  explicit TraceWriter(std::ostream& out);
  // Observer writing one row per tic; valid while the writer lives.
  TicObserver observer();

 private:
  std::ostream& out_;
};

}  // namespace udnsim
