#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "udnsim/radio.hpp"
#include "udnsim/scenario.hpp"

namespace udnsim {

// Reference level the A3 margin is measured against: the rolling average of
// the serving geometry (default), or the instantaneous serving sample.
enum class A3Reference { Avg, Instant };

struct HandoverParams {
  int ttt_tics = 1;             // consecutive entry tics required to fire
  double ho_hys_db = 3.0;       // A3 hysteresis
  int ho_exec_time_tics = 25;   // evaluation blackout after a handover
  double best_cio_db = 0.0;     // offset credited to the candidate cell
  double current_cio_db = 0.0;  // offset credited to the serving cell
  int avg_window = 10;          // serving-geometry samples in the rolling mean
  double sinr_min_db = -7.0;    // attach / drop threshold
  A3Reference a3_reference = A3Reference::Avg;
};

enum class EventKind { Handover, ConnectionLoss, Reattach };

const char* to_string(EventKind kind);

struct HandoverEvent {
  EventKind kind = EventKind::Handover;
  std::int64_t tic = 0;
  std::optional<int> from;
  std::optional<int> to;
  // Candidate geometry from the triggering report (Handover and Reattach).
  std::optional<double> best_geo_db;
};

// Fixed-capacity rolling mean over the last `capacity` pushed samples.
class RollingWindow {
 public:
  explicit RollingWindow(std::size_t capacity);
  void push(double value);
  void clear();
  std::size_t size() const { return size_; }
  std::size_t capacity() const { return buf_.size(); }
  bool full() const { return size_ == buf_.size(); }
  double mean() const;

 private:
  std::vector<double> buf_;
  std::size_t head_ = 0;  // slot the next push overwrites
  std::size_t size_ = 0;
};

struct HandoverState {
  explicit HandoverState(int avg_window)
      : geo_window(static_cast<std::size_t>(avg_window)) {}

  std::optional<int> serving_gnb;     // empty = detached
  int ho_timer = 0;                   // consecutive entry tics for armed_target
  bool ho_trigger = false;
  std::optional<int> armed_target;    // candidate the timer is counting for
  int exec_remaining = 0;             // tics left in the execution blackout
  RollingWindow geo_window;           // rolling serving-geometry samples
  int ho_times = 0;
  std::vector<HandoverEvent> events;
  std::int64_t last_tic = -1;         // tic most recently consumed
};

// Attach to the best covering cell of the tic-0 report, regardless of its
// level; no event is recorded. An empty report leaves the terminal detached.
HandoverState initial_attach(const GeometryReport& report, const HandoverParams& params);

// Advance one tic. `tic` must be last_tic + 1 and match report.tic; anything
// else is a sequencing bug and throws std::logic_error. Per tic the stages
// are, in order, each later stage skipped once one acts:
//   1. detached: reattach when the best cell clears sinr_min, else idle
//   2. execution blackout: count down, sample serving geometry, no checks
//   3. connection loss when serving is uncovered or below sinr_min
//   4. sample serving geometry; the A3 check waits for a full window
//      (Avg mode; Instant mode needs no window)
//   5. A3 entry: best != serving, best above sinr_min, and margin above
//      hysteresis; consecutive entries for one candidate run the timer,
//      anything else resets it
//   6. timer reaching ttt_tics executes the handover: switch serving, start
//      the blackout, clear the window, count ho_times
void step(HandoverState& state, const GeometryReport& report, const HandoverParams& params,
          std::int64_t tic);

// Outcome of one terminal crossing one deployment.
struct RunResult {
  int ho_times = 0;
  std::vector<double> ho_best_geos;  // candidate geometry at each execution
  int connection_losses = 0;
  std::uint64_t seed = 0;
  std::vector<HandoverEvent> events;
};

// Post-step view of one tic, for trace sinks.
struct TicSnapshot {
  std::int64_t tic = 0;
  Point2 position;
  const GeometryReport& report;
  const HandoverState& state;
  const HandoverEvent* event = nullptr;  // event emitted this tic, if any
};

using TicObserver = std::function<void(const TicSnapshot&)>;

// Full single-run loop: walk the route, measure every tic, drive the state
// machine. The observer (when set) sees every tic including tic 0.
RunResult run_tu(const ScenarioConfig& scenario, std::span<const GnbSite> sites,
                 const HandoverParams& params, const LinkConfig& link, RandomStream& rng,
                 const TicObserver& observer = {});

}  // namespace udnsim
