#include "udnsim/handover.hpp"

#include <stdexcept>

#include "udnsim/mobility.hpp"

namespace udnsim {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Handover: return "handover";
    case EventKind::ConnectionLoss: return "connection_loss";
    case EventKind::Reattach: return "reattach";
  }
  return "?";
}

RollingWindow::RollingWindow(std::size_t capacity) : buf_(capacity, 0.0) {
  if (capacity == 0) throw std::invalid_argument("RollingWindow: capacity must be positive");
}

void RollingWindow::push(double value) {
  buf_[head_] = value;
  head_ = (head_ + 1) % buf_.size();
  if (size_ < buf_.size()) ++size_;
}

void RollingWindow::clear() {
  head_ = 0;
  size_ = 0;
}

double RollingWindow::mean() const {
  if (size_ == 0) throw std::logic_error("RollingWindow: mean of empty window");
  double sum = 0.0;
  // Sum in ring order from the oldest slot so the result does not depend on
  // where the ring head happens to sit.
  std::size_t idx = full() ? head_ : 0;
  for (std::size_t i = 0; i < size_; ++i) {
    sum += buf_[idx];
    idx = (idx + 1) % buf_.size();
  }
  return sum / static_cast<double>(size_);
}

HandoverState initial_attach(const GeometryReport& report, const HandoverParams& params) {
  if (params.ttt_tics < 1) throw std::invalid_argument("initial_attach: ttt_tics must be >= 1");
  HandoverState st(params.avg_window);
  st.serving_gnb = report.best_gnb;  // attach even below sinr_min; empty scene stays detached
  st.last_tic = report.tic;
  return st;
}

void step(HandoverState& st, const GeometryReport& report, const HandoverParams& p,
          std::int64_t tic) {
  if (tic != st.last_tic + 1 || report.tic != tic) {
    throw std::logic_error("step: tic sequence mismatch");
  }
  st.last_tic = tic;

  // 1. Detached terminals only look for a way back in.
  if (!st.serving_gnb) {
    if (report.best_gnb && *report.best_geo_db >= p.sinr_min_db) {
      st.serving_gnb = report.best_gnb;
      st.geo_window.clear();
      st.ho_timer = 0;
      st.ho_trigger = false;
      st.armed_target.reset();
      st.exec_remaining = 0;
      st.events.push_back(
          {EventKind::Reattach, tic, std::nullopt, report.best_gnb, report.best_geo_db});
    }
    return;
  }

  // 2. Execution blackout: the radio keeps sampling, the logic stays off.
  if (st.exec_remaining > 0) {
    --st.exec_remaining;
    if (report.serving_geo_db) st.geo_window.push(*report.serving_geo_db);
    return;
  }

  // 3. Connection loss on an uncovered or too-weak serving cell.
  if (!report.serving_geo_db || *report.serving_geo_db < p.sinr_min_db) {
    st.events.push_back({EventKind::ConnectionLoss, tic, st.serving_gnb, std::nullopt,
                         std::nullopt});
    st.serving_gnb.reset();
    st.ho_timer = 0;
    st.ho_trigger = false;
    st.armed_target.reset();
    st.geo_window.clear();
    return;
  }

  // 4. Feed the rolling reference. In Avg mode A3 stays disabled until the
  // window is full; a running timer cannot coexist with a partial window
  // (every path that shrinks the window also resets the timer).
  st.geo_window.push(*report.serving_geo_db);
  double reference_db;
  if (p.a3_reference == A3Reference::Avg) {
    if (!st.geo_window.full()) return;
    reference_db = st.geo_window.mean();
  } else {
    reference_db = *report.serving_geo_db;
  }

  // 5. A3 entry condition and time-to-trigger bookkeeping.
  bool entry = false;
  if (report.best_gnb && *report.best_gnb != *st.serving_gnb &&
      *report.best_geo_db > p.sinr_min_db) {
    const double margin =
        *report.best_geo_db - reference_db + p.best_cio_db - p.current_cio_db;
    entry = margin > p.ho_hys_db;
  }
  if (entry && (st.ho_timer == 0 || st.armed_target == report.best_gnb)) {
    st.ho_trigger = true;
    st.armed_target = report.best_gnb;
    ++st.ho_timer;
  } else {
    st.ho_timer = 0;
    st.ho_trigger = false;
    st.armed_target.reset();
    return;
  }

  // 6. Timer maturity executes the handover.
  if (st.ho_timer == p.ttt_tics) {
    st.events.push_back({EventKind::Handover, tic, st.serving_gnb, st.armed_target,
                         report.best_geo_db});
    st.serving_gnb = st.armed_target;
    st.exec_remaining = p.ho_exec_time_tics;
    ++st.ho_times;
    st.ho_timer = 0;
    st.ho_trigger = false;
    st.armed_target.reset();
    st.geo_window.clear();
  }
}

RunResult run_tu(const ScenarioConfig& scenario, std::span<const GnbSite> sites,
                 const HandoverParams& params, const LinkConfig& link, RandomStream& rng,
                 const TicObserver& observer) {
  const double v = scenario.velocity_mps();
  const std::int64_t steps = scenario.tic_count();

  GeometryReport report;
  report.per_gnb.reserve(sites.size());

  Point2 pos = position_at(scenario.route, v, 0, scenario.tic_ms);
  measure_into(report, pos, sites, std::nullopt, link, &rng, 0);
  HandoverState st = initial_attach(report, params);
  if (observer) observer({0, pos, report, st, nullptr});

  for (std::int64_t tic = 1; tic <= steps; ++tic) {
    pos = position_at(scenario.route, v, tic, scenario.tic_ms);
    measure_into(report, pos, sites, st.serving_gnb, link, &rng, tic);
    const std::size_t events_before = st.events.size();
    step(st, report, params, tic);
    if (observer) {
      const HandoverEvent* ev =
          st.events.size() > events_before ? &st.events.back() : nullptr;
      observer({tic, pos, report, st, ev});
    }
  }

  RunResult rr;
  rr.ho_times = st.ho_times;
  for (const HandoverEvent& e : st.events) {
    if (e.kind == EventKind::Handover) {
      rr.ho_best_geos.push_back(*e.best_geo_db);
    } else if (e.kind == EventKind::ConnectionLoss) {
      ++rr.connection_losses;
    }
  }
  rr.events = std::move(st.events);
  return rr;
}

}  // namespace udnsim
