#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dynmis/arb.hpp"
#include "dynmis/det.hpp"
#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/metrics.hpp"
#include "dynmis/mis.hpp"
#include "dynmis/rand.hpp"
#include "dynmis/stream.hpp"

namespace dynmis {

// Baseline maintainer: no epochs, one initial construction (the MIS of the
// empty graph is the whole vertex set), every update served by counter
// maintenance.
class naive_runner {
 public:
  explicit naive_runner(std::size_t n) : g_(n), state_(n) {
    epoch_report rep;
    state_ = greedy_mis(g_, ascending_order(n), rep.rebuild);
    rep.length = 0;  // open-ended
    pending_.push_back(rep);
  }

  void step(const update_event& e, work_meter& meter) {
    naive_update(g_, state_, e, meter);
  }

  const dynamic_graph& graph() const { return g_; }
  const mis_state& state() const { return state_; }

  std::vector<epoch_report> drain_epoch_reports() {
    return std::exchange(pending_, {});
  }

 private:
  dynamic_graph g_;
  mis_state state_;
  std::vector<epoch_report> pending_;
};

struct replay_options {
  bool verify = false;
  bool collect_updates = true;  // per-update rows (summary is always built)
};

// Drives any maintainer over a stream, collecting per-update and per-epoch
// metrics. With verify on, the full oracle runs after every event and the
// replay stops at the first violation.
template <typename Runner>
run_report replay(Runner& runner, const update_stream& stream,
                  const replay_options& opt) {
  run_report rep;
  rep.n = stream.n;
  rep.verify_enabled = opt.verify;
  auto drain = [&](std::uint64_t at) {
    for (epoch_report& er : runner.drain_epoch_reports()) {
      epoch_row row;
      row.at_event = at;
      row.visits = er.rebuild.adjacency_visits;
      row.mutations = er.rebuild.counter_mutations;
      row.flips = er.rebuild.mis_flips();
      row.epoch_len = er.length;
      row.fallback = er.fallback;
      rep.epochs.push_back(row);
    }
  };
  drain(0);
  for (std::uint64_t i = 0; i < stream.events.size(); ++i) {
    const update_event& e = stream.events[i];
    work_meter meter;
    runner.step(e, meter);
    drain(i);
    if (opt.collect_updates) {
      update_row row;
      row.index = i;
      row.kind = e.kind;
      row.u = e.u;
      row.v = e.v;
      row.visits = meter.adjacency_visits;
      row.mutations = meter.counter_mutations;
      row.flips = meter.mis_flips();
      row.added = meter.mis_adds;
      row.removed = meter.mis_removes;
      row.phi = runner.state().phi();
      rep.updates.push_back(row);
    }
    if (opt.verify) {
      verify_result vr = verify_mis(runner.graph(), runner.state());
      if (!vr.ok()) {
        rep.verify_ok = false;
        rep.failed_event = i;
        rep.failure = vr.describe();
        break;
      }
    }
  }
  rep.summary = summarize(rep.updates, rep.epochs);
  return rep;
}

inline run_report run_naive(const update_stream& stream,
                            const replay_options& opt = {}) {
  naive_runner r(stream.n);
  run_report rep = replay(r, stream, opt);
  rep.algorithm = "naive";
  return rep;
}

inline run_report run_det(const update_stream& stream, const det_config& cfg,
                          const replay_options& opt = {}) {
  det_runner r(stream.n, cfg);
  run_report rep = replay(r, stream, opt);
  rep.algorithm = "det";
  return rep;
}

inline run_report run_rand(const update_stream& stream,
                           const rand_config& cfg,
                           const replay_options& opt = {}) {
  rand_runner r(stream.n, cfg);
  run_report rep = replay(r, stream, opt);
  rep.algorithm = "rand";
  return rep;
}

inline run_report run_arb(const update_stream& stream, const arb_config& cfg,
                          const replay_options& opt = {}) {
  arb_runner r(stream.n, cfg);
  run_report rep = replay(r, stream, opt);
  rep.algorithm = "arb";
  return rep;
}

}  // namespace dynmis
