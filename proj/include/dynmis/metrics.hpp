#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "dynmis/meter.hpp"
#include "dynmis/stream.hpp"

namespace dynmis {

// One row per served update.
struct update_row {
  std::uint64_t index = 0;
  event_kind kind = event_kind::insert;
  vertex_id u = 0;
  vertex_id v = 0;
  std::uint64_t visits = 0;
  std::uint64_t mutations = 0;
  std::uint64_t flips = 0;
  std::uint64_t added = 0;
  std::uint64_t removed = 0;
  std::int64_t phi = 0;
};

// One row per reconstruction, keyed to the update index it preceded.
struct epoch_row {
  std::uint64_t at_event = 0;
  std::uint64_t visits = 0;
  std::uint64_t mutations = 0;
  std::uint64_t flips = 0;
  std::uint64_t epoch_len = 0;
  bool fallback = false;
};

struct run_summary {
  std::uint64_t events = 0;
  std::uint64_t epochs = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t update_work = 0;    // sum of per-update visits+mutations
  std::uint64_t rebuild_work = 0;   // sum over epoch rows
  std::uint64_t total_work = 0;
  std::uint64_t update_flips = 0;
  std::uint64_t rebuild_flips = 0;
  std::uint64_t max_update_work = 0;
  double amortized_update_work = 0.0;  // in-epoch work per update
  double amortized_total_work = 0.0;   // including reconstruction work
};

struct run_report {
  std::string algorithm;
  std::size_t n = 0;
  std::vector<update_row> updates;
  std::vector<epoch_row> epochs;
  run_summary summary;
  bool verify_enabled = false;
  bool verify_ok = true;
  std::uint64_t failed_event = 0;
  std::string failure;
};

inline run_summary summarize(const std::vector<update_row>& updates,
                             const std::vector<epoch_row>& epochs) {
  run_summary s;
  s.events = updates.size();
  s.epochs = epochs.size();
  for (const update_row& r : updates) {
    const std::uint64_t w = r.visits + r.mutations;
    s.update_work += w;
    s.update_flips += r.flips;
    s.max_update_work = std::max(s.max_update_work, w);
  }
  for (const epoch_row& e : epochs) {
    s.rebuild_work += e.visits + e.mutations;
    s.rebuild_flips += e.flips;
    s.fallbacks += e.fallback ? 1 : 0;
  }
  s.total_work = s.update_work + s.rebuild_work;
  const double denom = static_cast<double>(std::max<std::uint64_t>(1, s.events));
  s.amortized_update_work = static_cast<double>(s.update_work) / denom;
  s.amortized_total_work = static_cast<double>(s.total_work) / denom;
  return s;
}

inline const char* kind_symbol(event_kind k) {
  return k == event_kind::insert ? "+" : "-";
}

// Fixed column set shared by update and epoch rows; unused fields stay
// empty. Integer-only content, so identical runs serialize byte-identically.
inline std::string metrics_csv(const run_report& rep) {
  std::string out =
      "row,index,kind,u,v,visits,mutations,flips,added,removed,phi,"
      "epoch_len,fallback\n";
  std::size_t ei = 0;
  auto emit_epoch = [&](const epoch_row& e) {
    out += "epoch," + std::to_string(e.at_event) + ",,,," +
           std::to_string(e.visits) + ',' + std::to_string(e.mutations) + ',' +
           std::to_string(e.flips) + ",,,," + std::to_string(e.epoch_len) +
           ',' + (e.fallback ? "1" : "0") + '\n';
  };
  for (const update_row& r : rep.updates) {
    while (ei < rep.epochs.size() && rep.epochs[ei].at_event <= r.index) {
      emit_epoch(rep.epochs[ei]);
      ++ei;
    }
    out += "update," + std::to_string(r.index) + ',' + kind_symbol(r.kind) +
           ',' + std::to_string(r.u) + ',' + std::to_string(r.v) + ',' +
           std::to_string(r.visits) + ',' + std::to_string(r.mutations) + ',' +
           std::to_string(r.flips) + ',' + std::to_string(r.added) + ',' +
           std::to_string(r.removed) + ',' + std::to_string(r.phi) + ",,\n";
  }
  while (ei < rep.epochs.size()) {
    emit_epoch(rep.epochs[ei]);
    ++ei;
  }
  return out;
}

inline std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace dynmis
