#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/stream.hpp"

namespace dynmis {

// log2 clamped below at 1; every degree-threshold formula uses this
// convention so thresholds stay positive on tiny graphs.
inline double clamped_log2(std::uint64_t m) {
  return std::max(1.0, std::log2(static_cast<double>(m)));
}

// One reconstruction event: the work it cost, the epoch length it opened,
// and whether it was a degraded fallback path.
struct epoch_report {
  work_meter rebuild;
  std::uint64_t length = 0;
  bool fallback = false;
};

// MIS membership plus the per-vertex count of MIS neighbors. The counters
// are exact after every completed operation; all maintenance below goes
// through bump_counter so the potential -sum(counters) stays O(1) to read.
struct mis_state {
  std::vector<char> in_mis;
  std::vector<std::int32_t> mis_counter;
  std::int64_t counter_sum = 0;

  explicit mis_state(std::size_t n = 0) : in_mis(n, 0), mis_counter(n, 0) {}

  std::size_t size() const { return in_mis.size(); }
  std::int64_t phi() const { return -counter_sum; }

  std::size_t mis_size() const {
    std::size_t c = 0;
    for (char b : in_mis) c += b != 0;
    return c;
  }

  std::vector<vertex_id> members() const {
    std::vector<vertex_id> out;
    for (vertex_id v = 0; v < in_mis.size(); ++v) {
      if (in_mis[v]) out.push_back(v);
    }
    return out;
  }
};

inline void bump_counter(mis_state& s, vertex_id v, int delta,
                         work_meter& meter) {
  s.mis_counter[v] += delta;
  s.counter_sum += delta;
  ++meter.counter_mutations;
}

// Observer hook for algorithms that keep derived per-vertex information in
// sync with MIS membership (e.g. replace-cost bookkeeping).
struct mis_observer {
  virtual void on_add(vertex_id v) = 0;
  virtual void on_remove(vertex_id v) = 0;

 protected:
  ~mis_observer() = default;
};

inline void add_to_mis(const dynamic_graph& g, mis_state& s, vertex_id v,
                       work_meter& meter, mis_observer* obs = nullptr) {
  if (s.in_mis[v] || s.mis_counter[v] != 0) {
    throw internal_error("add_to_mis: vertex " + std::to_string(v) +
                         " not addable");
  }
  s.in_mis[v] = 1;
  ++meter.mis_adds;
  for (vertex_id w : g.neighbors(v)) {
    ++meter.adjacency_visits;
    bump_counter(s, w, +1, meter);
  }
  if (obs) obs->on_add(v);
}

inline void remove_from_mis(const dynamic_graph& g, mis_state& s, vertex_id v,
                            work_meter& meter, mis_observer* obs = nullptr) {
  if (!s.in_mis[v]) {
    throw internal_error("remove_from_mis: vertex " + std::to_string(v) +
                         " not in MIS");
  }
  s.in_mis[v] = 0;
  ++meter.mis_removes;
  for (vertex_id w : g.neighbors(v)) {
    ++meter.adjacency_visits;
    bump_counter(s, w, -1, meter);
  }
  if (obs) obs->on_remove(v);
}

// Restores maximality around a frontier: repeatedly takes the smallest
// pending vertex, adds it if its counter is zero and it is outside the MIS,
// and appends its neighbors. Duplicate frontier entries are harmless.
// Returns the vertices added, in add order.
inline std::vector<vertex_id> cascade_add(const dynamic_graph& g, mis_state& s,
                                          const std::vector<vertex_id>& frontier,
                                          work_meter& meter,
                                          mis_observer* obs = nullptr) {
  std::set<vertex_id> pending(frontier.begin(), frontier.end());
  std::vector<vertex_id> added;
  while (!pending.empty()) {
    vertex_id v = *pending.begin();
    pending.erase(pending.begin());
    if (s.in_mis[v] || s.mis_counter[v] != 0) continue;
    add_to_mis(g, s, v, meter, obs);
    added.push_back(v);
    for (vertex_id w : g.neighbors(v)) {
      ++meter.adjacency_visits;
      pending.insert(w);
    }
  }
  return added;
}

// Sequential greedy MIS: scan the order, add every vertex that has no
// neighbor already chosen.
inline mis_state greedy_mis(const dynamic_graph& g,
                            const std::vector<vertex_id>& order,
                            work_meter& meter) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) {
    throw internal_error("greedy_mis: order is not a permutation");
  }
  std::vector<char> seen(n, 0);
  for (vertex_id v : order) {
    if (v >= n || seen[v]) {
      throw internal_error("greedy_mis: order is not a permutation");
    }
    seen[v] = 1;
  }
  mis_state s(n);
  for (vertex_id v : order) {
    if (s.mis_counter[v] == 0) add_to_mis(g, s, v, meter);
  }
  return s;
}

inline std::vector<vertex_id> ascending_order(std::size_t n) {
  std::vector<vertex_id> order(n);
  for (vertex_id v = 0; v < n; ++v) order[v] = v;
  return order;
}

// Rebuilds membership flags and counters from scratch for a given vertex
// set. Performs no validity check.
inline mis_state recompute_state(const dynamic_graph& g,
                                 const std::vector<vertex_id>& mis) {
  mis_state s(g.vertex_count());
  for (vertex_id v : mis) s.in_mis[v] = 1;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (!s.in_mis[v]) continue;
    for (vertex_id w : g.neighbors(v)) {
      ++s.mis_counter[w];
      ++s.counter_sum;
    }
  }
  return s;
}

struct verify_result {
  enum class status {
    valid,
    counter_mismatch,
    independence_violation,
    maximality_violation,
  };

  status st = status::valid;
  vertex_id u = no_vertex;
  vertex_id v = no_vertex;

  bool ok() const { return st == status::valid; }

  std::string describe() const {
    switch (st) {
      case status::valid:
        return "valid";
      case status::counter_mismatch:
        return "counter mismatch at vertex " + std::to_string(u);
      case status::independence_violation:
        return "independence violated on edge (" + std::to_string(u) + "," +
               std::to_string(v) + ")";
      case status::maximality_violation:
        return "maximality violated at vertex " + std::to_string(u);
    }
    return "?";
  }
};

// Full validity oracle: counters exact, no edge inside the MIS, every
// outside vertex dominated. Witnesses are reported in ascending vertex /
// edge order, checking counters first, then independence, then maximality.
inline verify_result verify_mis(const dynamic_graph& g, const mis_state& s) {
  using status = verify_result::status;
  const std::size_t n = g.vertex_count();
  if (s.size() != n) return {status::counter_mismatch, 0, no_vertex};
  std::vector<std::int32_t> true_count(n, 0);
  for (vertex_id v = 0; v < n; ++v) {
    if (!s.in_mis[v]) continue;
    for (vertex_id w : g.neighbors(v)) ++true_count[w];
  }
  for (vertex_id v = 0; v < n; ++v) {
    if (true_count[v] != s.mis_counter[v]) {
      return {status::counter_mismatch, v, no_vertex};
    }
  }
  for (vertex_id u = 0; u < n; ++u) {
    if (!s.in_mis[u]) continue;
    for (vertex_id w : g.sorted_neighbors(u)) {
      if (w > u && s.in_mis[w]) return {status::independence_violation, u, w};
    }
  }
  for (vertex_id v = 0; v < n; ++v) {
    if (!s.in_mis[v] && true_count[v] == 0) {
      return {status::maximality_violation, v, no_vertex};
    }
  }
  return {};
}

// Removal rule shared by the naive and deterministic algorithms: smaller
// current degree, ties to the smaller id.
inline vertex_id smaller_degree_endpoint(const dynamic_graph& g, vertex_id u,
                                         vertex_id v) {
  const std::size_t du = g.degree(u);
  const std::size_t dv = g.degree(v);
  if (du != dv) return du < dv ? u : v;
  return u < v ? u : v;
}

// Adjusts counters for the endpoints of an edge that was just inserted
// (graph already mutated).
inline void edge_inserted_counters(const dynamic_graph&, mis_state& s,
                                   vertex_id u, vertex_id v,
                                   work_meter& meter) {
  if (s.in_mis[u]) bump_counter(s, v, +1, meter);
  if (s.in_mis[v]) bump_counter(s, u, +1, meter);
}

// Counter adjustment for an edge about to be deleted (call before the graph
// mutation so membership of both endpoints is still meaningful).
inline void edge_deleting_counters(const dynamic_graph&, mis_state& s,
                                   vertex_id u, vertex_id v,
                                   work_meter& meter) {
  if (s.in_mis[u]) bump_counter(s, v, -1, meter);
  if (s.in_mis[v]) bump_counter(s, u, -1, meter);
}

// Baseline maintenance: applies the event to the graph and restores
// validity. A deletion that strands a vertex with counter zero cascades it
// back in; an insertion joining two MIS vertices evicts the smaller-degree
// endpoint and cascades its neighborhood.
inline void naive_update(dynamic_graph& g, mis_state& s,
                         const update_event& e, work_meter& meter) {
  if (e.kind == event_kind::insert) {
    g.insert_edge(e.u, e.v);
    const bool both = s.in_mis[e.u] && s.in_mis[e.v];
    edge_inserted_counters(g, s, e.u, e.v, meter);
    if (both) {
      vertex_id out = smaller_degree_endpoint(g, e.u, e.v);
      remove_from_mis(g, s, out, meter);
      cascade_add(g, s, g.sorted_neighbors(out), meter);
    }
  } else {
    edge_deleting_counters(g, s, e.u, e.v, meter);
    g.delete_edge(e.u, e.v);
    for (vertex_id x : {e.u, e.v}) {
      if (!s.in_mis[x] && s.mis_counter[x] == 0) {
        cascade_add(g, s, {x}, meter);
      }
    }
  }
}

}  // namespace dynmis
