#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/mis.hpp"

namespace dynmis {

struct det_config {
  // threshold scale: a vertex is high-degree when
  //   deg(v) >= c_high * m^(2/3) * sqrt(max(1, log2 m)).
  // With the default 10 no desk-scale graph has high vertices; tests scale
  // it down to exercise the machinery.
  double c_high = 10.0;
  // expensive consistency checks (exact selector shadow scan, per-update
  // degree bounds); intended for tests
  bool check_invariants = false;
  bool check_selector = false;
};

// Exact integer ceil(m^(1/3)); no floating error at cube boundaries.
inline std::uint64_t epoch_len(std::uint64_t m) {
  if (m <= 1) return 1;
  std::uint64_t k = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(m)));
  while (k > 1 && (k - 1) * (k - 1) * (k - 1) >= m) --k;
  while (k * k * k < m) ++k;
  return k;
}

inline double high_threshold(std::uint64_t m, const det_config& cfg) {
  return cfg.c_high * std::pow(static_cast<double>(m), 2.0 / 3.0) *
         std::sqrt(clamped_log2(m));
}

// Per-epoch frozen data: edge count at the epoch start, the high-degree set
// (unchanged over the epoch), and the target number of MIS neighbors the
// construction owes every high vertex.
struct det_epoch {
  std::uint64_t m0 = 1;
  std::uint64_t length = 1;
  std::uint64_t rounds_left = 0;
  double threshold = 0.0;
  std::uint64_t mis_target = 2;
  std::vector<vertex_id> v_high;
  std::vector<char> is_high;
  bool fallback = false;
};

inline det_epoch make_det_epoch(const dynamic_graph& g,
                                const det_config& cfg) {
  det_epoch ep;
  ep.m0 = std::max<std::uint64_t>(1, g.edge_count());
  ep.length = epoch_len(ep.m0);
  ep.rounds_left = ep.length;
  ep.threshold = high_threshold(ep.m0, cfg);
  ep.mis_target = epoch_len(ep.m0) + 1;
  ep.is_high.assign(g.vertex_count(), 0);
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<double>(g.degree(v)) >= ep.threshold) {
      ep.is_high[v] = 1;
      ep.v_high.push_back(v);
    }
  }
  return ep;
}

// Raised by build_good_mis when high vertices remain but no pool vertex
// neighbors any of them; the caller falls back to a plain greedy MIS and an
// epoch of length 1.
class stuck_construction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Ratio selector over the candidate pool P: vertices are bucketed by
// floor(log2 |N(u) cap V_h|); inside a bucket an ordered set on (deg, id)
// yields the bucket minimum. A query scans buckets and returns the vertex
// with the least lower bound deg/2^(c+1), which is within a factor 2 of the
// true minimum of deg(u)/|N(u) cap V_h|.
class ratio_selector {
 public:
  ratio_selector(std::size_t n, std::size_t max_degree)
      : cls_of_(n, -1), buckets_(std::bit_width(std::max<std::size_t>(1, max_degree)) + 1) {}

  void place(vertex_id u, std::size_t deg, int high_neighbors) {
    int c = high_neighbors > 0
                ? static_cast<int>(std::bit_width(
                      static_cast<unsigned>(high_neighbors)) - 1)
                : -1;
    if (c == cls_of_[u]) return;
    if (cls_of_[u] >= 0) {
      buckets_[static_cast<std::size_t>(cls_of_[u])].erase({deg, u});
    }
    cls_of_[u] = c;
    if (c >= 0) buckets_[static_cast<std::size_t>(c)].insert({deg, u});
  }

  void erase(vertex_id u, std::size_t deg) {
    if (cls_of_[u] >= 0) {
      buckets_[static_cast<std::size_t>(cls_of_[u])].erase({deg, u});
      cls_of_[u] = -1;
    }
  }

  // Best 2-approximate ratio vertex, or no_vertex if every pool vertex has
  // zero high neighbors.
  vertex_id query() const {
    vertex_id best = no_vertex;
    double best_lb = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < buckets_.size(); ++c) {
      if (buckets_[c].empty()) continue;
      auto [deg, u] = *buckets_[c].begin();
      double lb = static_cast<double>(deg) / std::exp2(static_cast<double>(c + 1));
      if (lb < best_lb) {
        best_lb = lb;
        best = u;
      }
    }
    return best;
  }

 private:
  std::vector<int> cls_of_;
  std::vector<std::set<std::pair<std::size_t, vertex_id>>> buckets_;
};

}  // namespace detail

// Optional trace of the construction, used by tests.
struct good_mis_debug {
  std::vector<double> cost;          // per-vertex charge accumulator
  std::vector<std::uint64_t> n_count;
  std::uint64_t selections = 0;
  std::uint64_t selector_violations = 0;  // 2-approximation shadow check
};

// Good-MIS construction: grows an independent set S out of the low-degree
// pool until every high vertex has mis_target neighbors inside S, picking
// each step a pool vertex whose |N(u)| / |N(u) cap V_h| ratio is within 2x
// of the minimum, then completes S to a maximal set by an ascending-id
// sweep. Throws stuck_construction when high vertices remain but the pool
// has no neighbor of any of them.
inline mis_state build_good_mis(const dynamic_graph& g, const det_epoch& ep,
                                const det_config& cfg, work_meter& meter,
                                good_mis_debug* dbg = nullptr) {
  const std::size_t n = g.vertex_count();
  mis_state s(n);
  if (dbg) {
    dbg->cost.assign(n, 0.0);
    dbg->n_count.assign(n, 0);
  }
  if (!ep.v_high.empty()) {
    std::vector<char> in_pool(n, 0);
    std::vector<char> active_high(n, 0);
    std::vector<int> high_nbrs(n, 0);
    std::vector<std::uint64_t> n_count(n, 0);
    std::size_t max_degree = 0;
    for (vertex_id v = 0; v < n; ++v) {
      max_degree = std::max(max_degree, g.degree(v));
    }
    detail::ratio_selector selector(n, max_degree);
    for (vertex_id v : ep.v_high) active_high[v] = 1;
    for (vertex_id u = 0; u < n; ++u) {
      if (ep.is_high[u]) continue;
      in_pool[u] = 1;
      int k = 0;
      for (vertex_id w : g.neighbors(u)) {
        ++meter.adjacency_visits;
        if (active_high[w]) ++k;
      }
      high_nbrs[u] = k;
      selector.place(u, g.degree(u), k);
    }
    std::size_t remaining_high = ep.v_high.size();

    auto retire_high = [&](vertex_id v) {
      active_high[v] = 0;
      --remaining_high;
      for (vertex_id u : g.neighbors(v)) {
        ++meter.adjacency_visits;
        if (in_pool[u]) {
          --high_nbrs[u];
          selector.place(u, g.degree(u), high_nbrs[u]);
        }
      }
    };

    while (remaining_high > 0) {
      vertex_id u = selector.query();
      if (u == no_vertex) {
        throw stuck_construction("good-MIS construction stuck with " +
                                 std::to_string(remaining_high) +
                                 " high vertices unsatisfied");
      }
      if (cfg.check_selector && dbg) {
        // exact shadow scan of the pool
        double best = std::numeric_limits<double>::infinity();
        for (vertex_id w = 0; w < n; ++w) {
          if (in_pool[w] && high_nbrs[w] > 0) {
            best = std::min(best, static_cast<double>(g.degree(w)) /
                                      static_cast<double>(high_nbrs[w]));
          }
        }
        double picked = static_cast<double>(g.degree(u)) /
                        static_cast<double>(high_nbrs[u]);
        if (picked > 2.0 * best + 1e-9) ++dbg->selector_violations;
      }
      if (dbg) ++dbg->selections;
      const double ratio = static_cast<double>(g.degree(u)) /
                           static_cast<double>(high_nbrs[u]);
      add_to_mis(g, s, u, meter);
      for (vertex_id v : g.neighbors(u)) {
        ++meter.adjacency_visits;
        if (!active_high[v]) continue;
        if (dbg) dbg->cost[v] += ratio;
        ++n_count[v];
        if (dbg) dbg->n_count[v] = n_count[v];
        if (n_count[v] == ep.mis_target) retire_high(v);
      }
      // drop u and its whole neighborhood from the pool
      selector.erase(u, g.degree(u));
      in_pool[u] = 0;
      for (vertex_id w : g.neighbors(u)) {
        ++meter.adjacency_visits;
        if (in_pool[w]) {
          selector.erase(w, g.degree(w));
          in_pool[w] = 0;
        }
      }
    }
  }
  // maximal completion in ascending id order; with an empty high set this is
  // the whole construction
  for (vertex_id v = 0; v < n; ++v) {
    if (!s.in_mis[v] && s.mis_counter[v] == 0) add_to_mis(g, s, v, meter);
  }
  return s;
}

// Per-run statistics surfaced by the runner; acceptance asserts the
// violation counters stay at zero.
struct det_stats {
  std::uint64_t stuck_fallbacks = 0;
  std::uint64_t obs4_violations = 0;       // high vertex left without MIS neighbor
  std::uint64_t removal_bound_violations = 0;
  std::uint64_t multi_removal_violations = 0;
  std::uint64_t good_mis_violations = 0;   // target missed right after rebuild
  std::uint64_t selector_violations = 0;
  std::uint64_t epochs = 0;
};

// Epoch driver: every epoch_len(m) updates the MIS is rebuilt as a good-MIS
// and the high set refrozen; inside an epoch updates are served by counter
// maintenance with the smaller-degree eviction rule.
class det_runner {
 public:
  det_runner(std::size_t n, const det_config& cfg)
      : cfg_(cfg), g_(n), state_(n) {
    start_epoch();
  }

  void step(const update_event& e, work_meter& meter) {
    if (epoch_.rounds_left == 0) start_epoch();
    apply_update(e, meter);
    --epoch_.rounds_left;
    if (cfg_.check_invariants) check_observation4();
  }

  const dynamic_graph& graph() const { return g_; }
  const mis_state& state() const { return state_; }
  const det_epoch& epoch() const { return epoch_; }
  const det_stats& stats() const { return stats_; }

  std::vector<epoch_report> drain_epoch_reports() {
    return std::exchange(pending_, {});
  }

 private:
  void start_epoch() {
    epoch_report rep;
    epoch_ = make_det_epoch(g_, cfg_);
    good_mis_debug dbg;
    try {
      state_ = build_good_mis(g_, epoch_, cfg_, rep.rebuild,
                              cfg_.check_selector ? &dbg : nullptr);
      stats_.selector_violations += dbg.selector_violations;
    } catch (const stuck_construction&) {
      ++stats_.stuck_fallbacks;
      // degenerate epoch: plain greedy MIS, no frozen high set, length 1
      state_ = greedy_mis(g_, ascending_order(g_.vertex_count()), rep.rebuild);
      epoch_.v_high.clear();
      epoch_.is_high.assign(g_.vertex_count(), 0);
      epoch_.length = 1;
      epoch_.rounds_left = 1;
      epoch_.fallback = true;
    }
    if (cfg_.check_invariants) {
      for (vertex_id v : epoch_.v_high) {
        if (static_cast<std::uint64_t>(state_.mis_counter[v]) <
            epoch_.mis_target) {
          ++stats_.good_mis_violations;
        }
      }
    }
    ++stats_.epochs;
    rep.length = epoch_.length;
    rep.fallback = epoch_.fallback;
    pending_.push_back(rep);
  }

  void apply_update(const update_event& e, work_meter& meter) {
    if (e.kind == event_kind::insert) {
      g_.insert_edge(e.u, e.v);
      const bool both = state_.in_mis[e.u] && state_.in_mis[e.v];
      edge_inserted_counters(g_, state_, e.u, e.v, meter);
      if (both) {
        vertex_id out = smaller_degree_endpoint(g_, e.u, e.v);
        note_removal(out);
        remove_from_mis(g_, state_, out, meter);
        cascade_add(g_, state_, g_.sorted_neighbors(out), meter);
      }
    } else {
      edge_deleting_counters(g_, state_, e.u, e.v, meter);
      g_.delete_edge(e.u, e.v);
      for (vertex_id x : {e.u, e.v}) {
        if (!state_.in_mis[x] && state_.mis_counter[x] == 0) {
          cascade_add(g_, state_, {x}, meter);
        }
      }
    }
  }

  void note_removal(vertex_id out) {
    if (!cfg_.check_invariants) return;
    // a removed vertex is never high and its degree is bounded by the
    // threshold plus the epoch's degree drift
    const double bound =
        epoch_.threshold + 2.0 * static_cast<double>(epoch_.length);
    if (epoch_.is_high[out] ||
        static_cast<double>(g_.degree(out)) >= bound) {
      ++stats_.removal_bound_violations;
    }
  }

  void check_observation4() {
    for (vertex_id v : epoch_.v_high) {
      if (state_.mis_counter[v] < 1) ++stats_.obs4_violations;
    }
  }

  det_config cfg_;
  dynamic_graph g_;
  mis_state state_;
  det_epoch epoch_;
  det_stats stats_;
  std::vector<epoch_report> pending_;
};

}  // namespace dynmis
