#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/mis.hpp"

namespace dynmis {

struct arb_config {
  // assumed arboricity bound; supplied by the caller, never computed
  int lambda = 1;
  double c_T = 1.0;        // scale on T = sqrt(m log m lambda)
  double c_high = 20.0;    // high threshold = c_high * T
  double c_replace = 22.0; // replacement bound = c_replace * lambda * T
  double c_feasible = 5.0; // feasibility floor, recorded against scans
  bool check_invariants = false;
};

inline std::uint64_t compute_T(std::uint64_t m, int lambda,
                               const arb_config& cfg) {
  const double raw = cfg.c_T * std::sqrt(static_cast<double>(m) *
                                         clamped_log2(m) *
                                         static_cast<double>(lambda));
  return static_cast<std::uint64_t>(std::ceil(raw));
}

// Trace of the leveling loop, kept for tests and stall diagnosis.
struct stage1_trace {
  struct iteration {
    std::vector<vertex_id> k_set;
    std::vector<std::pair<vertex_id, double>> unitcost;  // a_star, |N cap K|>0
    std::vector<std::pair<vertex_id, double>> medians;   // per K vertex
    double level_bound = 0.0;                            // m / (|K| T)
    std::vector<vertex_id> leveled;
  };
  std::vector<iteration> iterations;
  std::uint64_t max_iterations = 0;
  bool stalled = false;
};

struct stage1_result {
  bool stalled = false;
  std::vector<int> level;                          // -1 outside v_high
  std::vector<std::vector<vertex_id>> candidates;  // per vertex, frozen order
  stage1_trace trace;
};

// Leveling: per iteration every still-unleveled high vertex v collects the
// unit costs deg(u)/|N(u) cap K_i| of its a_star neighbors; v is assigned
// level i when the lower median is at most m/(|K_i| T), and its candidate
// list freezes to the neighbors at or below that median, ordered by
// (unitcost, id). Stalls (an iteration that levels nobody, or iteration
// budget ceil(log2 m) exhausted) are reported, never silently truncated.
inline stage1_result stage1_levels(const dynamic_graph& g,
                                   const std::vector<vertex_id>& v_high,
                                   const std::vector<char>& is_high,
                                   const std::vector<vertex_id>& a_star,
                                   const std::vector<char>& is_astar,
                                   std::uint64_t m0, std::uint64_t T,
                                   work_meter& meter,
                                   bool with_trace = false) {
  const std::size_t n = g.vertex_count();
  stage1_result res;
  res.level.assign(n, -1);
  res.candidates.assign(n, {});
  const std::uint64_t max_iter =
      static_cast<std::uint64_t>(std::ceil(clamped_log2(m0)));
  res.trace.max_iterations = max_iter;
  std::vector<vertex_id> k_set = v_high;
  std::vector<char> in_k = is_high;
  std::vector<double> unitcost(n, 0.0);
  for (std::uint64_t it = 1; !k_set.empty() && it <= max_iter; ++it) {
    stage1_trace::iteration tr;
    if (with_trace) tr.k_set = k_set;
    // unit costs over a_star against the current K
    std::vector<char> has_cost(n, 0);
    for (vertex_id u : a_star) {
      int k_nbrs = 0;
      for (vertex_id w : g.neighbors(u)) {
        ++meter.adjacency_visits;
        if (in_k[w]) ++k_nbrs;
      }
      if (k_nbrs > 0) {
        unitcost[u] = static_cast<double>(g.degree(u)) / k_nbrs;
        has_cost[u] = 1;
        if (with_trace) tr.unitcost.emplace_back(u, unitcost[u]);
      }
    }
    const double bound = static_cast<double>(m0) /
                         (static_cast<double>(k_set.size()) *
                          static_cast<double>(T));
    if (with_trace) tr.level_bound = bound;
    std::vector<vertex_id> leveled;
    for (vertex_id v : k_set) {
      std::vector<double> costs;
      for (vertex_id u : g.neighbors(v)) {
        ++meter.adjacency_visits;
        if (is_astar[u]) costs.push_back(unitcost[u]);
      }
      double median = std::numeric_limits<double>::infinity();
      if (!costs.empty()) {
        std::sort(costs.begin(), costs.end());
        median = costs[(costs.size() - 1) / 2];  // lower median
      }
      if (with_trace) tr.medians.emplace_back(v, median);
      if (median <= bound) {
        res.level[v] = static_cast<int>(it);
        std::vector<std::pair<double, vertex_id>> cands;
        for (vertex_id u : g.neighbors(v)) {
          ++meter.adjacency_visits;
          if (is_astar[u] && has_cost[u] && unitcost[u] <= median) {
            cands.emplace_back(unitcost[u], u);
          }
        }
        std::sort(cands.begin(), cands.end());
        res.candidates[v].reserve(cands.size());
        for (auto& [c, u] : cands) res.candidates[v].push_back(u);
        leveled.push_back(v);
      }
    }
    if (with_trace) tr.leveled = leveled;
    if (with_trace || leveled.empty()) res.trace.iterations.push_back(std::move(tr));
    if (leveled.empty()) {
      res.stalled = true;
      res.trace.stalled = true;
      return res;
    }
    std::vector<vertex_id> next;
    for (vertex_id v : k_set) {
      if (res.level[v] < 0) {
        next.push_back(v);
      } else {
        in_k[v] = 0;
      }
    }
    k_set = std::move(next);
  }
  if (!k_set.empty()) {
    res.stalled = true;
    res.trace.stalled = true;
  }
  return res;
}

struct arb_stats {
  std::uint64_t epochs = 0;
  std::uint64_t leveling_stalled = 0;
  std::uint64_t injection_stuck = 0;
  std::uint64_t replacement_not_found = 0;
  std::uint64_t fallback_reconstructs = 0;  // mid-epoch full rebuilds
  std::uint64_t case2a = 0;
  std::uint64_t case2b = 0;
  std::uint64_t reassignments = 0;  // deletion of an (x, f(x)) edge
  std::uint64_t inv1_violations = 0;
  std::uint64_t inv2_violations = 0;
  std::uint64_t claimcc_violations = 0;
  std::uint64_t min_feasible_seen = std::numeric_limits<std::uint64_t>::max();
  std::int64_t last_injection_degree_sum = 0;
};

// Per-epoch frozen sets plus the live bookkeeping of the running part:
// counters (in mis_state), the injection f with its image, per-a_star image
// adjacency counts and replace costs.
struct arb_epoch_state {
  std::uint64_t m0 = 1;
  std::uint64_t T = 1;
  std::uint64_t rounds_left = 0;
  double threshold = 0.0;
  std::vector<vertex_id> v_high;
  std::vector<char> is_high;
  std::vector<vertex_id> a_star;
  std::vector<char> is_astar;
  std::vector<int> level;
  std::vector<std::vector<vertex_id>> candidates;
  std::vector<vertex_id> f_of;    // v_high -> a_star, no_vertex when unset
  std::vector<vertex_id> f_pre;   // image vertex -> its v_high preimage
  std::vector<char> in_image;
  std::vector<std::int64_t> fcount;        // a_star: neighbors in the image
  std::vector<std::int64_t> replace_cost;  // a_star: sum of MIS-neighbor degrees
  bool fallback = false;
};

// Bounded-arboricity maintainer. Reconstruction freezes V_high*, A*, levels,
// candidate lists and the injection f; the running part serves T updates
// keeping counters, fcount and replace-cost exact and the invariant
// "every high vertex owns a distinct MIS neighbor f(v) from its candidate
// list" restored at the end of every update.
class arb_runner {
 public:
  arb_runner(std::size_t n, const arb_config& cfg)
      : cfg_(cfg), g_(n), state_(n) {
    epoch_report rep;
    reconstruct(rep.rebuild, rep);
    pending_.push_back(rep);
  }

  void step(const update_event& e, work_meter& meter) {
    if (ep_.rounds_left == 0) {
      epoch_report rep;
      reconstruct(rep.rebuild, rep);
      pending_.push_back(rep);
    }
    step_removed_degrees_ = 0;
    if (e.kind == event_kind::insert) {
      apply_insert(e, meter);
    } else {
      apply_delete(e, meter);
    }
    if (ep_.rounds_left > 0) --ep_.rounds_left;
    if (cfg_.check_invariants) run_checks();
  }

  const dynamic_graph& graph() const { return g_; }
  const mis_state& state() const { return state_; }
  const arb_epoch_state& epoch() const { return ep_; }
  const arb_stats& stats() const { return stats_; }

  std::vector<epoch_report> drain_epoch_reports() {
    return std::exchange(pending_, {});
  }

  // Number of candidates of x that are currently neighbors, outside the
  // image, and free of image neighbors (the virtual feasible list).
  std::uint64_t count_feasible(vertex_id x) const {
    std::uint64_t c = 0;
    for (vertex_id y : ep_.candidates[x]) {
      if (g_.has_edge(x, y) && !ep_.in_image[y] && ep_.fcount[y] == 0) ++c;
    }
    return c;
  }

  // Full recomputation of fcount and replace_cost compared against the
  // incrementally maintained values.
  bool incremental_consistent() const {
    for (vertex_id v : ep_.a_star) {
      std::int64_t fc = 0;
      std::int64_t rc = 0;
      for (vertex_id w : g_.neighbors(v)) {
        if (ep_.in_image[w]) ++fc;
        if (state_.in_mis[w]) rc += static_cast<std::int64_t>(g_.degree(w));
      }
      if (fc != ep_.fcount[v] || rc != ep_.replace_cost[v]) return false;
    }
    return true;
  }

  std::int64_t current_f_degree_sum() const {
    std::int64_t sum = 0;
    for (vertex_id v : ep_.v_high) {
      if (ep_.f_of[v] != no_vertex) {
        sum += static_cast<std::int64_t>(g_.degree(ep_.f_of[v]));
      }
    }
    return sum;
  }

 private:
  struct rc_observer final : mis_observer {
    arb_runner* r = nullptr;
    work_meter* meter = nullptr;

    void on_add(vertex_id v) override {
      const std::int64_t d = static_cast<std::int64_t>(r->g_.degree(v));
      for (vertex_id w : r->g_.neighbors(v)) {
        ++meter->adjacency_visits;
        if (r->ep_.is_astar[w]) {
          r->ep_.replace_cost[w] += d;
          ++meter->counter_mutations;
        }
      }
    }

    void on_remove(vertex_id v) override {
      const std::int64_t d = static_cast<std::int64_t>(r->g_.degree(v));
      r->step_removed_degrees_ += d;
      for (vertex_id w : r->g_.neighbors(v)) {
        ++meter->adjacency_visits;
        if (r->ep_.is_astar[w]) {
          r->ep_.replace_cost[w] -= d;
          ++meter->counter_mutations;
        }
      }
    }
  };

  rc_observer observer(work_meter& meter) {
    rc_observer o;
    o.r = this;
    o.meter = &meter;
    return o;
  }

  void reconstruct(work_meter& meter, epoch_report& rep) {
    const std::size_t n = g_.vertex_count();
    ep_ = arb_epoch_state{};
    ep_.m0 = std::max<std::uint64_t>(1, g_.edge_count());
    ep_.T = std::max<std::uint64_t>(1, compute_T(ep_.m0, cfg_.lambda, cfg_));
    ep_.threshold = cfg_.c_high * static_cast<double>(ep_.T);
    ep_.is_high.assign(n, 0);
    ep_.is_astar.assign(n, 0);
    ep_.level.assign(n, -1);
    ep_.candidates.assign(n, {});
    ep_.f_of.assign(n, no_vertex);
    ep_.f_pre.assign(n, no_vertex);
    ep_.in_image.assign(n, 0);
    ep_.fcount.assign(n, 0);
    ep_.replace_cost.assign(n, 0);
    for (vertex_id v = 0; v < n; ++v) {
      if (static_cast<double>(g_.degree(v)) >= ep_.threshold) {
        ep_.is_high[v] = 1;
        ep_.v_high.push_back(v);
      }
    }
    for (vertex_id v : ep_.v_high) {
      for (vertex_id u : g_.neighbors(v)) {
        ++meter.adjacency_visits;
        if (!ep_.is_high[u] && !ep_.is_astar[u]) {
          ep_.is_astar[u] = 1;
          ep_.a_star.push_back(u);
        }
      }
    }
    std::sort(ep_.a_star.begin(), ep_.a_star.end());
    ++stats_.epochs;
    rep.length = ep_.T;

    if (!ep_.v_high.empty()) {
      auto s1 = stage1_levels(g_, ep_.v_high, ep_.is_high, ep_.a_star,
                              ep_.is_astar, ep_.m0, ep_.T, meter,
                              cfg_.check_invariants);
      if (s1.stalled) {
        ++stats_.leveling_stalled;
        plain_fallback(meter, rep);
        return;
      }
      ep_.level = std::move(s1.level);
      ep_.candidates = std::move(s1.candidates);
      if (!choose_injection(meter)) {
        ++stats_.injection_stuck;
        plain_fallback(meter, rep);
        return;
      }
    }
    // the image seeds the MIS; a full ascending sweep makes it maximal
    state_ = mis_state(n);
    for (vertex_id v : ep_.a_star) {
      if (ep_.in_image[v]) add_to_mis(g_, state_, v, meter);
    }
    for (vertex_id v = 0; v < n; ++v) {
      if (!state_.in_mis[v] && state_.mis_counter[v] == 0) {
        add_to_mis(g_, state_, v, meter);
      }
    }
    init_replace_cost(meter);
    ep_.rounds_left = ep_.T;
  }

  // Degenerate epoch used on leveling / injection failure: a plain greedy
  // MIS with no frozen high structure and a single round before the next
  // reconstruction attempt.
  void plain_fallback(work_meter& meter, epoch_report& rep) {
    const std::size_t n = g_.vertex_count();
    state_ = greedy_mis(g_, ascending_order(n), meter);
    ep_.v_high.clear();
    ep_.a_star.clear();
    ep_.is_high.assign(n, 0);
    ep_.is_astar.assign(n, 0);
    ep_.level.assign(n, -1);
    ep_.candidates.assign(n, {});
    ep_.f_of.assign(n, no_vertex);
    ep_.f_pre.assign(n, no_vertex);
    ep_.in_image.assign(n, 0);
    ep_.fcount.assign(n, 0);
    ep_.replace_cost.assign(n, 0);
    ep_.rounds_left = 1;
    ep_.fallback = true;
    rep.length = 1;
    rep.fallback = true;
  }

  // f(v) in ascending (level, id) order: first candidate outside the image
  // with no image neighbor.
  bool choose_injection(work_meter& meter) {
    std::vector<vertex_id> order = ep_.v_high;
    std::sort(order.begin(), order.end(), [&](vertex_id a, vertex_id b) {
      return std::pair(ep_.level[a], a) < std::pair(ep_.level[b], b);
    });
    std::int64_t degree_sum = 0;
    for (vertex_id v : order) {
      vertex_id picked = no_vertex;
      for (vertex_id u : ep_.candidates[v]) {
        ++meter.adjacency_visits;
        if (!ep_.in_image[u] && ep_.fcount[u] == 0) {
          picked = u;
          break;
        }
      }
      if (picked == no_vertex) return false;
      enter_image(picked, v, meter);
      degree_sum += static_cast<std::int64_t>(g_.degree(picked));
    }
    stats_.last_injection_degree_sum = degree_sum;
    return true;
  }

  void enter_image(vertex_id y, vertex_id x, work_meter& meter) {
    ep_.in_image[y] = 1;
    ep_.f_of[x] = y;
    ep_.f_pre[y] = x;
    for (vertex_id w : g_.neighbors(y)) {
      ++meter.adjacency_visits;
      if (ep_.is_astar[w]) {
        ++ep_.fcount[w];
        ++meter.counter_mutations;
      }
    }
  }

  void leave_image(vertex_id y, work_meter& meter) {
    ep_.in_image[y] = 0;
    vertex_id x = ep_.f_pre[y];
    ep_.f_pre[y] = no_vertex;
    if (x != no_vertex) ep_.f_of[x] = no_vertex;
    for (vertex_id w : g_.neighbors(y)) {
      ++meter.adjacency_visits;
      if (ep_.is_astar[w]) {
        --ep_.fcount[w];
        ++meter.counter_mutations;
      }
    }
  }

  void init_replace_cost(work_meter& meter) {
    for (vertex_id v : ep_.a_star) {
      std::int64_t rc = 0;
      for (vertex_id w : g_.neighbors(v)) {
        ++meter.adjacency_visits;
        if (state_.in_mis[w]) rc += static_cast<std::int64_t>(g_.degree(w));
      }
      ep_.replace_cost[v] = rc;
    }
  }

  // Scan x's frozen candidate list for a feasible replacement: still a
  // neighbor, outside the image, no image neighbor, and replace cost within
  // the budget. A feasible hit is forced into the MIS (evicting its MIS
  // neighbors, none of which can be image members) and becomes f(x).
  bool replace_f(vertex_id x, work_meter& meter,
                 std::vector<vertex_id>& removed) {
    const double bound = cfg_.c_replace * static_cast<double>(cfg_.lambda) *
                         static_cast<double>(ep_.T);
    if (cfg_.check_invariants) {
      stats_.min_feasible_seen =
          std::min(stats_.min_feasible_seen, count_feasible(x));
    }
    auto obs = observer(meter);
    for (vertex_id y : ep_.candidates[x]) {
      ++meter.adjacency_visits;
      if (!g_.has_edge(x, y)) continue;
      if (ep_.in_image[y] || ep_.fcount[y] != 0) continue;
      if (static_cast<double>(ep_.replace_cost[y]) > bound) continue;
      if (!state_.in_mis[y]) {
        for (vertex_id z : g_.sorted_neighbors(y)) {
          ++meter.adjacency_visits;
          if (state_.in_mis[z]) {
            if (ep_.in_image[z]) {
              throw internal_error("image vertex adjacent to zero-fcount pick");
            }
            remove_from_mis(g_, state_, z, meter, &obs);
            removed.push_back(z);
          }
        }
        add_to_mis(g_, state_, y, meter, &obs);
      }
      enter_image(y, x, meter);
      return true;
    }
    return false;
  }

  void mid_epoch_reconstruct(work_meter&) {
    ++stats_.fallback_reconstructs;
    epoch_report rep;
    reconstruct(rep.rebuild, rep);
    rep.fallback = true;
    pending_.push_back(rep);
  }

  void apply_insert(const update_event& e, work_meter& meter) {
    const vertex_id u = e.u;
    const vertex_id v = e.v;
    // degree drift of MIS endpoints feeds their a_star neighbors' costs
    for (vertex_id p : {u, v}) {
      if (!state_.in_mis[p]) continue;
      for (vertex_id w : g_.neighbors(p)) {
        ++meter.adjacency_visits;
        if (ep_.is_astar[w]) {
          ++ep_.replace_cost[w];
          ++meter.counter_mutations;
        }
      }
    }
    g_.insert_edge(u, v);
    const bool both = state_.in_mis[u] && state_.in_mis[v];
    edge_inserted_counters(g_, state_, u, v, meter);
    if (state_.in_mis[u] && ep_.is_astar[v]) {
      ep_.replace_cost[v] += static_cast<std::int64_t>(g_.degree(u));
      ++meter.counter_mutations;
    }
    if (state_.in_mis[v] && ep_.is_astar[u]) {
      ep_.replace_cost[u] += static_cast<std::int64_t>(g_.degree(v));
      ++meter.counter_mutations;
    }
    if (ep_.in_image[u] && ep_.is_astar[v]) {
      ++ep_.fcount[v];
      ++meter.counter_mutations;
    }
    if (ep_.in_image[v] && ep_.is_astar[u]) {
      ++ep_.fcount[u];
      ++meter.counter_mutations;
    }
    if (!both) return;

    auto obs = observer(meter);
    if (!ep_.in_image[u] || !ep_.in_image[v]) {
      // Case 2-a: dropping a non-image endpoint cannot break the injection
      ++stats_.case2a;
      vertex_id out;
      if (ep_.in_image[u]) {
        out = v;
      } else if (ep_.in_image[v]) {
        out = u;
      } else {
        out = smaller_degree_endpoint(g_, u, v);
      }
      remove_from_mis(g_, state_, out, meter, &obs);
      cascade_add(g_, state_, g_.sorted_neighbors(out), meter, &obs);
      return;
    }
    // Case 2-b: both endpoints carry the injection; evict one and re-point
    // its preimage at a replacement candidate
    ++stats_.case2b;
    vertex_id out = smaller_degree_endpoint(g_, u, v);
    vertex_id x = ep_.f_pre[out];
    remove_from_mis(g_, state_, out, meter, &obs);
    leave_image(out, meter);
    std::vector<vertex_id> removed;
    if (!replace_f(x, meter, removed)) {
      ++stats_.replacement_not_found;
      mid_epoch_reconstruct(meter);
      return;
    }
    std::vector<vertex_id> frontier = g_.sorted_neighbors(out);
    for (vertex_id z : removed) {
      for (vertex_id w : g_.neighbors(z)) {
        ++meter.adjacency_visits;
        frontier.push_back(w);
      }
    }
    cascade_add(g_, state_, frontier, meter, &obs);
  }

  void apply_delete(const update_event& e, work_meter& meter) {
    const vertex_id u = e.u;
    const vertex_id v = e.v;
    edge_deleting_counters(g_, state_, u, v, meter);
    if (state_.in_mis[u] && ep_.is_astar[v]) {
      ep_.replace_cost[v] -= static_cast<std::int64_t>(g_.degree(u));
      ++meter.counter_mutations;
    }
    if (state_.in_mis[v] && ep_.is_astar[u]) {
      ep_.replace_cost[u] -= static_cast<std::int64_t>(g_.degree(v));
      ++meter.counter_mutations;
    }
    if (ep_.in_image[u] && ep_.is_astar[v]) {
      --ep_.fcount[v];
      ++meter.counter_mutations;
    }
    if (ep_.in_image[v] && ep_.is_astar[u]) {
      --ep_.fcount[u];
      ++meter.counter_mutations;
    }
    g_.delete_edge(u, v);
    for (vertex_id p : {u, v}) {
      if (!state_.in_mis[p]) continue;
      for (vertex_id w : g_.neighbors(p)) {
        ++meter.adjacency_visits;
        if (ep_.is_astar[w]) {
          --ep_.replace_cost[w];
          ++meter.counter_mutations;
        }
      }
    }
    // losing the edge (x, f(x)) forces a reassignment: f(x) stays in the
    // MIS but no longer serves x
    vertex_id x = no_vertex;
    if (ep_.is_high[u] && ep_.f_of[u] == v) {
      x = u;
    } else if (ep_.is_high[v] && ep_.f_of[v] == u) {
      x = v;
    }
    auto obs = observer(meter);
    std::vector<vertex_id> removed;
    if (x != no_vertex) {
      ++stats_.reassignments;
      leave_image(ep_.f_of[x], meter);
      if (!replace_f(x, meter, removed)) {
        ++stats_.replacement_not_found;
        mid_epoch_reconstruct(meter);
        return;
      }
    }
    std::vector<vertex_id> frontier;
    for (vertex_id p : {u, v}) {
      if (!state_.in_mis[p] && state_.mis_counter[p] == 0) {
        frontier.push_back(p);
      }
    }
    for (vertex_id z : removed) {
      for (vertex_id w : g_.neighbors(z)) {
        ++meter.adjacency_visits;
        frontier.push_back(w);
      }
    }
    if (!frontier.empty()) cascade_add(g_, state_, frontier, meter, &obs);
  }

  void run_checks() {
    // Invariant 1: every high vertex keeps an MIS neighbor
    for (vertex_id v : ep_.v_high) {
      if (state_.mis_counter[v] < 1) ++stats_.inv1_violations;
    }
    // Invariant 2: f is injective, lands in the MIS, and stays inside the
    // frozen candidate list of its owner
    std::unordered_set<vertex_id> image_seen;
    for (vertex_id v : ep_.v_high) {
      const vertex_id y = ep_.f_of[v];
      bool ok = y != no_vertex && state_.in_mis[y] && g_.has_edge(v, y) &&
                !image_seen.contains(y) && ep_.f_pre[y] == v;
      if (ok) {
        ok = std::find(ep_.candidates[v].begin(), ep_.candidates[v].end(),
                       y) != ep_.candidates[v].end();
      }
      if (!ok) {
        ++stats_.inv2_violations;
      } else {
        image_seen.insert(y);
      }
    }
    // Claim-cc shadow: total degree leaving the MIS in one update is within
    // the replacement budget plus one non-high degree
    if (step_removed_degrees_ > 0) {
      std::int64_t max_nonhigh = 0;
      for (vertex_id w = 0; w < g_.vertex_count(); ++w) {
        if (!ep_.is_high[w]) {
          max_nonhigh = std::max(max_nonhigh,
                                 static_cast<std::int64_t>(g_.degree(w)));
        }
      }
      const double budget = cfg_.c_replace * static_cast<double>(cfg_.lambda) *
                                static_cast<double>(ep_.T) +
                            static_cast<double>(max_nonhigh);
      if (static_cast<double>(step_removed_degrees_) > budget) {
        ++stats_.claimcc_violations;
      }
    }
  }

  arb_config cfg_;
  dynamic_graph g_;
  mis_state state_;
  arb_epoch_state ep_;
  arb_stats stats_;
  std::int64_t step_removed_degrees_ = 0;
  std::vector<epoch_report> pending_;
};

}  // namespace dynmis
