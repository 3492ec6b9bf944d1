#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/mis.hpp"
#include "dynmis/rng.hpp"

namespace dynmis {

struct rand_config {
  // high-degree threshold scale: deg(v) >= c_high * sqrt(m) * log2(m)^1.5
  double c_high = 200.0;
  std::uint64_t seed = 1;
  bool check_invariants = false;
};

// Exact integer ceil(sqrt(m)).
inline std::uint64_t sqrt_ceil(std::uint64_t m) {
  if (m <= 1) return m;
  std::uint64_t k = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
  while (k > 1 && (k - 1) * (k - 1) >= m) --k;
  while (k * k < m) ++k;
  return k;
}

inline double rand_high_threshold(std::uint64_t m, const rand_config& cfg) {
  return cfg.c_high * std::sqrt(static_cast<double>(m)) *
         std::pow(clamped_log2(m), 1.5);
}

// Uniform permutation of 0..n-1, a deterministic function of (seed,
// epoch_index, n). Distinct epochs draw independent permutations via seed
// mixing.
inline std::vector<vertex_id> random_permutation(std::uint64_t seed,
                                                 std::uint64_t epoch_index,
                                                 std::size_t n) {
  std::mt19937_64 rng(mix_seed(seed, epoch_index));
  std::vector<vertex_id> order(n);
  for (vertex_id v = 0; v < n; ++v) order[v] = v;
  shuffle_vector(rng, order);
  return order;
}

// Random-order MIS: scan the permutation, keep every vertex not yet
// dominated. Identical to greedy_mis under that order.
inline mis_state build_random_mis(const dynamic_graph& g,
                                  const std::vector<vertex_id>& order,
                                  work_meter& meter) {
  return greedy_mis(g, order, meter);
}

// Eviction rule when an insertion joins two MIS vertices: prefer to drop an
// endpoint outside the frozen high set; otherwise fall back to the smaller
// degree (ties to the smaller id).
inline vertex_id choose_rand_removal(const dynamic_graph& g,
                                     const std::vector<char>& is_high,
                                     vertex_id u, vertex_id v) {
  const bool uh = is_high[u];
  const bool vh = is_high[v];
  if (uh != vh) return uh ? v : u;
  return smaller_degree_endpoint(g, u, v);
}

// Monte Carlo estimate of Pr[w ends up in the MIS] over fresh random
// orders; test support for the probability-decay checks.
inline double estimate_high_degree_mis_probability(const dynamic_graph& g,
                                                   vertex_id w, int trials,
                                                   std::uint64_t seed) {
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    work_meter meter;
    auto order = random_permutation(seed, static_cast<std::uint64_t>(t),
                                    g.vertex_count());
    mis_state s = build_random_mis(g, order, meter);
    hits += s.in_mis[w] ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

struct rand_epoch {
  std::uint64_t m0 = 1;
  std::uint64_t length = 1;
  std::uint64_t rounds_left = 0;
  double threshold = 0.0;
  std::vector<vertex_id> v_high;
  std::vector<char> is_high;
};

struct rand_stats {
  std::uint64_t epochs = 0;
  std::uint64_t multi_removal_violations = 0;
};

// Reconstructs the MIS from a fresh random order every ceil(sqrt(m)) rounds
// and maintains counters in between. The high set is frozen per epoch from
// the degrees at construction time.
class rand_runner {
 public:
  rand_runner(std::size_t n, const rand_config& cfg)
      : cfg_(cfg), g_(n), state_(n) {
    start_epoch();
  }

  void step(const update_event& e, work_meter& meter) {
    if (epoch_.rounds_left == 0) start_epoch();
    apply_update(e, meter);
    --epoch_.rounds_left;
  }

  const dynamic_graph& graph() const { return g_; }
  const mis_state& state() const { return state_; }
  const rand_epoch& epoch() const { return epoch_; }
  const rand_stats& stats() const { return stats_; }

  std::vector<epoch_report> drain_epoch_reports() {
    return std::exchange(pending_, {});
  }

 private:
  void start_epoch() {
    epoch_report rep;
    epoch_ = rand_epoch{};
    epoch_.m0 = std::max<std::uint64_t>(1, g_.edge_count());
    epoch_.length = sqrt_ceil(epoch_.m0);
    epoch_.rounds_left = epoch_.length;
    auto order = random_permutation(cfg_.seed, epoch_index_++, g_.vertex_count());
    state_ = build_random_mis(g_, order, rep.rebuild);
    epoch_.threshold = rand_high_threshold(epoch_.m0, cfg_);
    epoch_.is_high.assign(g_.vertex_count(), 0);
    for (vertex_id v = 0; v < g_.vertex_count(); ++v) {
      if (static_cast<double>(g_.degree(v)) >= epoch_.threshold) {
        epoch_.is_high[v] = 1;
        epoch_.v_high.push_back(v);
      }
    }
    ++stats_.epochs;
    rep.length = epoch_.length;
    pending_.push_back(rep);
  }

  void apply_update(const update_event& e, work_meter& meter) {
    if (e.kind == event_kind::insert) {
      g_.insert_edge(e.u, e.v);
      const bool both = state_.in_mis[e.u] && state_.in_mis[e.v];
      edge_inserted_counters(g_, state_, e.u, e.v, meter);
      if (both) {
        vertex_id out = choose_rand_removal(g_, epoch_.is_high, e.u, e.v);
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

  rand_config cfg_;
  dynamic_graph g_;
  mis_state state_;
  rand_epoch epoch_;
  rand_stats stats_;
  std::uint64_t epoch_index_ = 0;
  std::vector<epoch_report> pending_;
};

}  // namespace dynmis
