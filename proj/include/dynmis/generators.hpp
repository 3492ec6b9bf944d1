#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynmis/graph.hpp"
#include "dynmis/rng.hpp"
#include "dynmis/stream.hpp"

namespace dynmis {

namespace detail {

inline std::uint64_t pack_edge(vertex_id u, vertex_id v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Flat edge pool with O(1) uniform sampling and O(1) removal by swap.
class edge_pool {
 public:
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  const std::pair<vertex_id, vertex_id>& at(std::size_t i) const {
    return items_[i];
  }

  void add(vertex_id u, vertex_id v) {
    if (u > v) std::swap(u, v);
    pos_[pack_edge(u, v)] = items_.size();
    items_.emplace_back(u, v);
  }

  void remove(vertex_id u, vertex_id v) {
    auto it = pos_.find(pack_edge(u, v));
    std::size_t i = it->second;
    pos_.erase(it);
    if (i + 1 != items_.size()) {
      items_[i] = items_.back();
      pos_[pack_edge(items_[i].first, items_[i].second)] = i;
    }
    items_.pop_back();
  }

 private:
  std::vector<std::pair<vertex_id, vertex_id>> items_;
  std::unordered_map<std::uint64_t, std::size_t> pos_;
};

struct union_find {
  std::vector<vertex_id> parent;

  explicit union_find(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  vertex_id find(vertex_id x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(vertex_id a, vertex_id b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

// Each event is, with probability p_insert, an insertion of a uniformly
// random absent edge, else a deletion of a uniformly random present edge.
// When the required pool is empty the other kind is emitted, which keeps
// every generated stream replayable without retries.
inline update_stream gen_random_stream(std::size_t n, std::size_t steps,
                                       double p_insert, std::uint64_t seed) {
  if (p_insert < 0.0 || p_insert > 1.0) {
    throw std::invalid_argument("p_insert must lie in [0,1]");
  }
  if (n < 2 && steps > 0) {
    throw std::invalid_argument("need at least 2 vertices to emit events");
  }
  update_stream s;
  s.n = n;
  std::mt19937_64 rng(seed);
  detail::edge_pool absent;
  detail::edge_pool present;
  for (vertex_id u = 0; u + 1 < n; ++u) {
    for (vertex_id v = u + 1; v < n; ++v) absent.add(u, v);
  }
  for (std::size_t step = 0; step < steps; ++step) {
    bool want_insert = uniform_unit(rng) < p_insert;
    if (want_insert && absent.empty()) want_insert = false;
    if (!want_insert && present.empty()) want_insert = true;
    if (want_insert) {
      auto [u, v] = absent.at(uniform_below(rng, absent.size()));
      absent.remove(u, v);
      present.add(u, v);
      s.events.push_back({event_kind::insert, u, v});
    } else {
      auto [u, v] = present.at(uniform_below(rng, present.size()));
      present.remove(u, v);
      absent.add(u, v);
      s.events.push_back({event_kind::remove, u, v});
    }
  }
  return s;
}

// Counter lower-bound adversary: builds the complete bipartite graph K_{s,s}
// (left vertices 0..s-1, right s..2s-1), then each round inserts one edge
// inside the left side and one inside the right side and deletes both. The
// intra-side pairs cycle lexicographically so runs are reproducible.
inline update_stream gen_bipartite_adversary(std::size_t s,
                                             std::size_t rounds) {
  if (s < 2) throw std::invalid_argument("side size must be at least 2");
  update_stream out;
  out.n = 2 * s;
  for (vertex_id u = 0; u < s; ++u) {
    for (vertex_id v = 0; v < s; ++v) {
      out.events.push_back(
          {event_kind::insert, u, static_cast<vertex_id>(s + v)});
    }
  }
  std::vector<std::pair<vertex_id, vertex_id>> pairs;
  for (vertex_id a = 0; a + 1 < s; ++a) {
    for (vertex_id b = a + 1; b < s; ++b) pairs.emplace_back(a, b);
  }
  for (std::size_t r = 0; r < rounds; ++r) {
    auto [a, b] = pairs[r % pairs.size()];
    vertex_id ra = static_cast<vertex_id>(a + s);
    vertex_id rb = static_cast<vertex_id>(b + s);
    out.events.push_back({event_kind::insert, a, b});
    out.events.push_back({event_kind::insert, ra, rb});
    out.events.push_back({event_kind::remove, a, b});
    out.events.push_back({event_kind::remove, ra, rb});
  }
  return out;
}

// Keeps lambda edge-disjoint forests; an insertion is only emitted if the
// new edge fits into some forest (first forest whose trees it bridges), so
// every prefix of the stream replays to a graph of arboricity <= lambda.
// Steps mix insertions and deletions roughly 7:3; a step that cannot insert
// deletes instead and vice versa.
inline update_stream gen_bounded_arboricity_stream(std::size_t n, int lambda,
                                                   std::size_t steps,
                                                   std::uint64_t seed) {
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  if (n < 2 && steps > 0) {
    throw std::invalid_argument("need at least 2 vertices to emit events");
  }
  update_stream s;
  s.n = n;
  std::mt19937_64 rng(seed);

  struct forest {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    detail::union_find uf;
    bool dirty = false;

    explicit forest(std::size_t n) : uf(n) {}

    void refresh(std::size_t n) {
      if (!dirty) return;
      uf = detail::union_find(n);
      for (auto [a, b] : edges) uf.unite(a, b);
      dirty = false;
    }
  };

  std::vector<forest> forests(static_cast<std::size_t>(lambda), forest(n));
  std::unordered_map<std::uint64_t, int> owner;  // edge -> forest index
  detail::edge_pool absent;
  detail::edge_pool present;
  for (vertex_id u = 0; u + 1 < n; ++u) {
    for (vertex_id v = u + 1; v < n; ++v) absent.add(u, v);
  }

  auto fits = [&](vertex_id u, vertex_id v) -> int {
    for (std::size_t i = 0; i < forests.size(); ++i) {
      forests[i].refresh(n);
      if (forests[i].uf.find(u) != forests[i].uf.find(v)) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };

  auto do_insert = [&](vertex_id u, vertex_id v, int f) {
    forests[f].edges.emplace_back(std::min(u, v), std::max(u, v));
    forests[f].uf.unite(u, v);
    owner[detail::pack_edge(u, v)] = f;
    absent.remove(u, v);
    present.add(u, v);
    s.events.push_back({event_kind::insert, u, v});
  };

  auto try_insert = [&]() -> bool {
    // a few random probes, then an exhaustive scan
    for (int attempt = 0; attempt < 32 && !absent.empty(); ++attempt) {
      auto [u, v] = absent.at(uniform_below(rng, absent.size()));
      int f = fits(u, v);
      if (f >= 0) {
        do_insert(u, v, f);
        return true;
      }
    }
    std::vector<std::pair<std::pair<vertex_id, vertex_id>, int>> insertable;
    for (std::size_t i = 0; i < absent.size(); ++i) {
      auto [u, v] = absent.at(i);
      int f = fits(u, v);
      if (f >= 0) insertable.push_back({{u, v}, f});
    }
    if (insertable.empty()) return false;
    auto [uv, f] = insertable[uniform_below(rng, insertable.size())];
    do_insert(uv.first, uv.second, f);
    return true;
  };

  auto try_delete = [&]() -> bool {
    if (present.empty()) return false;
    auto [u, v] = present.at(uniform_below(rng, present.size()));
    auto key = detail::pack_edge(u, v);
    forest& f = forests[static_cast<std::size_t>(owner[key])];
    std::pair<vertex_id, vertex_id> norm{std::min(u, v), std::max(u, v)};
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
      if (f.edges[i] == norm) {
        f.edges[i] = f.edges.back();
        f.edges.pop_back();
        break;
      }
    }
    f.dirty = true;
    owner.erase(key);
    present.remove(u, v);
    absent.add(u, v);
    s.events.push_back({event_kind::remove, u, v});
    return true;
  };

  for (std::size_t step = 0; step < steps; ++step) {
    bool want_insert = uniform_unit(rng) < 0.7;
    if (want_insert) {
      if (!try_insert() && !try_delete()) break;
    } else {
      if (!try_delete() && !try_insert()) break;
    }
  }
  return s;
}

}  // namespace dynmis
