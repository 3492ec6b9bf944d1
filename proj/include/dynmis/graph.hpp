#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace dynmis {

using vertex_id = std::uint32_t;

inline constexpr vertex_id no_vertex = static_cast<vertex_id>(-1);

class graph_error : public std::runtime_error {
 public:
  enum class kind { out_of_range, self_loop, duplicate_edge, missing_edge };

  graph_error(kind k, const std::string& what)
      : std::runtime_error(what), kind_(k) {}

  kind which() const { return kind_; }

 private:
  kind kind_;
};

// Thrown when an algorithm violates one of its own preconditions. Reaching
// this is a bug in the caller, never an input problem.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Undirected simple graph over a vertex universe fixed at construction.
// Neighbor sets are hashed; nothing may depend on their iteration order, so
// algorithms that need a deterministic scan use sorted_neighbors().
class dynamic_graph {
 public:
  explicit dynamic_graph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  std::size_t degree(vertex_id v) const {
    check_vertex(v);
    return adj_[v].size();
  }

  const std::unordered_set<vertex_id>& neighbors(vertex_id v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::vector<vertex_id> sorted_neighbors(vertex_id v) const {
    check_vertex(v);
    std::vector<vertex_id> out(adj_[v].begin(), adj_[v].end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_edge(vertex_id u, vertex_id v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
  }

  void insert_edge(vertex_id u, vertex_id v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw graph_error(graph_error::kind::self_loop,
                        "self-loop at vertex " + std::to_string(u));
    }
    if (adj_[u].contains(v)) {
      throw graph_error(graph_error::kind::duplicate_edge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") already present");
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edges_;
  }

  void delete_edge(vertex_id u, vertex_id v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[u].contains(v)) {
      throw graph_error(graph_error::kind::missing_edge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") not present");
    }
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edges_;
  }

 private:
  void check_vertex(vertex_id v) const {
    if (v >= adj_.size()) {
      throw graph_error(graph_error::kind::out_of_range,
                        "vertex " + std::to_string(v) + " outside universe of " +
                            std::to_string(adj_.size()));
    }
  }

  std::vector<std::unordered_set<vertex_id>> adj_;
  std::size_t edges_ = 0;
};

// Graph degeneracy by repeated minimum-degree removal. Usable as an
// arboricity proxy: lambda <= degeneracy <= 2*lambda - 1.
inline std::size_t degeneracy_estimate(const dynamic_graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (vertex_id v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // bucket queue over residual degrees; stale entries are skipped lazily
  std::vector<std::vector<vertex_id>> buckets(max_deg + 1);
  for (vertex_id v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::size_t degeneracy = 0;
  std::size_t cur = 0;
  std::size_t processed = 0;
  while (processed < n) {
    while (cur <= max_deg && buckets[cur].empty()) ++cur;
    if (cur > max_deg) break;
    vertex_id v = buckets[cur].back();
    buckets[cur].pop_back();
    if (removed[v] || deg[v] != cur) continue;
    removed[v] = 1;
    ++processed;
    degeneracy = std::max(degeneracy, cur);
    for (vertex_id w : g.neighbors(v)) {
      if (!removed[w]) {
        --deg[w];
        buckets[deg[w]].push_back(w);
        if (deg[w] < cur) cur = deg[w];
      }
    }
  }
  return degeneracy;
}

}  // namespace dynmis
