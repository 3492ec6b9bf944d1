#pragma once

#include <cstdint>

namespace dynmis {

// Work-unit ledger: one unit per adjacency-entry visit and per counter
// mutation; MIS membership flips are tracked separately. Amortized-cost
// claims are checked against these counters, not wall clock.
struct work_meter {
  std::uint64_t adjacency_visits = 0;
  std::uint64_t counter_mutations = 0;
  std::uint64_t mis_adds = 0;
  std::uint64_t mis_removes = 0;

  std::uint64_t mis_flips() const { return mis_adds + mis_removes; }
  std::uint64_t work() const { return adjacency_visits + counter_mutations; }

  work_meter& operator+=(const work_meter& o) {
    adjacency_visits += o.adjacency_visits;
    counter_mutations += o.counter_mutations;
    mis_adds += o.mis_adds;
    mis_removes += o.mis_removes;
    return *this;
  }

  friend work_meter operator-(work_meter a, const work_meter& b) {
    a.adjacency_visits -= b.adjacency_visits;
    a.counter_mutations -= b.counter_mutations;
    a.mis_adds -= b.mis_adds;
    a.mis_removes -= b.mis_removes;
    return a;
  }
};

}  // namespace dynmis
