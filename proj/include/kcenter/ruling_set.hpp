#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kcenter/graph.hpp"

namespace kcenter {

struct RulingSetResult {
  std::vector<VertexId> members;  // picks, in pick order
  bool overflow = false;          // a (k+1)-th pick was needed
};

// Greedy distance-r ruling set: repeatedly take the lowest-id uncovered
// vertex and cover everything within distance r of it. Stops after k+1
// picks or full coverage. With overflow=false the picks form a (2,1)-ruling
// set of the distance-r threshold graph.
RulingSetResult static_ruling_set(const DynamicGraph& g, int k, double r);

/// Maximal independent set maintained under edge insertions only, over a
/// fixed vertex subset. Per vertex we track the number of MIS neighbors;
/// a conflict evicts the higher id, and eviction re-admits (in ascending id
/// order) any neighbor whose counter drops to zero. M is maximal after
/// every insertion, and since the tracked edge set only grows, |M| only
/// shrinks between re-admissions.
class DynamicMis {
 public:
  DynamicMis() = default;
  DynamicMis(std::vector<VertexId> vertices, int k);

  void insert_edge(VertexId u, VertexId v);  // duplicate edges are ignored

  bool tracks(VertexId v) const;
  bool contains(VertexId v) const;  // v in M
  std::size_t size() const { return mis_size_; }
  bool overflow() const { return mis_size_ > static_cast<std::size_t>(k_); }
  std::vector<VertexId> members() const;  // ascending

  // v itself when in M, else its lowest-id MIS neighbor. Maximality
  // guarantees one exists.
  VertexId covering_member(VertexId v) const;

  const std::vector<VertexId>& neighbors(VertexId v) const;
  std::uint64_t additions() const { return additions_; }

 private:
  std::size_t slot(VertexId v) const;

  std::vector<VertexId> vertices_;       // ascending
  std::vector<std::int32_t> slot_of_;    // vertex id -> slot, -1 if untracked
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint8_t> in_mis_;
  std::vector<std::int32_t> mis_neighbors_;
  std::size_t mis_size_ = 0;
  int k_ = 0;
  std::uint64_t additions_ = 0;
};

/// Size-bounded ruling set maintained under edge insertions on an explicit
/// unweighted graph. Two phases:
///
/// First phase: recursive sampling. Each call draws a hitting set from the
/// current survivor pool (each vertex kept with probability
/// min(c*ln(n)/gamma, 1), gamma = |pool|/(2k) - 1) and the next pool keeps
/// the vertices with no sampled neighbor. The recursion advances only while
/// the pool at least halves; otherwise it pauses and reports that an
/// independent set of size >= k+1 exists (with high probability). A paused
/// recursion keeps its state: later insertions shrink the pool and may let
/// it resume.
///
/// Second phase (pool size <= 4k): the union of all sampled sets plus the
/// final pool becomes a dominating set D, and a DynamicMis over D's induced
/// subgraph yields the ruling set. Every subsequent insertion inside D is
/// forwarded to it.
class IncrementalRulingSet {
 public:
  struct Config {
    int k = 1;
    double sampling_c = 10.0;
    std::uint64_t seed = 0;
  };

  IncrementalRulingSet(std::size_t n, Config cfg);

  void insert_edge(VertexId u, VertexId v);  // duplicate edges are ignored

  bool second_phase() const { return second_phase_; }
  bool paused() const { return paused_; }
  // Overflow claim: paused first phase, or second phase with |M| > k.
  bool overflow() const;

  std::vector<VertexId> ruling_set() const;  // valid in second phase
  const DynamicMis& mis() const { return mis_; }
  const std::vector<VertexId>& dominating_set() const { return dominating_; }

  int depth() const { return depth_; }
  const std::vector<VertexId>& survivors() const { return survivors_; }
  const std::vector<std::vector<VertexId>>& sampled_sets() const {
    return sampled_sets_;
  }
  std::uint64_t overflow_reports() const { return overflow_reports_; }

 private:
  void drive();
  void advance_call();
  void enter_second_phase();
  void remove_survivor(VertexId v);

  std::size_t n_;
  Config cfg_;
  std::mt19937_64 rng_;
  std::vector<std::vector<VertexId>> adj_;

  std::vector<VertexId> survivors_;        // current pool, ascending
  std::vector<std::uint8_t> is_survivor_;
  std::size_t prev_pool_size_;             // pool size when this call began
  int depth_ = 0;
  bool paused_ = false;
  std::uint64_t overflow_reports_ = 0;

  std::vector<std::vector<VertexId>> sampled_sets_;
  std::vector<VertexId> sampled_union_;
  std::vector<std::uint8_t> in_sampled_;

  bool second_phase_ = false;
  std::vector<VertexId> dominating_;
  std::vector<std::uint8_t> in_dominating_;
  DynamicMis mis_;
};

}  // namespace kcenter
