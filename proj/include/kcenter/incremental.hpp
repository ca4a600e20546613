#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "kcenter/graph.hpp"
#include "kcenter/ruling_set.hpp"
#include "kcenter/solution.hpp"
#include "kcenter/sssp.hpp"

namespace kcenter {

/// One radius of the geometric grid, maintaining a size-bounded ruling set
/// of the implicit distance-r threshold graph under edge insertions. The
/// threshold graph is never materialized; adjacency tests ride on distance
/// estimates with watch radius r' = (1+eps1)*r.
///
/// First phase: the sampling recursion of IncrementalRulingSet, with the
/// survivor rule driven by a super-source engine over the sampled union:
/// a survivor leaves the pool as soon as its estimate falls to <= r', and
/// the covering edge (witness -> vertex) is recorded. Each recursion call
/// restarts the super-source engine on the grown sampled union.
///
/// Second phase: the dominating set D freezes; one incremental engine per
/// member maintains the pairwise proximity edges
///   {a, b} present iff est_a(b) <= r' or est_b(a) <= r',
/// which feed a DynamicMis. The level answers while |M| <= k.
class RadiusLevel {
 public:
  RadiusLevel(const DynamicGraph& g, int k, double radius, double eps1,
              std::uint64_t seed, double sampling_c = 10.0);

  void on_insert(VertexId u, VertexId v, double w);  // already applied to g

  bool answers() const { return second_phase_ && !mis_.overflow(); }
  bool second_phase() const { return second_phase_; }
  bool paused() const { return paused_; }

  double radius() const { return radius_; }
  double watch_radius() const { return watch_; }
  int depth() const { return depth_; }

  const DynamicMis& mis() const { return mis_; }
  const std::vector<VertexId>& dominating_set() const { return dominating_; }
  const std::vector<std::pair<VertexId, VertexId>>& proximity_edges() const {
    return proximity_edges_;
  }
  // Covering record: the vertex in the dominating structure whose estimate
  // certified v (v itself once v is in the dominating set / pool / sample).
  VertexId dominator(VertexId v) const;

  std::uint64_t engine_opens() const { return engine_opens_; }
  std::uint64_t supersource_restarts() const { return supersource_restarts_; }
  std::uint64_t overflow_reports() const { return overflow_reports_; }
  const std::vector<VertexId>& survivors() const { return survivors_; }

 private:
  void drive();
  void advance_call();
  void enter_second_phase();
  void reopen_supersource();
  void drain_supersource();
  void absorb_proximity(VertexId a, VertexId b);

  const DynamicGraph* g_;
  int k_;
  double radius_;
  double watch_;
  double eps1_;
  double sampling_c_;
  std::mt19937_64 rng_;

  // first phase
  std::vector<VertexId> survivors_;
  std::vector<std::uint8_t> is_survivor_;
  std::size_t prev_pool_size_;
  int depth_ = 0;
  bool paused_ = false;
  std::uint64_t overflow_reports_ = 0;
  std::vector<VertexId> sampled_union_;
  std::vector<std::uint8_t> in_sampled_;
  std::optional<SsspEngine> supersource_;
  std::vector<VertexId> dominator_;  // recorded covering witness per vertex

  // second phase
  bool second_phase_ = false;
  std::vector<VertexId> dominating_;
  std::vector<std::uint8_t> in_dominating_;
  std::vector<SsspEngine> member_engines_;     // aligned with dominating_
  std::vector<std::int32_t> dominating_slot_;  // vertex id -> index, -1
  std::vector<std::pair<VertexId, VertexId>> proximity_edges_;  // u < v
  DynamicMis mis_;

  std::uint64_t engine_opens_ = 0;
  std::uint64_t supersource_restarts_ = 0;
};

/// Insertion-only k-center. Maintains one RadiusLevel per grid radius
/// (powers of 1+eps1 up to n*max_weight, eps1 = eps/12); a query scans the
/// grid upward and returns the first level whose ruling set fits within k,
/// certifying coverage within 2*(1+eps1)*r of that level.
class IncrementalKCenter {
 public:
  IncrementalKCenter(const DynamicGraph& g, int k, double eps,
                     std::uint64_t seed);

  void on_insert(VertexId u, VertexId v, double w);  // already applied to g

  Solution query();
  // Center serving v at the last feasible query: v's dominator, or that
  // dominator's ruling-set cover. Throws infeasible when the last query
  // found no level.
  VertexId assign(VertexId v) const;

  static std::vector<double> grid_radii(double distance_bound, double eps1);

  double eps1() const { return eps1_; }
  const std::vector<RadiusLevel>& levels() const { return levels_; }
  int last_answer() const { return last_answer_; }
  std::uint64_t engine_opens() const;
  std::uint64_t total_mis_additions() const;

  // Fan level maintenance across worker threads (1 = sequential).
  void set_threads(int threads);

 private:
  const DynamicGraph* g_;
  int k_;
  double eps_;
  double eps1_;
  std::vector<RadiusLevel> levels_;
  int last_answer_ = -1;
  int threads_ = 1;
};

}  // namespace kcenter
