#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcenter/graph.hpp"
#include "kcenter/solution.hpp"
#include "kcenter/sssp.hpp"

namespace kcenter {

/// Deletion-only k-center. Keeps a single radius r that climbs a geometric
/// grid (powers of 1+eps1, eps1 = eps/6): a greedy distance-r ruling set
/// either fits within k centers or r advances. Between deletions a
/// decremental super-source engine over the centers watches r' = (1+eps1)*r;
/// when a deletion pushes some vertex beyond r', the vertex is appended as a
/// new center while room remains, otherwise r advances and the centers are
/// rebuilt. The engine restarts on every center-set or radius change.
///
/// Once r would have to climb past n*max_weight with more than k centers the
/// instance has more than k components; the state reports infeasible and
/// freezes (deletions cannot reconnect anything).
class DecrementalKCenter {
 public:
  DecrementalKCenter(const DynamicGraph& g, int k, double eps);

  void on_delete(VertexId u, VertexId v);  // already applied to g

  Solution query() const;
  // Center whose cluster contains v. Throws infeasible once frozen.
  VertexId assign(VertexId v) const;

  bool infeasible() const { return infeasible_; }
  double radius() const { return radius_; }
  double watch_radius() const { return watch_; }
  double eps1() const { return eps1_; }
  const std::vector<VertexId>& centers() const { return centers_; }

  std::uint64_t additions() const { return additions_; }
  std::uint64_t restarts() const { return restarts_; }
  std::uint64_t advances() const { return advances_; }

 private:
  void find_radius();
  void reopen();
  void rebuild_clusters();
  VertexId lowest_uncovered() const;

  const DynamicGraph* g_;
  int k_;
  double eps_;
  double eps1_;
  double radius_ = 1.0;
  double watch_;
  bool infeasible_ = false;
  std::vector<VertexId> centers_;  // in pick/append order
  std::optional<SsspEngine> engine_;
  std::vector<VertexId> cluster_;  // covering center per vertex

  std::uint64_t additions_ = 0;
  std::uint64_t restarts_ = 0;
  std::uint64_t advances_ = 0;
};

}  // namespace kcenter
