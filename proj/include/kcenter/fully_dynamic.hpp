#pragma once

#include <cstdint>
#include <vector>

#include "kcenter/graph.hpp"
#include "kcenter/solution.hpp"
#include "kcenter/sssp.hpp"

namespace kcenter {

struct GonzalezRun {
  std::vector<VertexId> centers;    // pick order
  std::vector<double> pick_values;  // farthest distance seen at each pick
                                    // (kInf for the seed pick)
  double radius = kInf;             // max_v estimate with all centers placed
  DistanceField assignment;         // final field: per-vertex distance + center
};

// Exact farthest-first traversal: seed at vertex 0 (every vertex ties at
// infinity and ties go to the lowest id), then k-1 times pick the vertex
// farthest from the chosen set. Stops early once everything is a center.
GonzalezRun gonzalez_static(const DynamicGraph& g, int k);

/// Farthest-first traversal replayed after every edge update through a
/// super-source distance structure: place a virtual root, link it to each
/// center as it is picked, read the farthest vertex off the root's distance
/// field, and finally unlink everything (2k+1 structure touches per update,
/// k argmax scans). Links have weight `link_weight` (0 by default, so the
/// root's distances equal distances-to-centers; 1 mirrors a unit-link
/// construction and offsets every estimate by one).
///
/// The distance structure here recomputes on demand; estimates are exact,
/// so the produced picks coincide with gonzalez_static on the same graph.
class FullyDynamicKCenter {
 public:
  FullyDynamicKCenter(const DynamicGraph& g, int k, double eps,
                      double link_weight = 0.0);

  void apply_update(const UpdateEvent& e);  // already applied to g
  void refresh();                           // rerun the traversal

  Solution query() const;
  VertexId assign(VertexId v) const;  // kNoVertex when v is unreachable
  const GonzalezRun& last_run() const { return run_; }

  std::uint64_t graph_updates() const { return graph_updates_; }
  std::uint64_t super_inserts() const { return super_inserts_; }
  std::uint64_t super_deletes() const { return super_deletes_; }
  std::uint64_t argmax_scans() const { return argmax_scans_; }

 private:
  const DynamicGraph* g_;
  int k_;
  double eps_;
  double link_weight_;
  GonzalezRun run_;
  std::uint64_t graph_updates_ = 0;
  std::uint64_t super_inserts_ = 0;
  std::uint64_t super_deletes_ = 0;
  std::uint64_t argmax_scans_ = 0;
};

}  // namespace kcenter
