#pragma once

#include <vector>

#include "kcenter/graph.hpp"

namespace kcenter {

/// Source specification for distance computations. Each entry is a vertex
/// plus an initial distance offset. A super source attached to a center set
/// with links of weight 0 or 1 is expressed purely through these offsets;
/// the underlying graph is never mutated for it.
struct SourceSet {
  std::vector<std::pair<VertexId, double>> entries;
};

SourceSet single_source(VertexId s);

// Virtual root linked to every center with `link_weight` edges.
// Throws empty_center_set when centers is empty.
SourceSet super_source(const std::vector<VertexId>& centers, double link_weight);

struct DistanceField {
  std::vector<double> dist;       // kInf when unreachable
  std::vector<VertexId> witness;  // attaining source; kNoVertex when unreachable
};

// Exact multi-source Dijkstra snapshot. Witness ties go to the lowest
// source id so results are reproducible regardless of adjacency order.
DistanceField sssp_static(const DynamicGraph& g, const SourceSet& sources);

/// Single-source/super-source distance estimates maintained under one kind
/// of edge update. Estimates delta satisfy
///     d_G(S, v) <= delta(v) <= (1 + eps) * d_G(S, v);
/// this implementation keeps them exact (the eps slack is an interface
/// allowance, not something callers may rely on being used).
///
/// An optional watch radius maintains two transition queues:
///   crossed:   estimate fell to <= watch since the last drain,
///   uncrossed: estimate rose above watch since the last drain.
/// Vertices already at <= watch when the engine opens are NOT queued;
/// read them off with below_watch().
///
/// The engine observes the caller's graph: apply the edge update to the
/// graph first, then forward it here. Forwarding the wrong update kind for
/// the mode throws mode_violation. There is no rebuild-in-place: to restart,
/// discard the engine and construct a fresh one.
class SsspEngine {
 public:
  enum class Mode { incremental, decremental };

  SsspEngine(Mode mode, const DynamicGraph& g, SourceSet sources, double eps,
             double watch = kInf);

  Mode mode() const { return mode_; }
  double eps() const { return eps_; }
  double watch() const { return watch_; }
  const SourceSet& sources() const { return sources_; }

  void apply_insert(VertexId u, VertexId v, double w);
  void apply_delete(VertexId u, VertexId v);

  double estimate(VertexId v) const { return field_.dist[v]; }
  VertexId witness(VertexId v) const { return field_.witness[v]; }
  const DistanceField& field() const { return field_; }

  std::vector<VertexId> drain_crossed();
  std::vector<VertexId> drain_uncrossed();
  std::vector<VertexId> below_watch() const;

 private:
  void note_drop(VertexId v);  // after a decrease: maybe queue crossing
  void repair_after_tree_cut(VertexId subtree_root);

  const DynamicGraph* g_;
  Mode mode_;
  SourceSet sources_;
  double eps_;
  double watch_;
  DistanceField field_;
  std::vector<VertexId> parent_;  // shortest-path forest (decremental only)
  std::vector<std::uint8_t> below_;
  std::vector<VertexId> crossed_;
  std::vector<VertexId> uncrossed_;
};

}  // namespace kcenter
