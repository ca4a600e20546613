#include "kcenter/fully_dynamic.hpp"

#include <algorithm>

namespace kcenter {

namespace {

// argmax of the field, ties to the lowest id.
VertexId farthest(const std::vector<double>& dist) {
  VertexId far = 0;
  for (VertexId v = 1; v < dist.size(); ++v)
    if (dist[v] > dist[far]) far = v;
  return far;
}

}  // namespace

GonzalezRun gonzalez_static(const DynamicGraph& g, int k) {
  if (k < 1) fail(Errc::bad_argument, "k must be >= 1");
  GonzalezRun run;
  run.assignment.dist.assign(g.n(), kInf);
  run.assignment.witness.assign(g.n(), kNoVertex);
  auto& dist = run.assignment.dist;
  auto& witness = run.assignment.witness;
  for (int i = 0; i < k; ++i) {
    const VertexId far = farthest(dist);
    if (!run.centers.empty() && dist[far] <= 0.0) break;  // all covered exactly
    run.pick_values.push_back(dist[far]);
    run.centers.push_back(far);
    const DistanceField f = sssp_static(g, single_source(far));
    for (VertexId v = 0; v < g.n(); ++v)
      if (f.dist[v] < dist[v] || (f.dist[v] == dist[v] && far < witness[v])) {
        dist[v] = f.dist[v];
        witness[v] = far;
      }
  }
  run.radius = *std::max_element(dist.begin(), dist.end());
  return run;
}

FullyDynamicKCenter::FullyDynamicKCenter(const DynamicGraph& g, int k,
                                         double eps, double link_weight)
    : g_(&g), k_(k), eps_(eps), link_weight_(link_weight) {
  if (k < 1) fail(Errc::bad_argument, "k must be >= 1");
  if (!(eps > 0.0 && eps <= 0.5))
    fail(Errc::bad_argument, "eps must be in (0, 1/2]");
  if (link_weight != 0.0 && link_weight != 1.0)
    fail(Errc::bad_argument, "link weight must be 0 or 1");
  refresh();
}

void FullyDynamicKCenter::refresh() {
  run_ = GonzalezRun{};
  std::vector<VertexId> centers;
  for (int i = 0; i < k_; ++i) {
    ++argmax_scans_;
    if (centers.empty()) {
      // Root not linked to anything yet: every vertex reads as infinity.
      run_.pick_values.push_back(kInf);
      centers.push_back(0);
      ++super_inserts_;
      continue;
    }
    const DistanceField f = sssp_static(*g_, super_source(centers, link_weight_));
    const VertexId far = farthest(f.dist);
    // Nothing beyond the centers themselves is left.
    if (f.dist[far] <= link_weight_) break;
    run_.pick_values.push_back(f.dist[far]);
    centers.push_back(far);
    ++super_inserts_;
  }
  run_.assignment = sssp_static(*g_, super_source(centers, link_weight_));
  run_.radius = *std::max_element(run_.assignment.dist.begin(),
                                  run_.assignment.dist.end());
  run_.centers = std::move(centers);
  super_deletes_ += run_.centers.size();  // unlink the root again
}

void FullyDynamicKCenter::apply_update(const UpdateEvent& e) {
  if (e.kind == UpdateEvent::Kind::query) return;
  ++graph_updates_;
  refresh();
}

Solution FullyDynamicKCenter::query() const {
  Solution s;
  s.feasible = run_.radius < kInf;
  s.centers = run_.centers;
  std::sort(s.centers.begin(), s.centers.end());
  s.radius_bound = run_.radius;
  return s;
}

VertexId FullyDynamicKCenter::assign(VertexId v) const {
  if (v >= g_->n()) fail(Errc::unknown_vertex, "vertex out of range");
  return run_.assignment.witness[v];
}

}  // namespace kcenter
