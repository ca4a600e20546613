#include "kcenter/decremental.hpp"

#include <algorithm>

#include "kcenter/ruling_set.hpp"

namespace kcenter {

DecrementalKCenter::DecrementalKCenter(const DynamicGraph& g, int k, double eps)
    : g_(&g), k_(k), eps_(eps), eps1_(eps / 6.0) {
  if (k < 1) fail(Errc::bad_argument, "k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) fail(Errc::bad_argument, "eps must be in (0,1)");
  watch_ = (1.0 + eps1_) * radius_;
  find_radius();
  if (!infeasible_) {
    reopen();
    rebuild_clusters();
  }
}

// Climb the radius grid until the greedy ruling set fits within k picks.
// Past the distance bound every component is one cluster, so needing more
// than k picks there means more than k components: infeasible, frozen.
void DecrementalKCenter::find_radius() {
  for (;;) {
    RulingSetResult rs = static_ruling_set(*g_, k_, radius_);
    if (!rs.overflow) {
      centers_ = std::move(rs.members);
      additions_ += centers_.size();
      return;
    }
    if (radius_ >= g_->distance_bound()) {
      infeasible_ = true;
      centers_.clear();
      engine_.reset();
      return;
    }
    radius_ *= 1.0 + eps1_;
    watch_ = (1.0 + eps1_) * radius_;
    ++advances_;
  }
}

void DecrementalKCenter::reopen() {
  engine_.emplace(SsspEngine::Mode::decremental, *g_,
                  super_source(centers_, 0.0), eps1_, watch_);
}

void DecrementalKCenter::rebuild_clusters() {
  cluster_.assign(g_->n(), kNoVertex);
  for (VertexId v = 0; v < g_->n(); ++v)
    if (engine_->estimate(v) <= watch_) cluster_[v] = engine_->witness(v);
}

VertexId DecrementalKCenter::lowest_uncovered() const {
  for (VertexId v = 0; v < g_->n(); ++v)
    if (engine_->estimate(v) > watch_) return v;
  return kNoVertex;
}

void DecrementalKCenter::on_delete(VertexId u, VertexId v) {
  if (infeasible_) return;  // frozen; the graph can only fall further apart
  engine_->apply_delete(u, v);
  engine_->drain_uncrossed();  // superseded by the direct scan below
  for (;;) {
    const VertexId x = lowest_uncovered();
    if (x == kNoVertex) break;
    if (centers_.size() < static_cast<std::size_t>(k_)) {
      centers_.push_back(x);
      ++additions_;
      reopen();
      ++restarts_;
    } else {
      if (radius_ >= g_->distance_bound()) {
        infeasible_ = true;
        centers_.clear();
        engine_.reset();
        return;
      }
      radius_ *= 1.0 + eps1_;
      watch_ = (1.0 + eps1_) * radius_;
      ++advances_;
      find_radius();
      if (infeasible_) return;
      reopen();
      ++restarts_;
    }
  }
  rebuild_clusters();
}

Solution DecrementalKCenter::query() const {
  Solution s;
  if (infeasible_) return s;
  s.feasible = true;
  s.centers = centers_;
  std::sort(s.centers.begin(), s.centers.end());
  s.radius_bound = watch_;
  s.level = static_cast<int>(advances_);
  return s;
}

VertexId DecrementalKCenter::assign(VertexId v) const {
  if (infeasible_) fail(Errc::infeasible, "instance has more than k components");
  if (v >= g_->n()) fail(Errc::unknown_vertex, "vertex out of range");
  return cluster_[v];
}

}  // namespace kcenter
