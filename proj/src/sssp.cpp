#include "kcenter/sssp.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace kcenter {

namespace {

using QueueItem = std::pair<double, VertexId>;  // (distance, vertex), min-first
using MinQueue =
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;

std::vector<double> offsets_of(const DynamicGraph& g, const SourceSet& sources) {
  std::vector<double> init(g.n(), kInf);
  for (const auto& [v, off] : sources.entries) {
    if (v >= g.n()) fail(Errc::unknown_vertex, "source vertex out of range");
    init[v] = std::min(init[v], off);
  }
  return init;
}

// Exact Dijkstra from per-vertex initial distances. Improvements are ordered
// lexicographically on (distance, witness id) so equal-distance vertices
// always report the lowest-id source, independent of adjacency order.
void run_dijkstra(const DynamicGraph& g, const std::vector<double>& init,
                  DistanceField& f, std::vector<VertexId>* parent) {
  const std::size_t n = g.n();
  f.dist.assign(n, kInf);
  f.witness.assign(n, kNoVertex);
  if (parent) parent->assign(n, kNoVertex);
  MinQueue pq;
  for (VertexId v = 0; v < n; ++v) {
    if (init[v] < kInf) {
      f.dist[v] = init[v];
      f.witness[v] = v;
      pq.push({init[v], v});
    }
  }
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d > f.dist[x]) continue;
    for (const HalfEdge& e : g.neighbors(x)) {
      const double nd = d + e.weight;
      const VertexId y = e.to;
      if (nd < f.dist[y] ||
          (nd == f.dist[y] && f.witness[x] < f.witness[y])) {
        f.dist[y] = nd;
        f.witness[y] = f.witness[x];
        if (parent) (*parent)[y] = x;
        pq.push({nd, y});
      }
    }
  }
}

}  // namespace

SourceSet single_source(VertexId s) { return {{{s, 0.0}}}; }

SourceSet super_source(const std::vector<VertexId>& centers, double link_weight) {
  if (centers.empty())
    fail(Errc::empty_center_set, "super source needs at least one center");
  SourceSet out;
  out.entries.reserve(centers.size());
  for (VertexId c : centers) out.entries.push_back({c, link_weight});
  return out;
}

DistanceField sssp_static(const DynamicGraph& g, const SourceSet& sources) {
  if (sources.entries.empty())
    fail(Errc::empty_center_set, "distance query needs at least one source");
  DistanceField f;
  run_dijkstra(g, offsets_of(g, sources), f, nullptr);
  return f;
}

SsspEngine::SsspEngine(Mode mode, const DynamicGraph& g, SourceSet sources,
                       double eps, double watch)
    : g_(&g), mode_(mode), sources_(std::move(sources)), eps_(eps),
      watch_(watch) {
  if (sources_.entries.empty())
    fail(Errc::empty_center_set, "engine needs at least one source");
  if (eps_ < 0.0) fail(Errc::bad_argument, "eps must be >= 0");
  run_dijkstra(*g_, offsets_of(*g_, sources_), field_,
               mode_ == Mode::decremental ? &parent_ : nullptr);
  below_.resize(g.n());
  for (VertexId v = 0; v < g.n(); ++v) below_[v] = field_.dist[v] <= watch_;
}

void SsspEngine::note_drop(VertexId v) {
  if (!below_[v] && field_.dist[v] <= watch_) {
    below_[v] = 1;
    crossed_.push_back(v);
  }
}

void SsspEngine::apply_insert(VertexId u, VertexId v, double w) {
  if (mode_ != Mode::incremental)
    fail(Errc::mode_violation, "insert forwarded to a decremental engine");
  if (u >= g_->n() || v >= g_->n())
    fail(Errc::unknown_vertex, "edge endpoint out of range");
  // Decrease-only propagation seeded at both endpoints of the new edge.
  MinQueue pq;
  auto improve = [&](VertexId y, double nd, VertexId wit) {
    if (nd < field_.dist[y] ||
        (nd == field_.dist[y] && wit < field_.witness[y])) {
      field_.dist[y] = nd;
      field_.witness[y] = wit;
      note_drop(y);
      pq.push({nd, y});
    }
  };
  if (field_.dist[u] < kInf) improve(v, field_.dist[u] + w, field_.witness[u]);
  if (field_.dist[v] < kInf) improve(u, field_.dist[v] + w, field_.witness[v]);
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d > field_.dist[x]) continue;
    for (const HalfEdge& e : g_->neighbors(x))
      improve(e.to, d + e.weight, field_.witness[x]);
  }
}

void SsspEngine::apply_delete(VertexId u, VertexId v) {
  if (mode_ != Mode::decremental)
    fail(Errc::mode_violation, "delete forwarded to an incremental engine");
  if (u >= g_->n() || v >= g_->n())
    fail(Errc::unknown_vertex, "edge endpoint out of range");
  // A non-tree edge carries no certified path: every recorded distance is
  // still achieved by its shortest-path-tree path and deletions cannot
  // shorten anything, so the field stays exact untouched.
  if (parent_[v] == u) {
    repair_after_tree_cut(v);
  } else if (parent_[u] == v) {
    repair_after_tree_cut(u);
  }
}

void SsspEngine::repair_after_tree_cut(VertexId subtree_root) {
  const std::size_t n = g_->n();
  std::vector<std::vector<VertexId>> children(n);
  for (VertexId v = 0; v < n; ++v)
    if (parent_[v] != kNoVertex) children[parent_[v]].push_back(v);

  // Everything below the cut loses its certificate and is recomputed.
  std::vector<VertexId> affected;
  std::vector<std::uint8_t> in_affected(n, 0);
  affected.push_back(subtree_root);
  in_affected[subtree_root] = 1;
  for (std::size_t head = 0; head < affected.size(); ++head)
    for (VertexId c : children[affected[head]]) {
      in_affected[c] = 1;
      affected.push_back(c);
    }

  std::vector<double> offsets = offsets_of(*g_, sources_);
  for (VertexId x : affected) {
    field_.dist[x] = kInf;
    field_.witness[x] = kNoVertex;
    parent_[x] = kNoVertex;
  }

  // Bounded Dijkstra over the invalidated region, seeded by source offsets
  // and by edges entering from the intact part of the tree.
  MinQueue pq;
  auto improve = [&](VertexId y, double nd, VertexId wit, VertexId par) {
    if (nd < field_.dist[y] ||
        (nd == field_.dist[y] && wit < field_.witness[y])) {
      field_.dist[y] = nd;
      field_.witness[y] = wit;
      parent_[y] = par;
      pq.push({nd, y});
    }
  };
  for (VertexId x : affected) {
    if (offsets[x] < kInf) improve(x, offsets[x], x, kNoVertex);
    for (const HalfEdge& e : g_->neighbors(x))
      if (!in_affected[e.to] && field_.dist[e.to] < kInf)
        improve(x, field_.dist[e.to] + e.weight, field_.witness[e.to], e.to);
  }
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d > field_.dist[x]) continue;
    for (const HalfEdge& e : g_->neighbors(x))
      if (in_affected[e.to])
        improve(e.to, d + e.weight, field_.witness[x], x);
  }

  for (VertexId x : affected)
    if (below_[x] && field_.dist[x] > watch_) {
      below_[x] = 0;
      uncrossed_.push_back(x);
    }
}

std::vector<VertexId> SsspEngine::drain_crossed() {
  return std::exchange(crossed_, {});
}

std::vector<VertexId> SsspEngine::drain_uncrossed() {
  return std::exchange(uncrossed_, {});
}

std::vector<VertexId> SsspEngine::below_watch() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g_->n(); ++v)
    if (field_.dist[v] <= watch_) out.push_back(v);
  return out;
}

}  // namespace kcenter
