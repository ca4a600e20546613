#include "kcenter/graph.hpp"

#include <algorithm>

namespace kcenter {

DynamicGraph::DynamicGraph(std::size_t n, double max_weight)
    : adj_(n), max_weight_(max_weight) {
  if (n == 0) fail(Errc::bad_argument, "graph needs at least one vertex");
  if (!(max_weight >= 1.0))
    fail(Errc::bad_argument, "max_weight must be >= 1");
}

void DynamicGraph::check_vertex(VertexId u) const {
  if (u >= adj_.size())
    fail(Errc::unknown_vertex, "vertex " + std::to_string(u) + " out of range");
}

std::uint64_t DynamicGraph::insert_edge(VertexId u, VertexId v, double w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Errc::self_loop, "self loop at " + std::to_string(u));
  if (!(w >= 1.0) || w > max_weight_)
    fail(Errc::weight_out_of_range,
         "weight " + std::to_string(w) + " outside [1, " +
             std::to_string(max_weight_) + "]");
  if (has_edge(u, v))
    fail(Errc::duplicate_edge,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") exists");
  adj_[u].push_back({v, w});
  adj_[v].push_back({u, w});
  ++m_;
  ++epoch_;
  log_.push_back({UpdateEvent::Kind::insert, u, v, w, epoch_});
  return epoch_;
}

std::uint64_t DynamicGraph::delete_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  auto drop = [&](VertexId a, VertexId b) {
    auto& lst = adj_[a];
    auto it = std::find_if(lst.begin(), lst.end(),
                           [&](const HalfEdge& e) { return e.to == b; });
    if (it == lst.end())
      fail(Errc::missing_edge,
           "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") not present");
    *it = lst.back();
    lst.pop_back();
  };
  drop(u, v);
  drop(v, u);
  --m_;
  ++epoch_;
  log_.push_back({UpdateEvent::Kind::erase, u, v, 0.0, epoch_});
  return epoch_;
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  for (const HalfEdge& e : adj_[u])
    if (e.to == v) return true;
  return false;
}

double DynamicGraph::edge_weight(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  for (const HalfEdge& e : adj_[u])
    if (e.to == v) return e.weight;
  fail(Errc::missing_edge,
       "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
}

std::span<const HalfEdge> DynamicGraph::neighbors(VertexId u) const {
  check_vertex(u);
  return adj_[u];
}

DynamicGraph DynamicGraph::replay(std::size_t n, double max_weight,
                                  std::span<const UpdateEvent> events) {
  DynamicGraph g(n, max_weight);
  for (const UpdateEvent& e : events) {
    switch (e.kind) {
      case UpdateEvent::Kind::insert:
        g.insert_edge(e.u, e.v, e.w);
        break;
      case UpdateEvent::Kind::erase:
        g.delete_edge(e.u, e.v);
        break;
      case UpdateEvent::Kind::query:
        break;
    }
  }
  return g;
}

}  // namespace kcenter
