#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcenter {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Errc {
  duplicate_edge,
  missing_edge,
  self_loop,
  weight_out_of_range,
  unknown_vertex,
  mode_violation,
  empty_center_set,
  oracle_cap_exceeded,
  infeasible,
  mode_mismatch,
  parse_error,
  bad_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

struct HalfEdge {
  VertexId to;
  double weight;
};

struct UpdateEvent {
  enum class Kind { insert, erase, query };
  Kind kind = Kind::query;
  VertexId u = 0;
  VertexId v = 0;
  double w = 0.0;
  // Number of structural updates applied up to and including this event.
  std::uint64_t epoch = 0;
};

/// Weighted undirected simple graph on a fixed vertex set [0, n).
/// Only the edge set changes; every change is logged so a run can be
/// replayed from the log alone. Weights stay within [1, max_weight]
/// (re-weighting an edge is delete + insert).
class DynamicGraph {
 public:
  DynamicGraph(std::size_t n, double max_weight);

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }
  double max_weight() const { return max_weight_; }
  std::uint64_t epoch() const { return epoch_; }

  // Upper bound on any finite distance; used as the infinity cutoff.
  double distance_bound() const { return static_cast<double>(n()) * max_weight_; }

  std::uint64_t insert_edge(VertexId u, VertexId v, double w);
  std::uint64_t delete_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  double edge_weight(VertexId u, VertexId v) const;  // missing_edge if absent
  std::span<const HalfEdge> neighbors(VertexId u) const;

  const std::vector<UpdateEvent>& log() const { return log_; }

  // Rebuilds a graph by replaying a structural-update log.
  static DynamicGraph replay(std::size_t n, double max_weight,
                             std::span<const UpdateEvent> events);

 private:
  void check_vertex(VertexId u) const;

  std::vector<std::vector<HalfEdge>> adj_;
  double max_weight_;
  std::size_t m_ = 0;
  std::uint64_t epoch_ = 0;
  std::vector<UpdateEvent> log_;
};

}  // namespace kcenter
