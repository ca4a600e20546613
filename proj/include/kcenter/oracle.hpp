#pragma once

#include <vector>

#include "kcenter/graph.hpp"

namespace kcenter {

/// Brute-force reference computations. Everything here is exact and slow on
/// purpose: these are the yardsticks the maintained structures are measured
/// against, sized for test-scale graphs only. Inputs past the caps throw
/// oracle_cap_exceeded instead of silently grinding.

inline constexpr std::size_t kApspCap = 256;
inline constexpr std::size_t kEnumVertexCap = 64;
inline constexpr double kEnumSubsetBudget = 1e7;

// Unweighted simple graph used for threshold graphs and recorded-edge
// structures; hop distances only.
struct SimpleGraph {
  explicit SimpleGraph(std::size_t n) : adj(n) {}
  std::size_t n() const { return adj.size(); }
  void add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;
  std::vector<std::vector<VertexId>> adj;
};

struct ThresholdGraph {
  double r = 0.0;
  SimpleGraph graph{0};
};

// All-pairs exact distances by n Dijkstra runs. n <= kApspCap.
std::vector<std::vector<double>> apsp(const DynamicGraph& g);

// Unweighted graph with an edge wherever the exact distance is <= r.
ThresholdGraph threshold_graph(const DynamicGraph& g, double r);

struct ExactKCenter {
  double radius = kInf;                 // kInf when even n centers cannot cover
  std::vector<VertexId> centers;        // lexicographically smallest optimum
};

// Optimal k-center value by enumerating center sets of size <= k in
// lexicographic order. Requires n <= kEnumVertexCap and C(n, k) within the
// subset budget.
ExactKCenter exact_kcenter(const DynamicGraph& g, int k);

// Checks M against hop distances in `h`: pairwise >= alpha apart, and every
// vertex within beta hops of M.
bool verify_ruling_set(const SimpleGraph& h, const std::vector<VertexId>& m,
                       int alpha, int beta);
bool verify_ruling_set(const ThresholdGraph& tg, const std::vector<VertexId>& m,
                       int alpha, int beta);

// Every vertex is in S or adjacent to S.
bool verify_dominating(const SimpleGraph& h, const std::vector<VertexId>& s);

// Size of a maximum independent set, truncated at `cap`: the exact maximum
// when below cap, otherwise cap. Branch-and-bound; n <= kEnumVertexCap.
int max_independent_set_size(const SimpleGraph& h, int cap);

// Number of connected components of the weighted graph.
std::size_t component_count(const DynamicGraph& g);

// Exact covering radius max_v d(v, centers) of a concrete center set.
double coverage_radius(const DynamicGraph& g, const std::vector<VertexId>& centers);

}  // namespace kcenter
