#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "kcenter/graph.hpp"
#include "kcenter/prng.hpp"

namespace testutil {

struct EdgeSpec {
  kcenter::VertexId u, v;
  double w;
};

inline kcenter::DynamicGraph make_graph(std::size_t n, double wmax,
                                        const std::vector<EdgeSpec>& edges) {
  kcenter::DynamicGraph g(n, wmax);
  for (const auto& e : edges) g.insert_edge(e.u, e.v, e.w);
  return g;
}

inline kcenter::DynamicGraph unit_path(std::size_t n) {
  kcenter::DynamicGraph g(n, 1.0);
  for (kcenter::VertexId v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1, 1.0);
  return g;
}

inline kcenter::DynamicGraph unit_cycle(std::size_t n) {
  kcenter::DynamicGraph g(n, 1.0);
  for (kcenter::VertexId v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1, 1.0);
  g.insert_edge(static_cast<kcenter::VertexId>(n - 1), 0, 1.0);
  return g;
}

inline kcenter::DynamicGraph complete_unit(std::size_t n) {
  kcenter::DynamicGraph g(n, 1.0);
  for (kcenter::VertexId u = 0; u < n; ++u)
    for (kcenter::VertexId v = u + 1; v < n; ++v) g.insert_edge(u, v, 1.0);
  return g;
}

// Runs f; reports the error code it threw, or nullopt if it returned.
template <class F>
std::optional<kcenter::Errc> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const kcenter::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// All unordered pairs of [0, n), shuffled deterministically.
inline std::vector<std::pair<kcenter::VertexId, kcenter::VertexId>>
shuffled_pairs(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<kcenter::VertexId, kcenter::VertexId>> pairs;
  for (kcenter::VertexId u = 0; u < n; ++u)
    for (kcenter::VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[kcenter::rng_below(rng, i)]);
  return pairs;
}

// Random graph with roughly density*C(n,2) edges and integer weights in
// [1, wmax].
inline kcenter::DynamicGraph random_graph(std::size_t n, double density,
                                          double wmax, std::uint64_t seed) {
  std::mt19937_64 rng(kcenter::derive_seed(seed, 0x7465737467726170ULL));
  kcenter::DynamicGraph g(n, wmax);
  auto pairs = shuffled_pairs(n, rng);
  const auto target = static_cast<std::size_t>(density * pairs.size());
  for (std::size_t i = 0; i < target && i < pairs.size(); ++i) {
    const double w =
        1.0 + static_cast<double>(kcenter::rng_below(
                  rng, static_cast<std::uint64_t>(wmax)));
    g.insert_edge(pairs[i].first, pairs[i].second, w);
  }
  return g;
}

// Connected variant: a random spanning tree first, then extra edges.
inline kcenter::DynamicGraph random_connected_graph(std::size_t n,
                                                    double density,
                                                    double wmax,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(kcenter::derive_seed(seed, 0x636f6e6e67726170ULL));
  kcenter::DynamicGraph g(n, wmax);
  auto draw_w = [&] {
    return 1.0 + static_cast<double>(kcenter::rng_below(
                     rng, static_cast<std::uint64_t>(wmax)));
  };
  std::vector<kcenter::VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<kcenter::VertexId>(i);
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[kcenter::rng_below(rng, i)]);
  for (std::size_t i = 1; i < n; ++i) {
    const auto prev = order[kcenter::rng_below(rng, i)];
    g.insert_edge(order[i], prev, draw_w());
  }
  for (const auto& [u, v] : shuffled_pairs(n, rng)) {
    if (g.m() >= static_cast<std::size_t>(density * n * (n - 1) / 2)) break;
    if (!g.has_edge(u, v)) g.insert_edge(u, v, draw_w());
  }
  return g;
}

}  // namespace testutil
