#include "kcenter/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

#include "kcenter/sssp.hpp"

namespace kcenter {

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  if (u >= n() || v >= n()) fail(Errc::unknown_vertex, "edge endpoint out of range");
  if (u == v) fail(Errc::self_loop, "self loop");
  if (has_edge(u, v)) return;
  adj[u].push_back(v);
  adj[v].push_back(u);
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

std::vector<std::vector<double>> apsp(const DynamicGraph& g) {
  if (g.n() > kApspCap)
    fail(Errc::oracle_cap_exceeded,
         "apsp limited to " + std::to_string(kApspCap) + " vertices");
  std::vector<std::vector<double>> d;
  d.reserve(g.n());
  for (VertexId s = 0; s < g.n(); ++s)
    d.push_back(sssp_static(g, single_source(s)).dist);
  return d;
}

ThresholdGraph threshold_graph(const DynamicGraph& g, double r) {
  auto d = apsp(g);
  ThresholdGraph tg;
  tg.r = r;
  tg.graph = SimpleGraph(g.n());
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v = u + 1; v < g.n(); ++v)
      if (d[u][v] <= r) tg.graph.add_edge(u, v);
  return tg;
}

namespace {

double subsets_up_to(std::size_t n, int k) {
  double total = 0.0, binom = 1.0;
  for (int j = 1; j <= k && static_cast<std::size_t>(j) <= n; ++j) {
    binom = binom * static_cast<double>(n - j + 1) / j;
    total += binom;
  }
  return total;
}

}  // namespace

ExactKCenter exact_kcenter(const DynamicGraph& g, int k) {
  if (k < 1) fail(Errc::bad_argument, "k must be >= 1");
  if (g.n() > kEnumVertexCap)
    fail(Errc::oracle_cap_exceeded,
         "center enumeration limited to " + std::to_string(kEnumVertexCap) +
             " vertices");
  if (subsets_up_to(g.n(), k) > kEnumSubsetBudget)
    fail(Errc::oracle_cap_exceeded, "center enumeration budget exceeded");
  auto d = apsp(g);
  const std::size_t n = g.n();
  const int depth_cap = std::min<std::size_t>(k, n);

  ExactKCenter best;
  std::vector<VertexId> chosen;
  // cover[depth] = per-vertex distance to the first `depth` chosen centers.
  std::vector<std::vector<double>> cover(depth_cap + 1,
                                         std::vector<double>(n, kInf));

  // Depth-first over sorted center tuples visits subsets in lexicographic
  // order, so the first set achieving the final optimum is the
  // lexicographically smallest optimal one. Strict improvement keeps it.
  auto rec = [&](auto&& self, VertexId next, int depth) -> void {
    for (VertexId c = next; c < n; ++c) {
      const auto& prev = cover[depth];
      auto& cur = cover[depth + 1];
      double radius = 0.0;
      for (VertexId v = 0; v < n; ++v) {
        cur[v] = std::min(prev[v], d[c][v]);
        radius = std::max(radius, cur[v]);
      }
      chosen.push_back(c);
      if (radius < best.radius) {
        best.radius = radius;
        best.centers = chosen;
      }
      if (depth + 1 < depth_cap) self(self, c + 1, depth + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

namespace {

// Hop distances from a set; kNoHop when unreachable.
constexpr int kNoHop = std::numeric_limits<int>::max();

std::vector<int> bfs_hops(const SimpleGraph& h, const std::vector<VertexId>& from) {
  std::vector<int> hop(h.n(), kNoHop);
  std::queue<VertexId> q;
  for (VertexId s : from) {
    if (s >= h.n()) fail(Errc::unknown_vertex, "set member out of range");
    if (hop[s] != 0) {
      hop[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (VertexId y : h.adj[x])
      if (hop[y] == kNoHop) {
        hop[y] = hop[x] + 1;
        q.push(y);
      }
  }
  return hop;
}

}  // namespace

bool verify_ruling_set(const SimpleGraph& h, const std::vector<VertexId>& m,
                       int alpha, int beta) {
  if (m.empty()) return h.n() == 0;
  auto hop = bfs_hops(h, m);
  for (VertexId v = 0; v < h.n(); ++v)
    if (hop[v] == kNoHop || hop[v] > beta) return false;
  // Pairwise separation: no other member within alpha-1 hops.
  for (VertexId s : m) {
    auto local = bfs_hops(h, {s});
    for (VertexId t : m)
      if (t != s && local[t] < alpha) return false;
  }
  return true;
}

bool verify_ruling_set(const ThresholdGraph& tg, const std::vector<VertexId>& m,
                       int alpha, int beta) {
  return verify_ruling_set(tg.graph, m, alpha, beta);
}

bool verify_dominating(const SimpleGraph& h, const std::vector<VertexId>& s) {
  std::vector<std::uint8_t> in_s(h.n(), 0);
  for (VertexId x : s) {
    if (x >= h.n()) fail(Errc::unknown_vertex, "set member out of range");
    in_s[x] = 1;
  }
  for (VertexId v = 0; v < h.n(); ++v) {
    if (in_s[v]) continue;
    bool covered = false;
    for (VertexId y : h.adj[v])
      if (in_s[y]) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

int max_independent_set_size(const SimpleGraph& h, int cap) {
  if (h.n() > kEnumVertexCap)
    fail(Errc::oracle_cap_exceeded,
         "independent-set search limited to " + std::to_string(kEnumVertexCap) +
             " vertices");
  if (cap <= 0) return 0;
  const std::size_t n = h.n();
  std::vector<std::uint64_t> closed(n, 0);  // closed neighborhood masks
  for (VertexId v = 0; v < n; ++v) {
    closed[v] |= 1ULL << v;
    for (VertexId y : h.adj[v]) closed[v] |= 1ULL << y;
  }
  const std::uint64_t all =
      n == 64 ? ~0ULL : ((1ULL << n) - 1);
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (size > best) best = size;
    if (best >= cap) return;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      self(self, cand & ~closed[v], size + 1);   // take v
      if (best >= cap) return;
      cand &= cand - 1;                           // skip v
    }
  };
  rec(rec, all, 0);
  return std::min(best, cap);
}

std::size_t component_count(const DynamicGraph& g) {
  std::vector<std::uint8_t> seen(g.n(), 0);
  std::size_t comps = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const HalfEdge& e : g.neighbors(x))
        if (!seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
    }
  }
  return comps;
}

double coverage_radius(const DynamicGraph& g, const std::vector<VertexId>& centers) {
  if (centers.empty()) return kInf;
  auto f = sssp_static(g, super_source(centers, 0.0));
  double radius = 0.0;
  for (double d : f.dist) radius = std::max(radius, d);
  return radius;
}

}  // namespace kcenter
