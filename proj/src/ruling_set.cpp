#include "kcenter/ruling_set.hpp"

#include <algorithm>
#include <cmath>

#include "kcenter/prng.hpp"
#include "kcenter/sssp.hpp"

namespace kcenter {

RulingSetResult static_ruling_set(const DynamicGraph& g, int k, double r) {
  if (k < 1) fail(Errc::bad_argument, "k must be >= 1");
  if (!(r >= 0.0)) fail(Errc::bad_argument, "radius must be >= 0");
  RulingSetResult out;
  std::vector<std::uint8_t> covered(g.n(), 0);
  for (;;) {
    VertexId pick = kNoVertex;
    for (VertexId v = 0; v < g.n(); ++v)
      if (!covered[v]) {
        pick = v;
        break;
      }
    if (pick == kNoVertex) break;
    out.members.push_back(pick);
    const DistanceField f = sssp_static(g, single_source(pick));
    for (VertexId v = 0; v < g.n(); ++v)
      if (f.dist[v] <= r) covered[v] = 1;
    if (out.members.size() == static_cast<std::size_t>(k) + 1) {
      out.overflow = true;
      break;
    }
  }
  return out;
}

DynamicMis::DynamicMis(std::vector<VertexId> vertices, int k)
    : vertices_(std::move(vertices)), k_(k) {
  if (k < 0) fail(Errc::bad_argument, "k must be >= 0");
  std::sort(vertices_.begin(), vertices_.end());
  VertexId max_id = vertices_.empty() ? 0 : vertices_.back();
  slot_of_.assign(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (slot_of_[vertices_[i]] != -1)
      fail(Errc::bad_argument, "duplicate vertex in MIS domain");
    slot_of_[vertices_[i]] = static_cast<std::int32_t>(i);
  }
  adj_.resize(vertices_.size());
  // With no edges yet the whole domain is independent.
  in_mis_.assign(vertices_.size(), 1);
  mis_neighbors_.assign(vertices_.size(), 0);
  mis_size_ = vertices_.size();
  additions_ = vertices_.size();
}

std::size_t DynamicMis::slot(VertexId v) const {
  if (v >= slot_of_.size() || slot_of_[v] < 0)
    fail(Errc::unknown_vertex,
         "vertex " + std::to_string(v) + " outside MIS domain");
  return static_cast<std::size_t>(slot_of_[v]);
}

bool DynamicMis::tracks(VertexId v) const {
  return v < slot_of_.size() && slot_of_[v] >= 0;
}

bool DynamicMis::contains(VertexId v) const { return in_mis_[slot(v)]; }

void DynamicMis::insert_edge(VertexId u, VertexId v) {
  const std::size_t su = slot(u), sv = slot(v);
  if (u == v) fail(Errc::self_loop, "self loop in MIS domain");
  if (std::find(adj_[su].begin(), adj_[su].end(), v) != adj_[su].end()) return;
  adj_[su].push_back(v);
  adj_[sv].push_back(u);
  if (in_mis_[su]) ++mis_neighbors_[sv];
  if (in_mis_[sv]) ++mis_neighbors_[su];
  if (!(in_mis_[su] && in_mis_[sv])) return;

  // Conflict: the higher id leaves, then any neighbor left without an MIS
  // neighbor re-enters in ascending order (each admission re-checked, since
  // an earlier admission may cover a later candidate).
  const VertexId evicted = std::max(u, v);
  const std::size_t se = slot(evicted);
  in_mis_[se] = 0;
  --mis_size_;
  std::vector<VertexId> candidates;
  for (VertexId x : adj_[se]) {
    const std::size_t sx = slot(x);
    --mis_neighbors_[sx];
    if (!in_mis_[sx] && mis_neighbors_[sx] == 0) candidates.push_back(x);
  }
  std::sort(candidates.begin(), candidates.end());
  for (VertexId x : candidates) {
    const std::size_t sx = slot(x);
    if (in_mis_[sx] || mis_neighbors_[sx] != 0) continue;
    in_mis_[sx] = 1;
    ++mis_size_;
    ++additions_;
    for (VertexId y : adj_[sx]) ++mis_neighbors_[slot(y)];
  }
}

std::vector<VertexId> DynamicMis::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (in_mis_[i]) out.push_back(vertices_[i]);
  return out;
}

VertexId DynamicMis::covering_member(VertexId v) const {
  const std::size_t sv = slot(v);
  if (in_mis_[sv]) return v;
  VertexId best = kNoVertex;
  for (VertexId y : adj_[sv])
    if (in_mis_[slot(y)]) best = std::min(best, y);
  if (best == kNoVertex)
    fail(Errc::bad_argument,
         "vertex " + std::to_string(v) + " has no MIS neighbor");
  return best;
}

const std::vector<VertexId>& DynamicMis::neighbors(VertexId v) const {
  return adj_[slot(v)];
}

IncrementalRulingSet::IncrementalRulingSet(std::size_t n, Config cfg)
    : n_(n), cfg_(cfg), rng_(cfg.seed), adj_(n) {
  if (n == 0) fail(Errc::bad_argument, "need at least one vertex");
  if (cfg.k < 1) fail(Errc::bad_argument, "k must be >= 1");
  survivors_.resize(n);
  for (VertexId v = 0; v < n; ++v) survivors_[v] = v;
  is_survivor_.assign(n, 1);
  in_sampled_.assign(n, 0);
  prev_pool_size_ = n;
  drive();
}

bool IncrementalRulingSet::overflow() const {
  return paused_ || (second_phase_ && mis_.overflow());
}

std::vector<VertexId> IncrementalRulingSet::ruling_set() const {
  if (!second_phase_)
    fail(Errc::bad_argument, "ruling set queried before the second phase");
  return mis_.members();
}

void IncrementalRulingSet::remove_survivor(VertexId v) {
  is_survivor_[v] = 0;
  survivors_.erase(std::find(survivors_.begin(), survivors_.end(), v));
}

void IncrementalRulingSet::insert_edge(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_) fail(Errc::unknown_vertex, "edge endpoint out of range");
  if (u == v) fail(Errc::self_loop, "self loop");
  if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  if (second_phase_) {
    if (in_dominating_[u] && in_dominating_[v]) mis_.insert_edge(u, v);
    return;
  }
  // A survivor touching any sampled vertex is now dominated and drops out.
  if (is_survivor_[u] && in_sampled_[v]) remove_survivor(u);
  if (is_survivor_[v] && in_sampled_[u]) remove_survivor(v);
  drive();
}

// Runs the recursion to its resting point: either the pool is small enough
// to finish (second phase) or it failed to halve and the state pauses with
// an overflow report.
void IncrementalRulingSet::drive() {
  const std::size_t finish_at = 4 * static_cast<std::size_t>(cfg_.k);
  for (;;) {
    if (survivors_.size() <= finish_at) {
      enter_second_phase();
      return;
    }
    // Exact halving test; no rounding involved.
    if (depth_ == 0 || 2 * survivors_.size() <= prev_pool_size_) {
      advance_call();
    } else {
      paused_ = true;
      ++overflow_reports_;
      return;
    }
  }
}

void IncrementalRulingSet::advance_call() {
  ++depth_;
  paused_ = false;
  prev_pool_size_ = survivors_.size();
  const double gamma =
      static_cast<double>(prev_pool_size_) / (2.0 * cfg_.k) - 1.0;
  double p = 1.0;
  if (gamma > 0.0)
    p = std::min(1.0, cfg_.sampling_c * std::log(static_cast<double>(n_)) / gamma);

  std::vector<VertexId> sample;
  for (VertexId x : survivors_)
    if (rng_unit(rng_) < p) sample.push_back(x);
  // An all-miss draw (probability ~ n^-2kc) would stall the recursion with an
  // empty hitting set; force one pick so progress is unconditional.
  if (sample.empty()) sample.push_back(survivors_.front());
  for (VertexId x : sample) {
    in_sampled_[x] = 1;
    sampled_union_.push_back(x);
  }
  sampled_sets_.push_back(std::move(sample));

  std::vector<VertexId> next;
  for (VertexId x : survivors_) {
    if (in_sampled_[x]) {
      is_survivor_[x] = 0;
      continue;
    }
    bool dominated = false;
    for (VertexId y : adj_[x])
      if (in_sampled_[y]) {
        dominated = true;
        break;
      }
    if (dominated)
      is_survivor_[x] = 0;
    else
      next.push_back(x);
  }
  survivors_ = std::move(next);
}

void IncrementalRulingSet::enter_second_phase() {
  second_phase_ = true;
  paused_ = false;
  dominating_ = sampled_union_;
  dominating_.insert(dominating_.end(), survivors_.begin(), survivors_.end());
  std::sort(dominating_.begin(), dominating_.end());
  in_dominating_.assign(n_, 0);
  for (VertexId x : dominating_) in_dominating_[x] = 1;
  mis_ = DynamicMis(dominating_, cfg_.k);
  for (VertexId u : dominating_)
    for (VertexId y : adj_[u])
      if (y > u && in_dominating_[y]) mis_.insert_edge(u, y);
}

}  // namespace kcenter
