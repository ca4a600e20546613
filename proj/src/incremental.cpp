#include "kcenter/incremental.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "kcenter/prng.hpp"

namespace kcenter {

RadiusLevel::RadiusLevel(const DynamicGraph& g, int k, double radius,
                         double eps1, std::uint64_t seed, double sampling_c)
    : g_(&g), k_(k), radius_(radius), watch_((1.0 + eps1) * radius),
      eps1_(eps1), sampling_c_(sampling_c), rng_(seed) {
  const std::size_t n = g.n();
  survivors_.resize(n);
  for (VertexId v = 0; v < n; ++v) survivors_[v] = v;
  is_survivor_.assign(n, 1);
  in_sampled_.assign(n, 0);
  prev_pool_size_ = n;
  dominator_.assign(n, kNoVertex);
  drive();
}

VertexId RadiusLevel::dominator(VertexId v) const {
  const bool self = second_phase_
                        ? static_cast<bool>(in_dominating_[v])
                        : (in_sampled_[v] || is_survivor_[v]);
  return self ? v : dominator_[v];
}

void RadiusLevel::on_insert(VertexId u, VertexId v, double w) {
  if (second_phase_) {
    for (SsspEngine& eng : member_engines_) eng.apply_insert(u, v, w);
    for (std::size_t i = 0; i < member_engines_.size(); ++i)
      for (VertexId x : member_engines_[i].drain_crossed())
        if (in_dominating_[x]) absorb_proximity(dominating_[i], x);
    return;
  }
  if (supersource_) {
    supersource_->apply_insert(u, v, w);
    drain_supersource();
  }
  drive();
}

void RadiusLevel::drain_supersource() {
  for (VertexId x : supersource_->drain_crossed())
    if (is_survivor_[x]) {
      is_survivor_[x] = 0;
      dominator_[x] = supersource_->witness(x);
      survivors_.erase(std::find(survivors_.begin(), survivors_.end(), x));
    }
}

void RadiusLevel::drive() {
  const std::size_t finish_at = 4 * static_cast<std::size_t>(k_);
  for (;;) {
    if (survivors_.size() <= finish_at) {
      enter_second_phase();
      return;
    }
    if (depth_ == 0 || 2 * survivors_.size() <= prev_pool_size_) {
      advance_call();
    } else {
      paused_ = true;
      ++overflow_reports_;
      return;
    }
  }
}

void RadiusLevel::advance_call() {
  ++depth_;
  paused_ = false;
  prev_pool_size_ = survivors_.size();
  const double gamma =
      static_cast<double>(prev_pool_size_) / (2.0 * k_) - 1.0;
  double p = 1.0;
  if (gamma > 0.0)
    p = std::min(1.0, sampling_c_ * std::log(static_cast<double>(g_->n())) /
                          gamma);
  std::vector<VertexId> sample;
  for (VertexId x : survivors_)
    if (rng_unit(rng_) < p) sample.push_back(x);
  // An empty draw (probability ~ n^-20 at our sampling rate) would leave the
  // recursion with nothing to make progress on; seed it with one survivor.
  if (sample.empty()) sample.push_back(survivors_.front());

  for (VertexId x : sample) {
    in_sampled_[x] = 1;
    sampled_union_.push_back(x);
  }
  std::vector<VertexId> keep;
  for (VertexId x : survivors_) {
    if (in_sampled_[x])
      is_survivor_[x] = 0;
    else
      keep.push_back(x);
  }
  survivors_ = std::move(keep);

  reopen_supersource();
  // Vertices already inside the watch radius of the grown source set drop
  // out of the pool immediately, with their covering witness recorded.
  keep.clear();
  for (VertexId x : survivors_) {
    if (supersource_->estimate(x) <= watch_) {
      is_survivor_[x] = 0;
      dominator_[x] = supersource_->witness(x);
    } else {
      keep.push_back(x);
    }
  }
  survivors_ = std::move(keep);
}

void RadiusLevel::reopen_supersource() {
  supersource_.emplace(SsspEngine::Mode::incremental, *g_,
                       super_source(sampled_union_, 0.0), eps1_, watch_);
  ++engine_opens_;
  ++supersource_restarts_;
}

void RadiusLevel::enter_second_phase() {
  second_phase_ = true;
  paused_ = false;
  supersource_.reset();

  dominating_ = sampled_union_;
  dominating_.insert(dominating_.end(), survivors_.begin(), survivors_.end());
  std::sort(dominating_.begin(), dominating_.end());
  in_dominating_.assign(g_->n(), 0);
  dominating_slot_.assign(g_->n(), -1);
  for (std::size_t i = 0; i < dominating_.size(); ++i) {
    in_dominating_[dominating_[i]] = 1;
    dominating_slot_[dominating_[i]] = static_cast<std::int32_t>(i);
  }

  member_engines_.clear();
  member_engines_.reserve(dominating_.size());
  for (VertexId s : dominating_) {
    member_engines_.emplace_back(SsspEngine::Mode::incremental, *g_,
                                 single_source(s), eps1_, watch_);
    ++engine_opens_;
  }

  mis_ = DynamicMis(dominating_, k_);
  proximity_edges_.clear();
  for (std::size_t i = 0; i < dominating_.size(); ++i)
    for (std::size_t j = i + 1; j < dominating_.size(); ++j) {
      const VertexId a = dominating_[i], b = dominating_[j];
      if (member_engines_[i].estimate(b) <= watch_ ||
          member_engines_[j].estimate(a) <= watch_) {
        proximity_edges_.push_back({a, b});
        mis_.insert_edge(a, b);
      }
    }
}

void RadiusLevel::absorb_proximity(VertexId a, VertexId b) {
  if (a == b) return;
  const std::pair<VertexId, VertexId> e{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(proximity_edges_.begin(), proximity_edges_.end(), e);
  if (it != proximity_edges_.end() && *it == e) return;
  proximity_edges_.insert(it, e);
  mis_.insert_edge(e.first, e.second);
}

IncrementalKCenter::IncrementalKCenter(const DynamicGraph& g, int k, double eps,
                                       std::uint64_t seed)
    : g_(&g), k_(k), eps_(eps), eps1_(eps / 12.0) {
  if (k < 1) fail(Errc::bad_argument, "k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) fail(Errc::bad_argument, "eps must be in (0,1)");
  const std::vector<double> radii = grid_radii(g.distance_bound(), eps1_);
  levels_.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i)
    levels_.emplace_back(g, k, radii[i], eps1_, derive_seed(seed, i));
}

std::vector<double> IncrementalKCenter::grid_radii(double distance_bound,
                                                   double eps1) {
  if (!(eps1 > 0.0)) fail(Errc::bad_argument, "eps1 must be > 0");
  std::vector<double> out;
  // Tolerate accumulated rounding at the top boundary.
  const double cap = distance_bound * (1.0 + 1e-12);
  for (double r = 1.0; r <= cap; r *= 1.0 + eps1) out.push_back(r);
  if (out.empty()) out.push_back(1.0);
  return out;
}

void IncrementalKCenter::set_threads(int threads) {
  if (threads < 1) fail(Errc::bad_argument, "threads must be >= 1");
  threads_ = threads;
}

void IncrementalKCenter::on_insert(VertexId u, VertexId v, double w) {
  if (threads_ <= 1 || levels_.size() < 2) {
    for (RadiusLevel& level : levels_) level.on_insert(u, v, w);
    return;
  }
  // Levels are independent; identical results in any interleaving.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < levels_.size();)
      levels_[i].on_insert(u, v, w);
  };
  std::vector<std::thread> pool;
  const int spawn = std::min<int>(threads_ - 1,
                                  static_cast<int>(levels_.size()) - 1);
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
}

Solution IncrementalKCenter::query() {
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].answers()) {
      last_answer_ = static_cast<int>(i);
      Solution s;
      s.feasible = true;
      s.centers = levels_[i].mis().members();
      s.radius_bound = 2.0 * levels_[i].watch_radius();
      s.level = last_answer_;
      return s;
    }
  last_answer_ = -1;
  return {};
}

VertexId IncrementalKCenter::assign(VertexId v) const {
  if (last_answer_ < 0)
    fail(Errc::infeasible, "assignment requires a feasible query");
  if (v >= g_->n()) fail(Errc::unknown_vertex, "vertex out of range");
  const RadiusLevel& level = levels_[last_answer_];
  const VertexId dom = level.dominator(v);
  if (dom == kNoVertex)
    fail(Errc::bad_argument, "vertex lacks a covering record");
  return level.mis().covering_member(dom);
}

std::uint64_t IncrementalKCenter::engine_opens() const {
  std::uint64_t total = 0;
  for (const RadiusLevel& level : levels_) total += level.engine_opens();
  return total;
}

std::uint64_t IncrementalKCenter::total_mis_additions() const {
  std::uint64_t total = 0;
  for (const RadiusLevel& level : levels_)
    if (level.second_phase()) total += level.mis().additions();
  return total;
}

}  // namespace kcenter
