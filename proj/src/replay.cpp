#include "kcenter/replay.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "kcenter/decremental.hpp"
#include "kcenter/fully_dynamic.hpp"
#include "kcenter/incremental.hpp"
#include "kcenter/metrics.hpp"
#include "kcenter/oracle.hpp"
#include "kcenter/prng.hpp"

namespace kcenter {

std::string mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::incr: return "incr";
    case RunMode::decr: return "decr";
    case RunMode::full: return "full";
  }
  return "?";
}

RunMode parse_mode(const std::string& name) {
  if (name == "incr") return RunMode::incr;
  if (name == "decr") return RunMode::decr;
  if (name == "full") return RunMode::full;
  fail(Errc::bad_argument, "unknown mode '" + name + "'");
}

namespace {

double trace_wmax(const Trace& trace) {
  double w = 1.0;
  for (const UpdateEvent& e : trace.events)
    if (e.kind == UpdateEvent::Kind::insert) w = std::max(w, e.w);
  return w;
}

double bound_factor(RunMode mode, double eps) {
  switch (mode) {
    case RunMode::incr: return 4.0 + eps;
    case RunMode::decr: return 2.0 + eps;
    case RunMode::full: return 2.0 * (1.0 + eps);
  }
  return 0.0;
}

// Slack for comparing exact doubles produced by different summation orders.
constexpr double kRelTol = 1e-9;

}  // namespace

RunReport replay_trace(const Trace& trace, const RunOptions& opt) {
  if (opt.k < 1) fail(Errc::bad_argument, "k must be >= 1");
  const std::size_t n = opt.n_override.value_or(trace.n);
  const double wmax = opt.wmax > 0.0 ? opt.wmax : trace_wmax(trace);
  DynamicGraph g(n, wmax);

  const std::uint64_t algo_seed = derive_seed(opt.seed, kAlgoStream);
  std::optional<IncrementalKCenter> inc;
  std::optional<DecrementalKCenter> dec;
  std::optional<FullyDynamicKCenter> full;
  if (opt.mode == RunMode::incr) {
    inc.emplace(g, opt.k, opt.eps, algo_seed);
    inc->set_threads(opt.threads);
  } else if (opt.mode == RunMode::full) {
    full.emplace(g, opt.k, opt.eps, opt.super_link_weight);
  }
  // decr opens once the insertion prefix that builds the start graph ends.
  bool decr_prefix = opt.mode == RunMode::decr;
  auto end_decr_prefix = [&] {
    if (decr_prefix) {
      dec.emplace(g, opt.k, opt.eps);
      decr_prefix = false;
    }
  };

  std::ostringstream csv;
  csv << metrics_header() << '\n';
  RunReport report;
  auto mark = std::chrono::steady_clock::now();

  std::size_t ordinal = 0;
  for (const UpdateEvent& e : trace.events) {
    ++ordinal;
    const std::string at = " at event #" + std::to_string(ordinal);
    switch (e.kind) {
      case UpdateEvent::Kind::insert:
        if (opt.mode == RunMode::decr && !decr_prefix)
          fail(Errc::mode_mismatch, "insertion after start" + at);
        g.insert_edge(e.u, e.v, e.w);
        if (inc) inc->on_insert(e.u, e.v, e.w);
        if (full) full->apply_update(e);
        break;
      case UpdateEvent::Kind::erase:
        if (opt.mode == RunMode::incr)
          fail(Errc::mode_mismatch, "deletion in incr mode" + at);
        end_decr_prefix();
        g.delete_edge(e.u, e.v);
        if (dec) dec->on_delete(e.u, e.v);
        if (full) full->apply_update(e);
        break;
      case UpdateEvent::Kind::query: {
        end_decr_prefix();
        Solution s;
        MetricsRow row;
        if (inc) {
          s = inc->query();
          row.recourse_total = inc->total_mis_additions();
          row.sssp_restarts_total = inc->engine_opens();
        } else if (dec) {
          s = dec->query();
          row.recourse_total = dec->additions();
          row.sssp_restarts_total = dec->restarts();
        } else {
          s = full->query();
          row.recourse_total = full->super_inserts();
          row.sssp_restarts_total = full->argmax_scans();
        }
        row.epoch = g.epoch();
        row.mode = mode_name(opt.mode);
        row.k = opt.k;
        row.eps = opt.eps;
        row.radius_bound = s.radius_bound;
        row.centers = s.centers;
        row.level_answered = s.level;
        if (opt.oracle) {
          const ExactKCenter ex = exact_kcenter(g, opt.k);
          const double measured =
              s.centers.empty() ? kInf : coverage_radius(g, s.centers);
          row.oracle_r_star = ex.radius;
          double ratio;
          if (std::isinf(ex.radius))
            ratio = std::isinf(measured) ? 1.0 : 0.0;
          else if (ex.radius == 0.0)
            ratio = measured == 0.0 ? 1.0 : kInf;
          else
            ratio = measured / ex.radius;
          row.approx_ratio = ratio;

          bool violated = false;
          const double factor = bound_factor(opt.mode, opt.eps);
          if (s.feasible &&
              !(measured <= factor * ex.radius * (1.0 + kRelTol)))
            violated = true;
          if (opt.mode != RunMode::incr) {
            // These modes must report infeasible exactly when more than k
            // components exist. (incr may legitimately lag on pathological
            // sparse geometries; its bound is only claimed at feasible
            // queries.)
            const bool split = component_count(g) > static_cast<std::size_t>(opt.k);
            if (s.feasible == split) violated = true;
          }
          if (violated) ++report.violations;
        }
        if (opt.timing) {
          const auto now = std::chrono::steady_clock::now();
          row.wall_time_us = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::microseconds>(now - mark)
                  .count());
          mark = now;
        }
        ++report.queries;
        csv << metrics_row(row) << '\n';
        break;
      }
    }
  }
  report.csv = csv.str();
  return report;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> shuffled_pairs(std::size_t n,
                                                          std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng_below(rng, i)]);
  return pairs;
}

}  // namespace

Trace generate_trace(const GenOptions& opt) {
  if (opt.n < 1) fail(Errc::bad_argument, "n must be >= 1");
  if (!(opt.density >= 0.0 && opt.density <= 1.0))
    fail(Errc::bad_argument, "density must be in [0,1]");
  if (!(opt.wmax >= 1.0)) fail(Errc::bad_argument, "wmax must be >= 1");
  if (opt.k_hint < 1) fail(Errc::bad_argument, "k_hint must be >= 1");
  if (opt.query_every < 1) fail(Errc::bad_argument, "query_every must be >= 1");

  std::mt19937_64 rng(derive_seed(opt.seed, kTraceStream));
  auto pairs = shuffled_pairs(opt.n, rng);
  const std::size_t target = static_cast<std::size_t>(
      std::llround(opt.density * static_cast<double>(pairs.size())));
  const std::uint64_t weight_span =
      static_cast<std::uint64_t>(std::floor(opt.wmax));
  auto draw_weight = [&] {
    return 1.0 + static_cast<double>(rng_below(rng, weight_span));
  };

  Trace t;
  t.n = opt.n;
  std::uint64_t epoch = 0;
  std::size_t since_query = 0;
  auto push_update = [&](UpdateEvent e) {
    e.epoch = ++epoch;
    t.events.push_back(e);
    if (++since_query >= opt.query_every) {
      t.events.push_back({UpdateEvent::Kind::query, 0, 0, 0.0, epoch});
      since_query = 0;
    }
  };
  auto final_query = [&] {
    if (t.events.empty() || t.events.back().kind != UpdateEvent::Kind::query)
      t.events.push_back({UpdateEvent::Kind::query, 0, 0, 0.0, epoch});
  };

  switch (opt.mode) {
    case RunMode::incr: {
      for (std::size_t i = 0; i < target; ++i)
        push_update({UpdateEvent::Kind::insert, pairs[i].first,
                     pairs[i].second, draw_weight(), 0});
      final_query();
      break;
    }
    case RunMode::decr: {
      // Build prefix (no queries: the engine opens on the finished graph),
      // then delete everything in a fresh random order.
      std::vector<std::pair<VertexId, VertexId>> built(pairs.begin(),
                                                       pairs.begin() + target);
      for (const auto& [u, v] : built)
        t.events.push_back({UpdateEvent::Kind::insert, u, v, draw_weight(),
                            ++epoch});
      for (std::size_t i = built.size(); i > 1; --i)
        std::swap(built[i - 1], built[rng_below(rng, i)]);
      for (const auto& [u, v] : built)
        push_update({UpdateEvent::Kind::erase, u, v, 0.0, 0});
      final_query();
      break;
    }
    case RunMode::full: {
      std::set<std::pair<VertexId, VertexId>> present;
      std::vector<std::pair<VertexId, VertexId>> present_vec;
      for (std::size_t step = 0; step < opt.ops; ++step) {
        bool do_insert;
        if (present.empty())
          do_insert = true;
        else if (present.size() >= pairs.size())
          do_insert = false;
        else
          do_insert = rng_unit(rng) < (present.size() < target ? 0.7 : 0.3);
        if (do_insert) {
          std::size_t idx = rng_below(rng, pairs.size());
          while (present.count(pairs[idx]))
            idx = (idx + 1) % pairs.size();  // deterministic probe
          present.insert(pairs[idx]);
          present_vec.push_back(pairs[idx]);
          push_update({UpdateEvent::Kind::insert, pairs[idx].first,
                       pairs[idx].second, draw_weight(), 0});
        } else {
          const std::size_t idx = rng_below(rng, present_vec.size());
          const auto pr = present_vec[idx];
          present_vec[idx] = present_vec.back();
          present_vec.pop_back();
          present.erase(pr);
          push_update({UpdateEvent::Kind::erase, pr.first, pr.second, 0.0, 0});
        }
      }
      final_query();
      break;
    }
  }
  return t;
}

}  // namespace kcenter
