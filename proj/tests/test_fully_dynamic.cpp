#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kcenter/fully_dynamic.hpp"
#include "kcenter/oracle.hpp"
#include "test_util.hpp"

using namespace kcenter;

TEST_CASE("greedy farthest-point picks the antipode on a cycle") {
  auto g = testutil::unit_cycle(4);
  auto run = gonzalez_static(g, 2);
  CHECK(run.centers == std::vector<VertexId>{0, 2});
  CHECK(run.radius == 1.0);
  CHECK(run.radius == exact_kcenter(g, 2).radius);
}

TEST_CASE("k covering everything drives the radius to zero") {
  auto g = testutil::random_graph(9, 0.4, 3.0, 5);
  auto run = gonzalez_static(g, 9);
  CHECK(run.radius == 0.0);
}

TEST_CASE("greedy respects the factor-two bound on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = testutil::random_graph(20, 0.3, 6.0, seed);
    for (int k = 1; k <= 3; ++k) {
      auto run = gonzalez_static(g, k);
      auto exact = exact_kcenter(g, k);
      if (exact.radius == kInf) {
        CHECK(run.radius == kInf);
        continue;
      }
      CHECK(run.radius <= 2.0 * exact.radius);
      CHECK(run.radius == coverage_radius(g, run.centers));
      CHECK(run.radius >= exact.radius);
    }
  }
}

TEST_CASE("update replay on the unit path") {
  DynamicGraph g(4, 1.0);
  FullyDynamicKCenter alg(g, 2, 0.25);
  for (VertexId v = 0; v + 1 < 4; ++v) {
    g.insert_edge(v, v + 1, 1.0);
    alg.apply_update({UpdateEvent::Kind::insert, v, v + 1, 1.0, 0});
  }
  auto sol = alg.query();
  REQUIRE(sol.feasible);
  // farthest vertex from 0 is 3 (unique argmax), then everything is within 1
  CHECK(sol.centers == std::vector<VertexId>{0, 3});
  CHECK(sol.radius_bound == 1.0);
  CHECK(alg.assign(1) == 0);
  CHECK(alg.assign(2) == 3);
}

TEST_CASE("a split graph keeps one center per side") {
  auto g = testutil::unit_path(4);
  FullyDynamicKCenter alg(g, 2, 0.25);
  alg.refresh();
  g.delete_edge(1, 2);
  alg.apply_update({UpdateEvent::Kind::erase, 1, 2, 0.0, 0});
  auto sol = alg.query();
  REQUIRE(sol.feasible);
  CHECK(sol.radius_bound == 1.0);
  bool left = false, right = false;
  for (VertexId c : sol.centers) {
    left |= c <= 1;
    right |= c >= 2;
  }
  CHECK(left);
  CHECK(right);
}

TEST_CASE("too many components reports infinity") {
  DynamicGraph g(6, 1.0);
  g.insert_edge(0, 1, 1.0);
  g.insert_edge(2, 3, 1.0);
  g.insert_edge(4, 5, 1.0);
  FullyDynamicKCenter alg(g, 2, 0.25);
  alg.refresh();
  auto sol = alg.query();
  CHECK(!sol.feasible);
  CHECK(sol.radius_bound == kInf);
}

TEST_CASE("query events do not touch the structure") {
  auto g = testutil::unit_path(4);
  FullyDynamicKCenter alg(g, 2, 0.25);
  alg.refresh();
  const auto scans = alg.argmax_scans();
  const auto updates = alg.graph_updates();
  alg.apply_update({UpdateEvent::Kind::query, 0, 0, 0.0, 0});
  CHECK(alg.argmax_scans() == scans);
  CHECK(alg.graph_updates() == updates);
}

TEST_CASE("per-update accounting matches the 2k+1 recipe") {
  DynamicGraph g(10, 4.0);
  FullyDynamicKCenter alg(g, 3, 0.25);
  const auto scans0 = alg.argmax_scans();
  const auto ins0 = alg.super_inserts();
  const auto del0 = alg.super_deletes();
  g.insert_edge(0, 1, 2.0);
  alg.apply_update({UpdateEvent::Kind::insert, 0, 1, 2.0, 0});
  CHECK(alg.argmax_scans() == scans0 + 3);   // k picks
  CHECK(alg.super_inserts() == ins0 + 3);    // one virtual link per pick
  CHECK(alg.super_deletes() == del0 + 3);    // all links removed at the end
  CHECK(alg.graph_updates() == 1);
}

TEST_CASE("unit link weight shifts the estimate but not the picks") {
  auto g = testutil::unit_cycle(8);
  FullyDynamicKCenter zero(g, 2, 0.25, 0.0);
  FullyDynamicKCenter one(g, 2, 0.25, 1.0);
  zero.refresh();
  one.refresh();
  auto a = zero.query();
  auto b = one.query();
  CHECK(a.centers == b.centers);  // a uniform offset never changes an argmax
  CHECK(b.radius_bound == a.radius_bound + 1.0);
  CHECK(a.radius_bound == coverage_radius(g, a.centers));
}

TEST_CASE("mixed updates stay within twice the optimum") {
  std::mt19937_64 rng(17);
  const std::size_t n = 18;
  DynamicGraph g(n, 5.0);
  FullyDynamicKCenter alg(g, 3, 0.25);
  auto pairs = testutil::shuffled_pairs(n, rng);
  for (int step = 0; step < 120; ++step) {
    const auto [u, v] = pairs[rng_below(rng, pairs.size())];
    if (g.has_edge(u, v)) {
      g.delete_edge(u, v);
      alg.apply_update({UpdateEvent::Kind::erase, u, v, 0.0, 0});
    } else {
      const double w = 1.0 + static_cast<double>(rng_below(rng, 5));
      g.insert_edge(u, v, w);
      alg.apply_update({UpdateEvent::Kind::insert, u, v, w, 0});
    }
    auto sol = alg.query();
    auto exact = exact_kcenter(g, 3);
    if (exact.radius == kInf) {
      CHECK(!sol.feasible);
      continue;
    }
    REQUIRE(sol.feasible);
    CHECK(coverage_radius(g, sol.centers) <= 2.0 * exact.radius);
  }
}
