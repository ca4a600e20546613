#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "kcenter/graph.hpp"
#include "kcenter/oracle.hpp"
#include "kcenter/trace.hpp"
#include "test_util.hpp"

using namespace kcenter;
using testutil::thrown_code;

TEST_CASE("single insert stores the edge and its distance") {
  DynamicGraph g(3, 5.0);
  g.insert_edge(0, 1, 2.0);
  CHECK(g.m() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.edge_weight(0, 1) == 2.0);
  CHECK(apsp(g)[0][1] == 2.0);
}

TEST_CASE("insert validation") {
  DynamicGraph g(3, 5.0);
  g.insert_edge(0, 1, 2.0);
  CHECK(thrown_code([&] { g.insert_edge(0, 1, 3.0); }) == Errc::duplicate_edge);
  CHECK(thrown_code([&] { g.insert_edge(1, 0, 3.0); }) == Errc::duplicate_edge);
  CHECK(thrown_code([&] { g.insert_edge(0, 0, 1.0); }) == Errc::self_loop);
  CHECK(thrown_code([&] { g.insert_edge(1, 2, 0.5); }) ==
        Errc::weight_out_of_range);
  CHECK(thrown_code([&] { g.insert_edge(1, 2, 6.0); }) ==
        Errc::weight_out_of_range);
  CHECK(thrown_code([&] { g.insert_edge(1, 3, 1.0); }) == Errc::unknown_vertex);
  CHECK(g.m() == 1);
}

TEST_CASE("deleting a path edge isolates the endpoint") {
  auto g = testutil::unit_path(3);
  g.delete_edge(0, 1);
  CHECK(g.m() == 1);
  auto d = apsp(g);
  CHECK(d[0][2] == kInf);
  CHECK(d[0][1] == kInf);
  CHECK(d[1][2] == 1.0);
}

TEST_CASE("deleting a triangle edge leaves the two-hop detour") {
  auto g = testutil::make_graph(3, 1.0, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  g.delete_edge(0, 2);
  CHECK(apsp(g)[0][2] == 2.0);
}

TEST_CASE("deleting an absent edge fails") {
  DynamicGraph g(3, 1.0);
  CHECK(thrown_code([&] { g.delete_edge(0, 1); }) == Errc::missing_edge);
  g.insert_edge(0, 1, 1.0);
  g.delete_edge(1, 0);  // either orientation works
  CHECK(g.m() == 0);
  CHECK(thrown_code([&] { g.delete_edge(0, 1); }) == Errc::missing_edge);
}

TEST_CASE("distance bound is n times the weight cap") {
  CHECK(DynamicGraph(4, 3.0).distance_bound() == 12.0);
  CHECK(DynamicGraph(1, 1.0).distance_bound() == 1.0);
  CHECK(DynamicGraph(10, 10.0).distance_bound() == 100.0);
}

TEST_CASE("adjacency is symmetric and m counts undirected edges") {
  auto g = testutil::random_graph(20, 0.4, 6.0, 42);
  std::size_t half_degrees = 0;
  for (VertexId u = 0; u < 20; ++u) {
    for (const HalfEdge& h : g.neighbors(u)) {
      CHECK(g.has_edge(h.to, u));
      CHECK(g.edge_weight(h.to, u) == h.weight);
      ++half_degrees;
    }
  }
  CHECK(half_degrees == 2 * g.m());
}

TEST_CASE("replaying the update log reproduces the graph") {
  std::mt19937_64 rng(7);
  DynamicGraph g(12, 4.0);
  auto pairs = testutil::shuffled_pairs(12, rng);
  // interleave inserts and deletes
  for (std::size_t round = 0; round < 3; ++round) {
    for (std::size_t i = 0; i < 30; ++i) {
      const auto [u, v] = pairs[rng_below(rng, pairs.size())];
      if (g.has_edge(u, v))
        g.delete_edge(u, v);
      else
        g.insert_edge(u, v, 1.0 + static_cast<double>(rng_below(rng, 4)));
    }
  }
  DynamicGraph h = DynamicGraph::replay(12, 4.0, g.log());
  CHECK(h.m() == g.m());
  CHECK(h.epoch() == g.epoch());
  for (VertexId u = 0; u < 12; ++u)
    for (const HalfEdge& e : g.neighbors(u)) {
      CHECK(h.has_edge(u, e.to));
      CHECK(h.edge_weight(u, e.to) == e.weight);
    }
}

TEST_CASE("epochs count updates monotonically") {
  DynamicGraph g(4, 2.0);
  CHECK(g.epoch() == 0);
  g.insert_edge(0, 1, 1.0);
  CHECK(g.epoch() == 1);
  g.insert_edge(1, 2, 1.0);
  g.delete_edge(0, 1);
  CHECK(g.epoch() == 3);
  CHECK(g.log().size() == 3);
  CHECK(g.log()[2].kind == UpdateEvent::Kind::erase);
}

TEST_CASE("trace parsing handles directives comments and all event kinds") {
  std::istringstream in(
      "# n 6\n"
      "# free-form comment\n"
      "I 0 1 2.5\n"
      "Q\n"
      "D 0 1\n"
      "\n"
      "I 2 3 1\n");
  Trace t = parse_trace(in);
  CHECK(t.n == 6);
  REQUIRE(t.events.size() == 4);
  CHECK(t.events[0].kind == UpdateEvent::Kind::insert);
  CHECK(t.events[0].w == 2.5);
  CHECK(t.events[0].epoch == 1);
  CHECK(t.events[1].kind == UpdateEvent::Kind::query);
  CHECK(t.events[1].epoch == 1);  // queries ride the current epoch
  CHECK(t.events[2].kind == UpdateEvent::Kind::erase);
  CHECK(t.events[2].epoch == 2);
  CHECK(t.events[3].epoch == 3);
}

TEST_CASE("trace n defaults to one past the largest vertex id") {
  std::istringstream in("I 0 9 1\nQ\n");
  CHECK(parse_trace(in).n == 10);
}

TEST_CASE("malformed trace lines fail with their line number") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_trace(in);
  };
  for (const char* bad :
       {"I 0 1\n", "I 0 1 2 3\n", "D 0\n", "Q 1\n", "X 0 1\n", "I a b 1\n"}) {
    try {
      parse(std::string("I 0 1 1\n") + bad);
      FAIL_CHECK("expected parse error for: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
}

TEST_CASE("trace save and load round-trips") {
  Trace t;
  t.n = 5;
  t.events = {{UpdateEvent::Kind::insert, 0, 4, 2.0, 1},
              {UpdateEvent::Kind::query, 0, 0, 0.0, 1},
              {UpdateEvent::Kind::erase, 0, 4, 0.0, 2}};
  const std::string path = "trace_roundtrip.tmp";
  save_trace(t, path, "round trip fixture");
  Trace u = load_trace(path);
  CHECK(u.n == t.n);
  REQUIRE(u.events.size() == t.events.size());
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    CHECK(u.events[i].kind == t.events[i].kind);
    CHECK(u.events[i].u == t.events[i].u);
    CHECK(u.events[i].v == t.events[i].v);
    CHECK(u.events[i].w == t.events[i].w);
    CHECK(u.events[i].epoch == t.events[i].epoch);
  }
}
