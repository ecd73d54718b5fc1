#include "doctest.h"
#include "generators.hpp"

using namespace resil;
using testutil::make_graph;

namespace {

int face_double_cover(const RotationSystem& rs) {
  int total = 0;
  for (const auto& walk : rs.faces) total += static_cast<int>(walk.size());
  return total;
}

}  // namespace

TEST_CASE("planarity embed basics") {
  SUBCASE("K5 is non-planar") {
    std::vector<Link> ls;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) ls.emplace_back(i, j);
    CHECK(!planarity_embed(RootedGraph::make(0, ls)));
  }
  SUBCASE("K33 is non-planar") {
    std::vector<Link> ls;
    for (int i : {0, 1, 2})
      for (int j : {3, 4, 5}) ls.emplace_back(i, j);
    CHECK(!planarity_embed(RootedGraph::make(0, ls)));
  }
  SUBCASE("triangle has two faces") {
    auto rs = planarity_embed(make_graph(0, {{0, 1}, {1, 2}, {2, 0}}));
    REQUIRE(rs);
    CHECK(rs->faces.size() == 2);
    CHECK(face_double_cover(*rs) == 6);
  }
  SUBCASE("single node and single link") {
    auto one = planarity_embed(RootedGraph::make(0, {}));
    REQUIRE(one);
    CHECK(one->faces.size() == 1);
    auto two = planarity_embed(make_graph(0, {{0, 1}}));
    REQUIRE(two);
    CHECK(two->faces.size() == 1);
    CHECK(two->faces[0].size() == 2);
  }
  SUBCASE("outer face touches the target") {
    RootedGraph g = testutil::fig_emptyfaces();
    auto rs = planarity_embed(g);
    REQUIRE(rs);
    bool touches = false;
    for (const auto& step : rs->faces[rs->outer_face])
      if (step.first == g.target) touches = true;
    CHECK(touches);
  }
  SUBCASE("random planar graphs embed and satisfy Euler") {
    std::mt19937 rng(31);
    for (int it = 0; it < 30; ++it) {
      RootedGraph g = testutil::random_connected_planar(4 + it % 7, it % 5, rng);
      auto rs = planarity_embed(g);
      REQUIRE(rs);  // planar by construction
      // finalize() enforces Euler; double cover is checked here
      CHECK(face_double_cover(*rs) == 2 * g.m());
    }
  }
}

TEST_CASE("face traversal") {
  SUBCASE("4-cycle with a chord has faces of sizes 3,3,4") {
    auto rs = planarity_embed(make_graph(0, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
    REQUIRE(rs);
    std::multiset<size_t> sizes;
    for (const auto& walk : rs->faces) sizes.insert(walk.size());
    CHECK(sizes == std::multiset<size_t>{3, 3, 4});
  }
  SUBCASE("all face walks of 2-connected graphs are simple cycles") {
    std::mt19937 rng(37);
    for (int it = 0; it < 25; ++it) {
      RootedGraph g = testutil::random_biconnected_planar(4 + it % 6, it % 4, rng);
      if (g.n() < 3) continue;
      auto rs = planarity_embed(g);
      REQUIRE(rs);
      for (const auto& walk : rs->faces) {
        std::set<NodeId> seen;
        for (const auto& step : walk) CHECK(seen.insert(step.first).second);
      }
    }
  }
}

TEST_CASE("outerplanar embedding") {
  SUBCASE("K4 is not outerplanar") {
    std::vector<Link> ls;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ls.emplace_back(i, j);
    CHECK(!outerplanar_embed(RootedGraph::make(0, ls)));
  }
  SUBCASE("cycles are outerplanar with all nodes outside") {
    for (int n : {3, 4, 7}) {
      std::vector<Link> ls;
      for (int i = 0; i < n; ++i) ls.emplace_back(i, (i + 1) % n);
      auto rs = outerplanar_embed(RootedGraph::make(0, ls));
      REQUIRE(rs);
      std::set<NodeId> on_outer;
      for (const auto& step : rs->faces[rs->outer_face]) on_outer.insert(step.first);
      CHECK(on_outer.size() == static_cast<size_t>(n));
    }
  }
  SUBCASE("fan graphs are outerplanar") {
    RootedGraph fan = make_graph(0, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    auto rs = outerplanar_embed(fan);
    REQUIRE(rs);
    std::set<NodeId> on_outer;
    for (const auto& step : rs->faces[rs->outer_face]) on_outer.insert(step.first);
    CHECK(on_outer.size() == 4);
  }
  SUBCASE("agrees with the apex characterization") {
    std::mt19937 rng(41);
    for (int it = 0; it < 30; ++it) {
      RootedGraph g = testutil::random_connected_planar(4 + it % 5, it % 4, rng);
      NodeId apex = g.nodes.back() + 1;
      std::vector<Link> aux = g.links;
      for (NodeId v : g.nodes) aux.emplace_back(v, apex);
      bool apex_planar = planarity_embed(RootedGraph::make(g.target, aux)).has_value();
      CHECK(outerplanar_embed(g).has_value() == apex_planar);
    }
  }
}

TEST_CASE("insert link in face") {
  SUBCASE("chord insertion splits a face") {
    auto rs = planarity_embed(make_graph(0, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    REQUIRE(rs);
    CHECK(rs->faces.size() == 2);
    auto rs2 = insert_link_in_face(*rs, 0, 2, 0);
    CHECK(rs2.faces.size() == 3);
    CHECK(rs2.link_count() == 5);
  }
  SUBCASE("existing links and absent nodes are rejected") {
    auto rs = planarity_embed(make_graph(0, {{0, 1}, {1, 2}, {2, 0}}));
    REQUIRE(rs);
    CHECK_THROWS_AS(insert_link_in_face(*rs, 0, 1, 0), LinkExists);
  }
  SUBCASE("incremental apex insertion keeps Euler") {
    // insert a fresh node into the outer face, then link it around; every
    // step revalidates Euler via finalize()
    auto rs = planarity_embed(make_graph(0, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    REQUIRE(rs);
    int outer = rs->outer_face;
    RotationSystem cur = attach_node_in_face(*rs, outer, 9, {0, 1, 2, 3});
    CHECK(cur.link_count() == 8);
    std::set<NodeId> reached;
    for (const auto& [v, nb] : cur.rotation)
      for (NodeId u : nb)
        if (u == 9) reached.insert(v);
    CHECK(reached == std::set<NodeId>{0, 1, 2, 3});
  }
}

TEST_CASE("embedding dump format") {
  auto rs = planarity_embed(make_graph(0, {{0, 1}, {1, 2}, {2, 0}}));
  REQUIRE(rs);
  std::string dump = dump_rotation(*rs);
  CHECK(dump.find("rot 0: ") != std::string::npos);
  CHECK(dump.find("face 0") != std::string::npos);
}
