#include <sstream>

#include "doctest.h"
#include "generators.hpp"

using namespace resil;
using testutil::make_graph;

TEST_CASE("parse minimal graph") {
  std::istringstream in("t 0\ne 0 1\n");
  RootedGraph g = parse_rooted_graph(in);
  CHECK(g.target == 0);
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  CHECK(g.has_link(Link(0, 1)));
}

TEST_CASE("parse rejects duplicates, self-loops and missing target") {
  {
    std::istringstream in("t 2\ne 0 1\ne 0 1\n");
    CHECK_THROWS_AS(parse_rooted_graph(in), ModelViolation);
  }
  {
    std::istringstream in("t 0\ne 1 1\n");
    CHECK_THROWS_AS(parse_rooted_graph(in), ModelViolation);
  }
  {
    std::istringstream in("e 0 1\n");
    CHECK_THROWS_AS(parse_rooted_graph(in), ModelViolation);
  }
  {
    std::istringstream in("x 0 1\n");
    CHECK_THROWS_AS(parse_rooted_graph(in), ParseError);
  }
}

TEST_CASE("parse the two-access-node triangle") {
  std::istringstream in("# triangle\nt 0\ne 0 1\ne 0 2\ne 1 2\n");
  RootedGraph g = parse_rooted_graph(in);
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.target == 0);
}

TEST_CASE("graph emit round-trips") {
  RootedGraph g = gadget("fig_merge");
  std::istringstream in(emit_rooted_graph(g));
  RootedGraph h = parse_rooted_graph(in);
  CHECK(g.nodes == h.nodes);
  CHECK(g.links == h.links);
  CHECK(g.target == h.target);
}

TEST_CASE("component of target") {
  SUBCASE("connected graph is returned unchanged") {
    RootedGraph g = make_graph(0, {{0, 1}, {1, 2}});
    auto split = component_of_target(g);
    CHECK(split.component.nodes == g.nodes);
    CHECK(split.outside.empty());
  }
  SUBCASE("K5 beside a single target link") {
    RootedGraph g = gadget("fig_planar");
    auto split = component_of_target(g);
    CHECK(split.component.n() == 2);
    CHECK(split.component.m() == 1);
    CHECK(split.component.target == 0);
    CHECK(split.outside.size() == 5);
  }
  SUBCASE("two disjoint triangles, BFS oracle") {
    RootedGraph g = make_graph(0, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto split = component_of_target(g);
    CHECK(split.component.nodes == std::vector<NodeId>{0, 1, 2});
    CHECK(split.outside == std::set<NodeId>{3, 4, 5});
  }
}

TEST_CASE("biconnected decomposition") {
  SUBCASE("biconnected graph is a single component") {
    RootedGraph g = make_graph(0, {{0, 1}, {1, 2}, {2, 0}});
    auto dec = biconnected_decomposition(g);
    CHECK(dec.components.size() == 1);
    CHECK(dec.components[0].local_target == 0);
    CHECK(dec.cut_nodes.empty());
  }
  SUBCASE("two triangles sharing a node") {
    RootedGraph g = make_graph(0, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto dec = biconnected_decomposition(g);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.cut_nodes == std::set<NodeId>{2});
    for (const auto& comp : dec.components) {
      if (comp.graph.has_node(0))
        CHECK(comp.local_target == 0);
      else
        CHECK(comp.local_target == 2);
    }
  }
  SUBCASE("path splits into K2 components, articulation oracle") {
    RootedGraph g = make_graph(0, {{0, 1}, {1, 2}});
    auto dec = biconnected_decomposition(g);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.cut_nodes == std::set<NodeId>{1});
    CHECK(dec.distance_to_t.at(2) == 2);
    // brute-force articulation check: removing node 1 disconnects
    std::set<NodeId> cuts;
    for (NodeId v : g.nodes) {
      std::set<NodeId> keep(g.nodes.begin(), g.nodes.end());
      keep.erase(v);
      if (keep.empty()) continue;
      RootedGraph h = g.induced(keep, *keep.begin());
      if (!h.connected()) cuts.insert(v);
    }
    CHECK(cuts == dec.cut_nodes);
  }
  SUBCASE("re-gluing components reproduces the link set") {
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
      RootedGraph g = testutil::random_connected_planar(8, 4, rng);
      auto dec = biconnected_decomposition(g);
      std::multiset<Link> glued;
      for (const auto& comp : dec.components)
        glued.insert(comp.graph.links.begin(), comp.graph.links.end());
      std::multiset<Link> expected(g.links.begin(), g.links.end());
      CHECK(glued == expected);
    }
  }
}

TEST_CASE("separating links") {
  SUBCASE("emptyfaces figure") {
    RootedGraph g = testutil::fig_emptyfaces();
    auto rep = separating_links(g);
    CHECK(rep.sep_t.empty());
    CHECK(rep.sep_other == LinkSet{Link(1, 2)});
    CHECK(rep.s_of(Link(1, 2)) == LinkSet{Link(1, 3), Link(3, 4), Link(2, 4)});
  }
  SUBCASE("4-cycle has none") {
    RootedGraph g = make_graph(0, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto rep = separating_links(g);
    CHECK(rep.sep_t.empty());
    CHECK(rep.sep_other.empty());
  }
  SUBCASE("matches endpoint-pair-removal oracle on random graphs") {
    std::mt19937 rng(11);
    for (int it = 0; it < 25; ++it) {
      RootedGraph g = testutil::random_biconnected_planar(5 + it % 4, 2, rng);
      auto rep = separating_links(g);
      for (const Link& e : g.links) {
        std::set<NodeId> keep(g.nodes.begin(), g.nodes.end());
        keep.erase(e.a);
        keep.erase(e.b);
        RootedGraph h = g.induced(keep, *keep.begin());
        bool sep = !h.connected();
        CHECK(rep.is_separating(e) == sep);
      }
    }
  }
}

TEST_CASE("lemma: separation sets are laminar on random biconnected planar graphs") {
  std::mt19937 rng(13);
  int with_seps = 0;
  for (int it = 0; it < 100; ++it) {
    RootedGraph g = testutil::random_biconnected_planar(4 + it % 7, 1 + it % 3, rng);
    auto rep = separating_links(g);
    if (!rep.sep_other.empty()) ++with_seps;
    for (const Link& e : g.links) {
      for (const Link& f : g.links) {
        if (e == f) continue;
        // (1) f in S_e implies e not in S_f
        if (rep.s_of(e).count(f)) CHECK(!rep.s_of(f).count(e));
        // (2) transitivity
        if (rep.s_of(e).count(f))
          for (const Link& h : rep.s_of(f)) CHECK(rep.s_of(e).count(h));
        // (3) common members force nesting
        for (const Link& h : g.links) {
          if (h == e || h == f) continue;
          if (rep.s_of(e).count(h) && rep.s_of(f).count(h))
            CHECK((rep.s_of(e).count(f) || rep.s_of(f).count(e)));
        }
      }
    }
  }
  CHECK(with_seps > 10);  // the generator must actually exercise the lemma
}

TEST_CASE("lemma: removing a separating link keeps the graph 2-connected") {
  std::mt19937 rng(17);
  for (int it = 0; it < 60; ++it) {
    RootedGraph g = testutil::random_biconnected_planar(4 + it % 7, 1 + it % 3, rng);
    auto rep = separating_links(g);
    for (const Link& e : rep.sep_other) {
      RootedGraph h = g.without_links({e});
      CHECK(h.biconnected());
    }
    for (const Link& e : rep.sep_t) {
      RootedGraph h = g.without_links({e});
      CHECK(h.biconnected());
    }
  }
}

TEST_CASE("lemma: separator structure survives single link removal") {
  std::mt19937 rng(19);
  for (int it = 0; it < 40; ++it) {
    RootedGraph g = testutil::random_biconnected_planar(4 + it % 6, 1 + it % 3, rng);
    auto rep = separating_links(g);
    LinkSet all_sep = rep.sep_t;
    all_sep.insert(rep.sep_other.begin(), rep.sep_other.end());
    for (const Link& f : all_sep) {
      for (const Link& e : g.links) {
        if (e == f) continue;
        RootedGraph h = g.without_links({e});
        auto rep_h = separating_links(h);
        CHECK(rep_h.is_separating(f));
      }
      // S'_e in g minus f equals S_e minus {f}
      RootedGraph h = g.without_links({f});
      auto rep_h = separating_links(h);
      for (const Link& e : rep.sep_other) {
        if (e == f) continue;
        LinkSet expect = rep.s_of(e);
        expect.erase(f);
        CHECK(rep_h.s_of(e) == expect);
      }
    }
  }
}

TEST_CASE("separating order respects nesting") {
  SUBCASE("no separators gives the empty order") {
    RootedGraph g = make_graph(0, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto rep = separating_links(g);
    CHECK(separating_order(g, rep).empty());
  }
  SUBCASE("chain of nested diamonds") {
    // 0=t ring with nested diamonds hanging inside each other
    RootedGraph g = make_graph(0, {{0, 1},
                                   {0, 2},
                                   {1, 2},   // separator 1 (outermost)
                                   {1, 3},
                                   {3, 2},
                                   {1, 4},   // {1,3} separates {4}
                                   {4, 3}});
    auto rep = separating_links(g);
    REQUIRE(rep.sep_other.count(Link(1, 2)));
    REQUIRE(rep.sep_other.count(Link(1, 3)));
    auto order = separating_order(g, rep);
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = 0; j < order.size(); ++j)
        if (rep.s_of(order[i]).count(order[j])) CHECK(i < j);
    // outermost first
    CHECK(order.front() == Link(1, 2));
  }
  SUBCASE("pairwise property on random graphs") {
    std::mt19937 rng(23);
    for (int it = 0; it < 40; ++it) {
      RootedGraph g = testutil::random_biconnected_planar(5 + it % 5, 2, rng);
      auto rep = separating_links(g);
      if (!rep.sep_t.empty()) continue;
      auto order = separating_order(g, rep);
      for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = 0; j < order.size(); ++j)
          if (rep.s_of(order[i]).count(order[j])) CHECK(i < j);
    }
  }
  SUBCASE("precondition violations are reported") {
    RootedGraph g = make_graph(0, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 0}});
    auto rep = separating_links(g);
    REQUIRE(!rep.sep_t.empty());
    CHECK_THROWS_AS(separating_order(g, rep), PreconditionViolated);
  }
}
