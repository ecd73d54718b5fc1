#pragma once

#include <random>

#include "resil/classes.hpp"
#include "resil/planar.hpp"
#include "resil/synth.hpp"
#include "resil/verify.hpp"

namespace testutil {

using namespace resil;

inline RootedGraph make_graph(NodeId t, std::initializer_list<std::pair<int, int>> links) {
  std::vector<Link> ls;
  for (auto [a, b] : links) ls.emplace_back(a, b);
  return RootedGraph::make(t, ls);
}

// Random biconnected planar graph: a cycle plus chords inserted into faces.
// Chord insertion keeps both properties by construction.
inline RootedGraph random_biconnected_planar(int cycle_len, int chords, std::mt19937& rng) {
  std::vector<Link> links;
  for (int i = 0; i < cycle_len; ++i) links.emplace_back(i, (i + 1) % cycle_len);
  RootedGraph g = RootedGraph::make(0, links);
  auto rot = planarity_embed(g);
  RotationSystem rs = *rot;
  for (int c = 0; c < chords; ++c) {
    std::vector<std::tuple<int, NodeId, NodeId>> options;
    for (int f = 0; f < static_cast<int>(rs.faces.size()); ++f) {
      std::set<NodeId> on_face;
      for (const auto& step : rs.faces[f]) on_face.insert(step.first);
      for (NodeId u : on_face)
        for (NodeId v : on_face)
          if (u < v && !g.has_link(Link(u, v))) options.emplace_back(f, u, v);
    }
    if (options.empty()) break;
    auto [f, u, v] = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
    rs = insert_link_in_face(rs, u, v, f);
    g = g.with_link(Link(u, v));
  }
  return g;
}

// Random connected planar rooted graph: a random spanning tree plus random
// extra links kept only while the graph stays planar.
inline RootedGraph random_connected_planar(int n, int extra, std::mt19937& rng) {
  std::vector<Link> links;
  for (int v = 1; v < n; ++v)
    links.emplace_back(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  RootedGraph g = RootedGraph::make(0, links, [&] {
    std::vector<NodeId> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }());
  std::vector<Link> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_link(Link(u, v))) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (const Link& l : candidates) {
    if (extra <= 0) break;
    RootedGraph next = g.with_link(l);
    if (planarity_embed(next)) {
      g = std::move(next);
      --extra;
    }
  }
  NodeId t = std::uniform_int_distribution<int>(0, n - 1)(rng);
  return RootedGraph::make(t, g.links, g.nodes);
}

inline RootedGraph fig_emptyfaces() {
  // t=0, u=1, v=2, x=3, y=4.
  return make_graph(0, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

// Adversarial pattern for the subdivided K_{2,4} (ids as in gadget "sk24":
// t=0 u=1 v=2 x=3 p=4 q=5 r=6). Encodes the cyclic orbit at x and the
// forced choices that produce the loop (q,x,r,v,p,x,q,...) under
// F = {{v,t},{q,v}}.
inline SkippingPattern sk24_proof_pattern() {
  SkippingPattern p;
  auto set_all = [&](NodeId v, std::vector<NodeId> nb, std::vector<NodeId> lst) {
    for (NodeId f : nb) p.lists[v][f] = lst;
    p.lists[v][kStart] = lst;
  };
  p.lists[3][1] = {4, 5, 6, 1};
  p.lists[3][4] = {5, 6, 1, 4};
  p.lists[3][5] = {6, 1, 4, 5};
  p.lists[3][6] = {1, 4, 5, 6};
  p.lists[3][kStart] = {1, 4, 5, 6};
  set_all(5, {2, 3}, {2, 3});          // q
  set_all(1, {0, 3}, {0, 3});          // u
  p.lists[2][0] = {0, 4, 5, 6};        // v
  p.lists[2][4] = {0, 4, 5, 6};
  p.lists[2][5] = {0, 4, 5, 6};
  p.lists[2][6] = {0, 5, 4, 6};        // pi_v(r,{q,t}) = p
  p.lists[2][kStart] = {0, 4, 5, 6};
  p.lists[4][2] = {3, 2};              // pi_p(v, .) = x
  p.lists[4][3] = {2, 3};
  p.lists[4][kStart] = {2, 3};
  p.lists[6][3] = {2, 3};              // pi_r(x, .) = v
  p.lists[6][2] = {2, 3};
  p.lists[6][kStart] = {2, 3};
  return p;
}

// Adversarial pattern for K_{3,4} minus two links (ids as in gadget
// "k34_2e": t=0 u=1 v=2 w=3 x=4 p=5 q=6). Produces the loop
// (q,u,x,v,p,u,q,...) under F = {{u,t},{v,t},{q,v}}.
inline SkippingPattern k34_proof_pattern() {
  SkippingPattern p;
  p.lists[4][3] = {1, 2, 3};  // x: in w -> u
  p.lists[4][1] = {2, 3, 1};
  p.lists[4][2] = {3, 1, 2};
  p.lists[4][kStart] = {1, 2, 3};
  p.lists[1][6] = {0, 4, 5, 6};  // u: in q, {u,t} failed -> x
  p.lists[1][5] = {0, 6, 4, 5};  // in p -> q
  p.lists[1][4] = {0, 5, 6, 4};  // in x -> p
  p.lists[1][0] = {0, 4, 5, 6};
  p.lists[1][kStart] = {0, 4, 5, 6};
  for (NodeId f : {1, 2}) p.lists[6][f] = {1, 2};  // q
  p.lists[6][kStart] = {1, 2};
  p.lists[2][4] = {0, 6, 5, 4};  // v: in x, {v,t},{v,q} failed -> p
  p.lists[2][0] = {0, 4, 5, 6};
  p.lists[2][5] = {0, 4, 5, 6};
  p.lists[2][6] = {0, 4, 5, 6};
  p.lists[2][kStart] = {0, 4, 5, 6};
  for (NodeId f : {1, 2}) p.lists[5][f] = {1, 2};  // p: in v -> u
  p.lists[5][kStart] = {1, 2};
  p.lists[3][0] = {0, 4};  // w
  p.lists[3][4] = {0, 4};
  p.lists[3][kStart] = {0, 4};
  return p;
}

// The skipping lists of the two-access-node triangle figure (t=0 u=1 v=2).
inline SkippingPattern fig_skipping_pattern() {
  SkippingPattern p;
  p.lists[1][0] = {0, 2};
  p.lists[1][2] = {0, 2};
  p.lists[1][kStart] = {0, 2};
  p.lists[2][0] = {0, 1};
  p.lists[2][1] = {0, 1};
  p.lists[2][kStart] = {1, 0};
  return p;
}

// Yes-instance battery: the three base shapes decorated with cut-node
// blocks, target-incident separating links, nested separating links away
// from the target, and a foreign component. Every instance is asserted
// YES by decide() and small enough for exhaustive verification.
inline std::vector<RootedGraph> battery_yes_instances() {
  std::vector<RootedGraph> out;

  std::vector<std::vector<std::pair<int, int>>> bases = {
      // outerplanar-minus-t shapes
      {{0, 1}},                                               // K2
      {{0, 1}, {0, 2}, {1, 2}},                               // triangle
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}},                       // C4
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},               // C5
      {{1, 2}, {2, 3}, {0, 1}, {0, 2}, {0, 3}},               // fan + t
      {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 0}},
      // dipole shapes: poles 1,2
      {{0, 1}, {0, 2}, {1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}},   // K_{2,3}+t
      {{0, 1}, {0, 2}, {1, 3}, {3, 2}, {1, 4}, {4, 5}, {5, 2}, {1, 6}, {6, 2}},
      // fig_merge without the pole link (pure dipole)
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {2, 5}, {1, 6}, {4, 6}, {6, 7}, {5, 7}, {2, 7}},
      // ring shapes
      {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 2}, {1, 5}, {5, 2}, {2, 3}, {3, 1}},  // diamond segment
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}},          // wheel
      {{0, 1}, {0, 2}, {0, 3}, {1, 5}, {5, 2}, {1, 6}, {6, 2}, {2, 7}, {7, 3}, {3, 1}},
  };

  enum Deco { None, CutBlock, PendantEdge, TSep, NestedSep, Foreign, TSepForeign, CutForeign };
  std::vector<Deco> decos = {None, CutBlock, PendantEdge, TSep, NestedSep, Foreign,
                             TSepForeign, CutForeign};

  for (const auto& base : bases) {
    RootedGraph g0 = RootedGraph::make(0, [&] {
      std::vector<Link> ls;
      for (auto [a, b] : base) ls.emplace_back(a, b);
      return ls;
    }());
    for (Deco deco : decos) {
      std::vector<Link> links = g0.links;
      NodeId next = g0.nodes.back() + 1;
      auto add = [&](int a, int b) { links.emplace_back(a, b); };
      switch (deco) {
        case None: break;
        case CutBlock: {  // triangle block hanging at the highest non-target node
          NodeId x = g0.nodes.back();
          add(x, next);
          add(x, next + 1);
          add(next, next + 1);
          break;
        }
        case PendantEdge: {
          add(g0.nodes.back(), next);
          break;
        }
        case TSep: {  // makes {v,t} separating for the smallest access node v
          NodeId v = g0.neighbors(0).front();
          add(next, v);
          add(next, 0);
          break;
        }
        case NestedSep: {  // chain of two nested separators on a non-target link
          Link l(-1, -1);
          for (const Link& cand : g0.links)
            if (!cand.incident(0)) {
              l = cand;
              break;
            }
          if (l.a < 0) continue;
          add(l.a, next);      // {l.a,l.b} now separates {next, next+1}
          add(next, l.b);
          add(l.a, next + 1);  // {l.a,next} now separates {next+1}
          add(next + 1, next);
          break;
        }
        case Foreign: {
          add(next, next + 1);
          add(next + 1, next + 2);
          add(next + 2, next);
          break;
        }
        case TSepForeign: {
          NodeId v = g0.neighbors(0).front();
          add(next, v);
          add(next, 0);
          add(next + 1, next + 2);
          break;
        }
        case CutForeign: {
          NodeId x = g0.nodes.back();
          add(x, next);
          add(x, next + 1);
          add(next, next + 1);
          add(next + 2, next + 3);
          break;
        }
      }
      RootedGraph g = RootedGraph::make(0, links);
      if (g.m() > 18) continue;
      if (!decide(g).yes) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace testutil
