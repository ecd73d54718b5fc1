#pragma once

#include "resil/graph.hpp"
#include "resil/planar.hpp"

namespace resil {

struct SkippingPattern;

struct MarkedArcsNotContiguous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One end of an arc at a node: at node v, {other=u, out=true} is the tail of
// arc (v,u) and {other=u, out=false} is the head of arc (u,v).
struct Dart {
  NodeId other = -1;
  bool out = false;
  auto operator<=>(const Dart&) const = default;
};

// Embedding of the symmetric orientation: every link contributes the two
// arcs (u,v) and (v,u), and each node's dart cycle lists both ends of both
// arcs in counterclockwise order. Traversing (u,v) then (v,u) walks the
// link's interior region counterclockwise; `enclosure` records which links
// that region contains (equal to S_e by construction).
struct HierEmbedding {
  std::map<NodeId, std::vector<Dart>> rot;
  std::map<Link, LinkSet> enclosure;

  const std::vector<Dart>& rot_of(NodeId v) const;
  std::vector<Link> links() const;
  int link_count() const;

  struct ArcStep {
    NodeId node;
    Dart d;
    auto operator<=>(const ArcStep&) const = default;
  };
  // Face walks over darts; each dart starts exactly one step.
  std::vector<std::vector<ArcStep>> arc_faces() const;
  bool euler_ok() const;
};

// Doubles a plain embedding: each link gets an empty face, all enclosures
// are empty.
HierEmbedding symmetric_orientation(const RotationSystem& rot);

// Adds the two arcs of separating link e. Around each endpoint, the arcs of
// links in sep_e must form one contiguous block (scanning counterclockwise
// from the smallest unmarked link); the outgoing arc goes right before the
// block and the incoming arc right after it.
HierEmbedding insert_separating_link(const HierEmbedding& h, const Link& e, const LinkSet& sep_e);

// Inserts every separating link in the given order (innermost first, i.e.
// the reverse of separating_order) into the doubled embedding of g minus all
// separating links.
HierEmbedding build_hier_embedding(const RootedGraph& g, const RotationSystem& rot0,
                                   const std::vector<Link>& order_innermost_first,
                                   const SeparatorReport& report);

// Recomputes each link's enclosed set from the arc-face structure: flood
// fill over faces starting left of arc (a,b), never crossing either arc of
// the link.
std::map<Link, LinkSet> enclosure_from_geometry(const HierEmbedding& h);

// Endpoint through which the routing escapes the region cut off by e: the
// routing is simulated from an interior node of a u-v path inside S_e with
// both endpoint-to-target links failed, and mu is the endpoint incident to
// the first link used outside S_e.
NodeId mu(const RootedGraph& g, const SkippingPattern& pattern, const Link& e,
          const LinkSet& sep_e);

std::string dump_hier(const HierEmbedding& h);

}  // namespace resil
