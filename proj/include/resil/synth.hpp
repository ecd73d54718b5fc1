#pragma once

#include "resil/classes.hpp"
#include "resil/graph.hpp"
#include "resil/hier.hpp"
#include "resil/pattern.hpp"

namespace resil {

struct MissingComponentPattern : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Decision {
  enum class Reason { Classified, NonPlanarComponent, ReducedInstanceUnclassifiable };

  bool yes = false;
  Reason reason = Reason::Classified;
  int failed_component = -1;

  // Per-stage diagnostics.
  std::set<NodeId> outside;  // nodes in other connected components
  struct ComponentInfo {
    RootedGraph graph;       // biconnected component
    NodeId local_target = -1;
    LinkSet sep_t;
    LinkSet sep_other;
    YesClass kind = YesClass::NoneOfThree;
  };
  std::vector<ComponentInfo> components;
};

std::string to_string(Decision::Reason r);

Decision decide(const RootedGraph& g);

struct SynthesisResult {
  Decision decision;
  std::optional<SkippingPattern> pattern;  // present iff decision.yes
};

SynthesisResult synthesize(const RootedGraph& g);

// Extends an updated right-hand pattern of g minus its separating links to a
// skipping pattern for g, where g is biconnected, planar and has no
// separating links incident to the target. `order` comes from
// separating_order (outermost separator first).
SkippingPattern lift_sep_links(const RootedGraph& g, const SkippingPattern& rh0,
                               const RotationSystem& rot0, const SeparatorReport& report,
                               const std::vector<Link>& order,
                               const std::map<NodeId, NodeId>& entry);

// Prepends each separating target link to every list of its non-target
// endpoint and adds the list for the new in-port.
SkippingPattern lift_sep_links_t(const RootedGraph& g, const SkippingPattern& p,
                                 const LinkSet& sep_t);

// Joins per-component patterns at cut nodes: a cut node forwards into its
// component toward the target first, its other links appended in ascending
// order.
SkippingPattern lift_cut_nodes(const RootedGraph& g, const BiconnectedDecomposition& dec,
                               const std::vector<SkippingPattern>& per_component);

// Nodes outside the target's component get ascending-order lists.
SkippingPattern lift_component(const SkippingPattern& p, const RootedGraph& g,
                               const std::set<NodeId>& outside);

}  // namespace resil
