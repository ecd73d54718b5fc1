#pragma once

#include "resil/graph.hpp"
#include "resil/planar.hpp"

namespace resil {

struct HierEmbedding;

// Sentinel in-port for a routing that starts at the node.
constexpr NodeId kStart = -1;

struct InvalidPriorityChoice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per node v != t, one priority list per in-port (including kStart). List
// entries name incident links by the opposite endpoint, so every list is a
// permutation of v's neighbors.
struct SkippingPattern {
  std::map<NodeId, std::map<NodeId, std::vector<NodeId>>> lists;

  const std::vector<NodeId>& list(NodeId v, NodeId inport) const;
  bool has_node(NodeId v) const { return lists.count(v) > 0; }
};

enum class RouteVerdict { Reached, Loop, Stuck };
std::string to_string(RouteVerdict v);

struct Routing {
  std::vector<NodeId> trace;
  RouteVerdict verdict = RouteVerdict::Stuck;
  int steps = 0;
};

struct FailureSet {
  LinkSet failed;
};

// Executes the pattern from s under failure set F. Terminates at the target
// (Reached), when every incident link failed (Stuck), or when an
// (in-port, node) state repeats (Loop).
Routing route(const RootedGraph& g, const SkippingPattern& p, NodeId s, const FailureSet& F);

// Right-hand rule: all links of v counterclockwise starting right after the
// in-port, the in-port itself last.
std::vector<NodeId> right_hand_list(const RotationSystem& rot, NodeId v, NodeId inport);

// Updated right-hand rule for one node: the link to the target is pulled to
// the front of every list, and kStart aliases the list of e_v.
std::map<NodeId, std::vector<NodeId>> updated_right_hand(const RootedGraph& g,
                                                         const RotationSystem& rot, NodeId v,
                                                         NodeId e_v);

// Updated right-hand pattern over a full embedding; entry[v] is the chosen
// in-port alias e_v (as a neighbor id) for every node except the target.
SkippingPattern updated_right_hand_pattern(const RootedGraph& g, const RotationSystem& rot,
                                           const std::map<NodeId, NodeId>& entry);

// Hierarchical right-hand pattern: per (node, in-port) list is the t-prefix,
// then the given priority part, then the counterclockwise regular part over
// the remaining outgoing arcs. priorities maps (node, in-port neighbor) to an
// ordered list of neighbor ids; each named link e must satisfy in-port in S_e.
SkippingPattern hier_right_hand(const HierEmbedding& h, const RootedGraph& g,
                                const std::map<NodeId, NodeId>& entry,
                                const std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>>& priorities,
                                const SeparatorReport& report);

// Active neighbors of v whose paths to the target avoid all other active
// neighbors of v.
std::set<NodeId> relevant_neighbors(const RootedGraph& g, NodeId v, const LinkSet& failed_at_v);

// Bounce sequence of v's lists over its active neighbors, reported up to and
// including the first repeated entry.
std::vector<NodeId> orbit(const SkippingPattern& p, NodeId v, const LinkSet& failed_at_v,
                          NodeId u);

// Permutation invariant: every node != t has a list for every in-port and
// kStart, and every list is a permutation of its neighbors.
bool pattern_valid(const RootedGraph& g, const SkippingPattern& p);

SkippingPattern parse_pattern(std::istream& in);
std::string emit_pattern(const SkippingPattern& p);

std::string format_routing(const Routing& r);

}  // namespace resil
