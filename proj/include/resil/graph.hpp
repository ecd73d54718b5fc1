#pragma once

#include <algorithm>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace resil {

using NodeId = int;

// Undirected link, stored with endpoints normalized so that a < b.
struct Link {
  NodeId a = -1;
  NodeId b = -1;

  Link() = default;
  Link(NodeId u, NodeId v) : a(std::min(u, v)), b(std::max(u, v)) {}

  NodeId other(NodeId v) const { return v == a ? b : a; }
  bool incident(NodeId v) const { return v == a || v == b; }

  auto operator<=>(const Link&) const = default;
};

using LinkSet = std::set<Link>;

std::string to_string(const Link& l);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("parse error (line " + std::to_string(line_) + "): " + what_),
        line(line_) {}
};

struct ModelViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotConnected : std::runtime_error {
  NotConnected() : std::runtime_error("graph is not connected") {}
};

struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownNode : std::runtime_error {
  explicit UnknownNode(NodeId v)
      : std::runtime_error("unknown node " + std::to_string(v)) {}
};

// Simple undirected graph with one designated target node. Immutable after
// construction; the mutators below return new values.
struct RootedGraph {
  NodeId target = -1;
  std::vector<NodeId> nodes;            // ascending
  std::vector<Link> links;              // ascending
  std::map<NodeId, std::vector<NodeId>> adj;  // neighbor lists, ascending

  static RootedGraph make(NodeId target, const std::vector<Link>& links,
                          const std::vector<NodeId>& extra_nodes = {});

  int n() const { return static_cast<int>(nodes.size()); }
  int m() const { return static_cast<int>(links.size()); }

  bool has_node(NodeId v) const;
  bool has_link(const Link& l) const;
  int degree(NodeId v) const;
  const std::vector<NodeId>& neighbors(NodeId v) const;

  bool connected() const;
  bool biconnected() const;  // K2 counts as biconnected
  std::set<NodeId> cut_nodes() const;

  RootedGraph without_links(const LinkSet& remove) const;
  RootedGraph with_link(const Link& l) const;
  // Induced subgraph; new_target must be inside the node set.
  RootedGraph induced(const std::set<NodeId>& keep, NodeId new_target) const;
};

RootedGraph parse_rooted_graph(std::istream& in);
std::string emit_rooted_graph(const RootedGraph& g);

// Failure-set file: `f <u> <v>` lines naming existing links.
LinkSet parse_failure_lines(std::istream& in, const RootedGraph& g);

struct ComponentSplit {
  RootedGraph component;       // induced on the component containing target
  std::set<NodeId> outside;    // all other nodes
};
ComponentSplit component_of_target(const RootedGraph& g);

struct BiconnectedDecomposition {
  struct Component {
    RootedGraph graph;     // subgraph on the component's links
    NodeId local_target;   // t if present, else the cut node closest to t
  };
  std::vector<Component> components;
  std::set<NodeId> cut_nodes;
  std::map<NodeId, int> distance_to_t;
};
BiconnectedDecomposition biconnected_decomposition(const RootedGraph& g);

// Separating link e = {u,v}: removing both u and v disconnects the graph.
// S_e holds the links cut off from the target by e; it is empty for
// non-separating links and for separating links incident to the target.
struct SeparatorReport {
  LinkSet sep_t;
  LinkSet sep_other;
  std::map<Link, LinkSet> separated_by;

  bool is_separating(const Link& l) const {
    return sep_t.count(l) > 0 || sep_other.count(l) > 0;
  }
  const LinkSet& s_of(const Link& l) const;
};
SeparatorReport separating_links(const RootedGraph& g);

// Ordering of sep_other such that f in S_e implies e comes first.
std::vector<Link> separating_order(const RootedGraph& g, const SeparatorReport& report);

}  // namespace resil
