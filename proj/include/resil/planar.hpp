#pragma once

#include <optional>
#include <utility>

#include "resil/graph.hpp"

namespace resil {

struct NotOnFace : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LinkExists : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIncident : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Combinatorial planar embedding.
//
// rotation[v] lists the neighbors of v in counterclockwise order. Face walks
// are directed steps (from, to) and are traced so that the face interior
// lies on the left of each step: the successor of step (u, v) leaves v via
// the predecessor of u in rotation[v]. Under this convention the walk of the
// outer face runs clockwise around the graph.
struct RotationSystem {
  std::map<NodeId, std::vector<NodeId>> rotation;
  std::vector<std::vector<std::pair<NodeId, NodeId>>> faces;  // canonical order
  int outer_face = -1;

  int node_count() const { return static_cast<int>(rotation.size()); }
  int link_count() const;
  const std::vector<NodeId>& rot(NodeId v) const;

  // Recomputes faces from the rotation and checks Euler's formula
  // (throws ModelViolation when the rotation is not genus zero).
  void finalize();

  // Face containing the directed step (from, to); -1 if absent.
  int face_of(NodeId from, NodeId to) const;
  // Faces whose walk visits v.
  std::vector<int> faces_at(NodeId v) const;
};

std::vector<std::vector<std::pair<NodeId, NodeId>>> faces(const RotationSystem& rot);

// Planarity test plus embedding. On success the outer face is a face
// incident to the graph's target (lexicographically smallest first step
// among those). Returns nullopt for non-planar input.
std::optional<RotationSystem> planarity_embed(const RootedGraph& g);

// Embedding with every node on the outer face, via the apex reduction:
// a node adjacent to everything is added, the extended graph is embedded,
// and the apex is deleted again. Returns nullopt when not outerplanar.
std::optional<RotationSystem> outerplanar_embed(const RootedGraph& g);

// Splits `face` by the new link {u,v}; both endpoints must lie on the face.
RotationSystem insert_link_in_face(const RotationSystem& rot, NodeId u, NodeId v, int face);

// Adds `apex` inside `face`, linked to each node of `attach` at its first
// corner on the face walk. The apex rotation follows the walk order.
RotationSystem attach_node_in_face(const RotationSystem& rot, int face, NodeId apex,
                                   const std::set<NodeId>& attach);

// First visit of v on the walk of `face`: (entering neighbor, leaving neighbor).
std::pair<NodeId, NodeId> face_corner(const RotationSystem& rot, int face, NodeId v);

// Debug dump: `rot <v>: <a-b>,...` per node, then `face <k>: v1 v2 ... v1`.
std::string dump_rotation(const RotationSystem& rot);

}  // namespace resil
