#pragma once

#include "resil/graph.hpp"
#include "resil/planar.hpp"

namespace resil {

struct NotNice : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class YesClass {
  OuterplanarMinusT,
  DipoleOuterplanar,
  RingOfOuterplanar,
  NoneOfThree,
};
std::string to_string(YesClass c);

struct ClassVerdict {
  YesClass kind = YesClass::NoneOfThree;

  // OuterplanarMinusT: embedding of G-t (missing when G-t is edgeless).
  std::optional<RotationSystem> gt_embedding;

  // DipoleOuterplanar
  NodeId pole_u = -1, pole_v = -1;
  bool pole_link = false;  // {u,v} itself present
  std::vector<std::vector<NodeId>> comp_nodes;      // ascending min-id order
  std::vector<RotationSystem> comp_embeddings;      // of G[V_i + poles] minus {u,v}

  // RingOfOuterplanar
  std::vector<NodeId> ring;                         // u_1..u_k
  std::vector<std::vector<NodeId>> segment_nodes;   // poles included
  std::vector<RotationSystem> segment_embeddings;
};

// First match wins: G-t outerplanar, then dipole, then ring.
ClassVerdict classify_nice(const RootedGraph& g);

struct SynthEmbedding {
  RotationSystem rot;                 // embedding of the full graph
  std::map<NodeId, NodeId> entry;     // e_v as a neighbor id, per node != t
};

SynthEmbedding synth_outerplanar(const RootedGraph& g, const ClassVerdict& verdict);
SynthEmbedding synth_dipole(const RootedGraph& g, const ClassVerdict& verdict);
SynthEmbedding synth_ring(const RootedGraph& g, const ClassVerdict& verdict);

// Dispatch on the verdict kind.
SynthEmbedding synth_for_class(const RootedGraph& g, const ClassVerdict& verdict);

}  // namespace resil
