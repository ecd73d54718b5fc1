#pragma once

#include "resil/graph.hpp"
#include "resil/pattern.hpp"

namespace resil {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownGadget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Counterexample {
  NodeId source = -1;
  FailureSet failures;
  Routing routing;
};

struct VerifyResult {
  std::optional<Counterexample> counterexample;  // empty means Ok
  long long scenarios = 0;                       // (source, failure set) pairs routed
};

// Checks every failure set (by increasing size, then lexicographically) and
// every source still connected to the target. Stops at the first violation.
VerifyResult verify_exhaustive(const RootedGraph& g, const SkippingPattern& p, int cap = 20);

struct MinorWitness {
  std::map<NodeId, std::set<NodeId>> branch_sets;  // pattern node -> host nodes
};

// Exhaustive rooted-minor test: disjoint connected branch sets, one per
// pattern node, covering all pattern links, with the host target inside the
// branch set of the pattern target.
std::optional<MinorWitness> rooted_minor_bruteforce(const RootedGraph& host,
                                                    const RootedGraph& pattern);

// Named fixture graphs with fixed node ids.
RootedGraph gadget(const std::string& name);
std::vector<std::string> gadget_names();

}  // namespace resil
