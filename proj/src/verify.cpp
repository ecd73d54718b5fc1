#include "resil/verify.hpp"

#include <cassert>
#include <numeric>

namespace resil {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

VerifyResult verify_exhaustive(const RootedGraph& g, const SkippingPattern& p, int cap) {
  const int m = g.m();
  if (m > cap)
    throw CapExceeded("instance has " + std::to_string(m) + " links, cap is " +
                      std::to_string(cap));

  std::map<NodeId, int> idx;
  for (int i = 0; i < g.n(); ++i) idx[g.nodes[i]] = i;

  VerifyResult result;
  std::vector<int> pick;
  for (int size = 0; size <= m; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      FailureSet F;
      for (int i : pick) F.failed.insert(g.links[i]);

      Dsu dsu(g.n());
      for (const Link& l : g.links)
        if (!F.failed.count(l)) dsu.unite(idx[l.a], idx[l.b]);
      int troot = dsu.find(idx[g.target]);

      for (NodeId s : g.nodes) {
        if (dsu.find(idx[s]) != troot) continue;
        Routing r = route(g, p, s, F);
        ++result.scenarios;
        if (r.verdict != RouteVerdict::Reached) {
          result.counterexample = Counterexample{s, F, std::move(r)};
          return result;
        }
      }

      // Next lexicographic combination of `size` link indices.
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (size == 0 && m == 0) break;
  }
  return result;
}

namespace {

struct MinorSearch {
  const RootedGraph& host;
  const RootedGraph& pattern;
  int n;
  std::vector<NodeId> host_nodes;
  std::map<NodeId, int> host_idx;
  std::vector<unsigned> adj;                 // adjacency masks
  std::vector<unsigned> connected_masks;     // sorted by popcount then value
  std::vector<NodeId> porder;                // pattern nodes, target first
  std::vector<unsigned> assigned;            // branch masks along porder
  int max_branch;

  explicit MinorSearch(const RootedGraph& h, const RootedGraph& p) : host(h), pattern(p) {
    n = host.n();
    host_nodes = host.nodes;
    for (int i = 0; i < n; ++i) host_idx[host_nodes[i]] = i;
    adj.assign(n, 0);
    for (const Link& l : host.links) {
      adj[host_idx[l.a]] |= 1u << host_idx[l.b];
      adj[host_idx[l.b]] |= 1u << host_idx[l.a];
    }
    max_branch = n - pattern.n() + 1;

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) > max_branch) continue;
      if (is_connected(mask)) connected_masks.push_back(mask);
    }
    std::sort(connected_masks.begin(), connected_masks.end(), [](unsigned a, unsigned b) {
      int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
      return pa != pb ? pa < pb : a < b;
    });

    // Target first, then greedily by adjacency to already-ordered nodes.
    porder.push_back(pattern.target);
    std::set<NodeId> left(pattern.nodes.begin(), pattern.nodes.end());
    left.erase(pattern.target);
    while (!left.empty()) {
      NodeId best = -1;
      int best_score = -1;
      for (NodeId v : left) {
        int score = 0;
        for (NodeId u : porder)
          if (pattern.has_link(Link(u, v))) ++score;
        if (score > best_score || (score == best_score && v < best)) {
          best_score = score;
          best = v;
        }
      }
      porder.push_back(best);
      left.erase(best);
    }
  }

  bool is_connected(unsigned mask) const {
    unsigned seed = mask & (~mask + 1);
    unsigned reach = seed;
    while (true) {
      unsigned grow = reach;
      for (int i = 0; i < n; ++i)
        if (reach & (1u << i)) grow |= adj[i] & mask;
      if (grow == reach) break;
      reach = grow;
    }
    return reach == mask;
  }

  unsigned neighborhood(unsigned mask) const {
    unsigned out = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) out |= adj[i];
    return out;
  }

  bool search(size_t level, unsigned used, std::optional<MinorWitness>& witness) {
    if (level == porder.size()) {
      witness = MinorWitness{};
      for (size_t i = 0; i < porder.size(); ++i) {
        std::set<NodeId> branch;
        for (int b = 0; b < n; ++b)
          if (assigned[i] & (1u << b)) branch.insert(host_nodes[b]);
        witness->branch_sets[porder[i]] = std::move(branch);
      }
      return true;
    }
    NodeId pv = porder[level];
    int remaining = static_cast<int>(porder.size() - level);
    unsigned t_bit = 1u << host_idx.at(host.target);
    for (unsigned mask : connected_masks) {
      if (mask & used) continue;
      if (level == 0 && !(mask & t_bit)) continue;
      if (n - __builtin_popcount(used | mask) < remaining - 1) continue;
      bool ok = true;
      for (size_t i = 0; i < level && ok; ++i)
        if (pattern.has_link(Link(porder[i], pv)) && !(neighborhood(assigned[i]) & mask))
          ok = false;
      if (!ok) continue;
      assigned[level] = mask;
      if (search(level + 1, used | mask, witness)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorWitness> rooted_minor_bruteforce(const RootedGraph& host,
                                                    const RootedGraph& pattern) {
  if (host.n() > 16) throw SizeExceeded("host has more than 16 nodes");
  if (pattern.n() > 8) throw SizeExceeded("pattern has more than 8 nodes");
  if (pattern.n() > host.n()) return std::nullopt;

  MinorSearch search(host, pattern);
  search.assigned.assign(search.porder.size(), 0);
  std::optional<MinorWitness> witness;
  search.search(0, 0, witness);
  return witness;
}

namespace {

RootedGraph from_links(NodeId t, std::initializer_list<std::pair<int, int>> links) {
  std::vector<Link> ls;
  for (auto [a, b] : links) ls.emplace_back(a, b);
  return RootedGraph::make(t, ls);
}

}  // namespace

RootedGraph gadget(const std::string& name) {
  // k5e: t=0, far node 1 (the missing link is {0,1}), others 2..4.
  if (name == "k5e") {
    std::vector<Link> ls;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (!(i == 0 && j == 1)) ls.emplace_back(i, j);
    return RootedGraph::make(0, ls);
  }
  // k33e: sides {0,1,2} and {3,4,5}, missing {0,5}.
  if (name == "k33e") {
    std::vector<Link> ls;
    for (int i : {0, 1, 2})
      for (int j : {3, 4, 5})
        if (!(i == 0 && j == 5)) ls.emplace_back(i, j);
    return RootedGraph::make(0, ls);
  }
  // k34_2e: sides {u=1,v=2,w=3} and {t=0,x=4,p=5,q=6}, missing {3,5},{3,6}.
  if (name == "k34_2e") {
    std::vector<Link> ls;
    for (int i : {1, 2, 3})
      for (int j : {0, 4, 5, 6})
        if (!(i == 3 && (j == 5 || j == 6))) ls.emplace_back(i, j);
    return RootedGraph::make(0, ls);
  }
  // sk24: K_{2,4} on {v=2,x=3} x {u=1,p=4,q=5,r=6} with {u,v} subdivided by t=0.
  if (name == "sk24")
    return from_links(0, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {3, 5}, {3, 6}, {2, 4}, {2, 5}, {2, 6}});
  if (name == "grid4") {
    std::vector<Link> ls;
    auto id = [](int r, int c) { return 4 * r + c; };
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        if (c + 1 < 4) ls.emplace_back(id(r, c), id(r, c + 1));
        if (r + 1 < 4) ls.emplace_back(id(r, c), id(r + 1, c));
      }
    return RootedGraph::make(0, ls);
  }
  // fig_planar: K5 on 2..6 plus the separate link {t=0, 1}.
  if (name == "fig_planar") {
    std::vector<Link> ls{{0, 1}};
    for (int i = 2; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) ls.emplace_back(i, j);
    return RootedGraph::make(0, ls);
  }
  // fig_merge: t=0, u=1, v=2, w=3, p=4, q=5, r=6, s=7.
  if (name == "fig_merge")
    return from_links(0, {{0, 1},
                          {0, 2},
                          {1, 2},
                          {1, 3},
                          {2, 3},
                          {1, 4},
                          {4, 5},
                          {2, 5},
                          {1, 6},
                          {4, 6},
                          {6, 7},
                          {5, 7},
                          {2, 7}});
  // fig_ring: t=0, ring 1..5, then p=6,q=7,r=8,s=9 / x=10,y=11,z=12 /
  // a=13,b=14,c=15,d=16,e=17 / f=18,g=19.
  if (name == "fig_ring")
    return from_links(
        0, {{0, 1}, {0, 2},  {0, 3},   {0, 4},   {0, 5},   {6, 2},   {7, 2},   {7, 6},
            {8, 1}, {8, 6},  {8, 7},   {9, 1},   {9, 6},   {9, 8},   {10, 2},  {11, 10},
            {12, 3}, {12, 11}, {13, 4}, {14, 4},  {14, 13}, {15, 13}, {15, 14}, {16, 15},
            {16, 3}, {17, 15}, {17, 3}, {4, 5},   {18, 1},  {18, 5},  {19, 1},  {19, 5}});
  // fig_skipping: triangle with two access nodes.
  if (name == "fig_skipping") return from_links(0, {{0, 1}, {0, 2}, {1, 2}});

  throw UnknownGadget("unknown gadget `" + name + "`");
}

std::vector<std::string> gadget_names() {
  return {"k5e",        "k33e",      "k34_2e",   "sk24",         "grid4",
          "fig_planar", "fig_merge", "fig_ring", "fig_skipping"};
}

}  // namespace resil
