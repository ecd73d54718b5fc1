#include "resil/hier.hpp"

#include <cassert>
#include <deque>
#include <sstream>

#include "resil/pattern.hpp"

namespace resil {

const std::vector<Dart>& HierEmbedding::rot_of(NodeId v) const {
  auto it = rot.find(v);
  if (it == rot.end()) throw UnknownNode(v);
  return it->second;
}

std::vector<Link> HierEmbedding::links() const {
  LinkSet out;
  for (const auto& [v, darts] : rot)
    for (const Dart& d : darts) out.insert(Link(v, d.other));
  return {out.begin(), out.end()};
}

int HierEmbedding::link_count() const { return static_cast<int>(links().size()); }

std::vector<std::vector<HierEmbedding::ArcStep>> HierEmbedding::arc_faces() const {
  // Dart positions per node for O(1) predecessor lookups.
  std::map<NodeId, std::map<Dart, int>> pos;
  for (const auto& [v, darts] : rot) {
    auto& pv = pos[v];
    for (int i = 0; i < static_cast<int>(darts.size()); ++i) {
      if (!pv.emplace(darts[i], i).second)
        throw ModelViolation("dart repeated at node " + std::to_string(v));
    }
  }

  std::set<ArcStep> visited;
  std::vector<std::vector<ArcStep>> walks;
  for (const auto& [v, darts] : rot) {
    for (const Dart& d0 : darts) {
      ArcStep start{v, d0};
      if (visited.count(start)) continue;
      std::vector<ArcStep> walk;
      ArcStep cur = start;
      while (visited.insert(cur).second) {
        walk.push_back(cur);
        // Traverse to the other end of the arc, then turn clockwise.
        NodeId y = cur.d.other;
        Dart twin{cur.node, !cur.d.out};
        auto pit = pos.find(y);
        if (pit == pos.end() || !pit->second.count(twin))
          throw ModelViolation("asymmetric arc " + to_string(Link(cur.node, y)));
        const auto& ry = rot.at(y);
        int p = pit->second.at(twin);
        Dart next = ry[(p + static_cast<int>(ry.size()) - 1) % ry.size()];
        cur = ArcStep{y, next};
      }
      auto mn = std::min_element(walk.begin(), walk.end());
      std::rotate(walk.begin(), mn, walk.end());
      walks.push_back(std::move(walk));
    }
  }
  std::sort(walks.begin(), walks.end());
  return walks;
}

bool HierEmbedding::euler_ok() const {
  int n = static_cast<int>(rot.size());
  int arcs = 0;
  for (const auto& [v, darts] : rot) arcs += static_cast<int>(darts.size());
  arcs /= 2;  // each arc has two darts
  int f = static_cast<int>(arc_faces().size());
  return n - arcs + f == 2;
}

HierEmbedding symmetric_orientation(const RotationSystem& rot) {
  HierEmbedding h;
  for (const auto& [v, nb] : rot.rotation) {
    auto& darts = h.rot[v];
    for (NodeId u : nb) {
      darts.push_back({u, true});
      darts.push_back({u, false});
    }
  }
  for (const Link& l : h.links()) h.enclosure[l];
  return h;
}

namespace {

// Rebuilds one endpoint's dart cycle with the two new darts around the
// marked block. Returns false when the marked darts are not contiguous.
bool splice_endpoint(std::vector<Dart>& darts, NodeId here, NodeId there, const LinkSet& marked) {
  auto is_marked = [&](const Dart& d) { return marked.count(Link(here, d.other)) > 0; };

  Link ref_link;
  bool have_ref = false;
  for (const Dart& d : darts) {
    if (is_marked(d)) continue;
    Link cand(here, d.other);
    if (!have_ref || cand < ref_link) {
      ref_link = cand;
      have_ref = true;
    }
  }
  if (!have_ref) return false;  // biconnectivity gives an unmarked link
  size_t start = 0;
  while (is_marked(darts[start]) || Link(here, darts[start].other) != ref_link) ++start;

  std::vector<Dart> prefix, block, suffix;
  bool in_block = false, block_done = false;
  for (size_t k = 0; k < darts.size(); ++k) {
    const Dart& d = darts[(start + k) % darts.size()];
    if (is_marked(d)) {
      if (block_done) return false;  // second marked run
      in_block = true;
      block.push_back(d);
    } else {
      if (in_block) {
        in_block = false;
        block_done = true;
      }
      (block_done ? suffix : prefix).push_back(d);
    }
  }
  if (block.empty()) return false;

  std::vector<Dart> rebuilt;
  rebuilt.reserve(darts.size() + 2);
  rebuilt.insert(rebuilt.end(), prefix.begin(), prefix.end());
  rebuilt.push_back({there, true});
  rebuilt.insert(rebuilt.end(), block.begin(), block.end());
  rebuilt.push_back({there, false});
  rebuilt.insert(rebuilt.end(), suffix.begin(), suffix.end());
  darts = std::move(rebuilt);
  return true;
}

}  // namespace

HierEmbedding insert_separating_link(const HierEmbedding& h, const Link& e, const LinkSet& sep_e) {
  if (sep_e.empty()) throw PreconditionViolated("separating link with empty S_e");
  HierEmbedding out = h;
  if (!splice_endpoint(out.rot[e.a], e.a, e.b, sep_e))
    throw MarkedArcsNotContiguous("marked arcs not contiguous at " + std::to_string(e.a));
  if (!splice_endpoint(out.rot[e.b], e.b, e.a, sep_e))
    throw MarkedArcsNotContiguous("marked arcs not contiguous at " + std::to_string(e.b));
  out.enclosure[e] = sep_e;
  return out;
}

HierEmbedding build_hier_embedding(const RootedGraph& g, const RotationSystem& rot0,
                                   const std::vector<Link>& order_innermost_first,
                                   const SeparatorReport& report) {
  HierEmbedding h = symmetric_orientation(rot0);
  for (const Link& e : order_innermost_first) h = insert_separating_link(h, e, report.s_of(e));
  (void)g;
  return h;
}

std::map<Link, LinkSet> enclosure_from_geometry(const HierEmbedding& h) {
  auto walks = h.arc_faces();
  std::map<HierEmbedding::ArcStep, int> face_of;
  for (int i = 0; i < static_cast<int>(walks.size()); ++i)
    for (const auto& step : walks[i]) face_of[step] = i;

  // Dual adjacency: the two sides of arc (x,y) are the faces of its darts,
  // labeled by the arc so a flood fill can refuse to cross specific arcs.
  struct Side {
    int f1, f2;
    NodeId x, y;  // arc (x,y)
  };
  std::vector<Side> sides;
  for (const auto& [v, darts] : h.rot)
    for (const Dart& d : darts)
      if (d.out)
        sides.push_back({face_of.at({v, d}), face_of.at({d.other, Dart{v, false}}), v, d.other});

  std::map<Link, LinkSet> result;
  for (const Link& e : h.links()) {
    // Region left of arc (e.a, e.b), never crossing either arc of e.
    int start = face_of.at({e.a, Dart{e.b, true}});
    std::set<int> region{start};
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (const Side& s : sides) {
        if (Link(s.x, s.y) == e) continue;
        int to = -1;
        if (s.f1 == f) to = s.f2;
        if (s.f2 == f) to = s.f1;
        if (to >= 0 && region.insert(to).second) queue.push_back(to);
      }
    }
    LinkSet enclosed;
    for (const Link& f : h.links()) {
      if (f == e) continue;
      if (region.count(face_of.at({f.a, Dart{f.b, true}}))) enclosed.insert(f);
    }
    result[e] = enclosed;
  }
  return result;
}

NodeId mu(const RootedGraph& g, const SkippingPattern& pattern, const Link& e,
          const LinkSet& sep_e) {
  const NodeId u = e.a, v = e.b;
  std::set<NodeId> tnb(g.neighbors(g.target).begin(), g.neighbors(g.target).end());
  if (tnb == std::set<NodeId>{u, v})
    throw PreconditionViolated("mu undefined when N(t) = {u,v}");

  // Shortest u-v path using only links in S_e, neighbors in ascending order.
  std::map<NodeId, NodeId> parent;
  std::deque<NodeId> queue{u};
  parent[u] = u;
  while (!queue.empty() && !parent.count(v)) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId y : g.neighbors(x)) {
      if (!sep_e.count(Link(x, y))) continue;
      if (parent.count(y)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!parent.count(v)) throw PreconditionViolated("no u-v path inside S_e");
  std::vector<NodeId> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  if (path.size() < 3) throw PreconditionViolated("S_e path has no interior node");
  NodeId w = path[1];

  FailureSet F;
  if (g.has_link(Link(u, g.target))) F.failed.insert(Link(u, g.target));
  if (g.has_link(Link(v, g.target))) F.failed.insert(Link(v, g.target));
  Routing r = route(g, pattern, w, F);
  for (size_t i = 0; i + 1 < r.trace.size(); ++i) {
    Link used(r.trace[i], r.trace[i + 1]);
    if (sep_e.count(used)) continue;
    bool at_u = used.incident(u), at_v = used.incident(v);
    if (at_u == at_v)
      throw PreconditionViolated("escape link " + to_string(used) + " not at one endpoint");
    return at_u ? u : v;
  }
  throw PreconditionViolated("routing never left S_e of " + to_string(e));
}

std::string dump_hier(const HierEmbedding& h) {
  std::ostringstream out;
  for (const auto& [v, darts] : h.rot) {
    out << "rot " << v << ":";
    for (size_t i = 0; i < darts.size(); ++i) {
      out << (i ? "," : " ");
      if (darts[i].out)
        out << v << "->" << darts[i].other;
      else
        out << darts[i].other << "->" << v;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace resil
