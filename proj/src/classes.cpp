#include "resil/classes.hpp"

#include <cassert>
#include <deque>

namespace resil {

std::string to_string(YesClass c) {
  switch (c) {
    case YesClass::OuterplanarMinusT: return "outerplanar-minus-t";
    case YesClass::DipoleOuterplanar: return "dipole-outerplanar";
    case YesClass::RingOfOuterplanar: return "ring-of-outerplanar";
    case YesClass::NoneOfThree: return "none-of-three";
  }
  return "?";
}

namespace {

std::vector<std::set<NodeId>> connected_components(const RootedGraph& g,
                                                   const std::set<NodeId>& removed) {
  std::vector<std::set<NodeId>> comps;
  std::set<NodeId> seen;
  for (NodeId s : g.nodes) {
    if (removed.count(s) || seen.count(s)) continue;
    std::set<NodeId> comp{s};
    std::deque<NodeId> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (NodeId u : g.neighbors(v)) {
        if (removed.count(u) || seen.count(u)) continue;
        seen.insert(u);
        comp.insert(u);
        queue.push_back(u);
      }
    }
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& x, const auto& y) { return *x.begin() < *y.begin(); });
  return comps;
}

// Subgraph on keep-nodes minus one forbidden link, rooted anywhere.
RootedGraph piece(const RootedGraph& g, const std::set<NodeId>& keep,
                  std::optional<Link> drop) {
  std::vector<Link> links;
  for (const Link& l : g.links)
    if (keep.count(l.a) && keep.count(l.b) && (!drop || l != *drop)) links.push_back(l);
  return RootedGraph::make(*keep.begin(), links, {keep.begin(), keep.end()});
}

// The right-hand rule continues a face in the reverse sense of canonical
// face walks, so the alias e_v of each node is the link through which the
// canonical outer walk leaves its first corner. `skip` nodes are left
// untouched.
void entries_from_walk(const RotationSystem& R, const std::set<NodeId>& skip,
                       std::map<NodeId, NodeId>& entry) {
  const auto& walk = R.faces.at(R.outer_face);
  for (size_t i = 0; i < walk.size(); ++i) {
    NodeId v = walk[i].second;
    if (skip.count(v) || entry.count(v)) continue;
    entry[v] = walk[(i + 1) % walk.size()].second;
  }
}

// Rotation of v shifted to start at the entering link of v's first corner on
// the outer face.
std::vector<NodeId> outer_block(const RotationSystem& R, NodeId v) {
  auto [entering, leaving] = face_corner(R, R.outer_face, v);
  (void)leaving;
  const auto& order = R.rot(v);
  auto it = std::find(order.begin(), order.end(), entering);
  assert(it != order.end());
  std::vector<NodeId> out(it, order.end());
  out.insert(out.end(), order.begin(), it);
  return out;
}

int lexmin_face_at(const RotationSystem& rs, NodeId v) {
  int best = -1;
  for (int f : rs.faces_at(v))
    if (best < 0 || rs.faces[f] < rs.faces[best]) best = f;
  return best;
}

}  // namespace

ClassVerdict classify_nice(const RootedGraph& g) {
  if (!g.connected()) throw NotNice("not connected");
  if (!g.biconnected()) throw NotNice("not biconnected");
  if (!planarity_embed(g)) throw NotNice("not planar");
  SeparatorReport rep = separating_links(g);
  if (!rep.sep_t.empty() || !rep.sep_other.empty()) throw NotNice("separating links present");

  ClassVerdict verdict;

  // (a) G - t outerplanar.
  if (g.n() == 1) {
    verdict.kind = YesClass::OuterplanarMinusT;
    return verdict;
  }
  std::set<NodeId> rest(g.nodes.begin(), g.nodes.end());
  rest.erase(g.target);
  RootedGraph g_mt = piece(g, rest, std::nullopt);
  if (auto R = outerplanar_embed(g_mt)) {
    verdict.kind = YesClass::OuterplanarMinusT;
    verdict.gt_embedding = std::move(*R);
    return verdict;
  }

  const auto& tnb = g.neighbors(g.target);

  // (b) dipole: exactly two access nodes, every bridged component extends to
  // an outerplanar graph with the poles.
  if (tnb.size() == 2) {
    NodeId u = tnb[0], v = tnb[1];
    auto comps = connected_components(g, {u, v, g.target});
    std::vector<RotationSystem> embeddings;
    bool ok = true;
    for (const auto& comp : comps) {
      std::set<NodeId> keep = comp;
      keep.insert(u);
      keep.insert(v);
      auto R = outerplanar_embed(piece(g, keep, Link(u, v)));
      if (!R) {
        ok = false;
        break;
      }
      embeddings.push_back(std::move(*R));
    }
    if (ok) {
      verdict.kind = YesClass::DipoleOuterplanar;
      verdict.pole_u = u;
      verdict.pole_v = v;
      verdict.pole_link = g.has_link(Link(u, v));
      for (const auto& comp : comps) verdict.comp_nodes.emplace_back(comp.begin(), comp.end());
      verdict.comp_embeddings = std::move(embeddings);
      return verdict;
    }
  }

  // (c) ring: attachment pairs of the bridged components plus the direct
  // links among access nodes must form a single cycle of outerplanar
  // segments.
  if (tnb.size() >= 3) {
    std::set<NodeId> removed(tnb.begin(), tnb.end());
    removed.insert(g.target);
    auto comps = connected_components(g, removed);
    std::set<NodeId> access(tnb.begin(), tnb.end());

    bool ok = true;
    std::map<std::pair<NodeId, NodeId>, std::vector<int>> pair_comps;
    for (int i = 0; i < static_cast<int>(comps.size()) && ok; ++i) {
      std::set<NodeId> attach;
      for (NodeId x : comps[i])
        for (NodeId y : g.neighbors(x))
          if (access.count(y)) attach.insert(y);
      if (attach.size() != 2) {
        ok = false;
        break;
      }
      auto it = attach.begin();
      NodeId a = *it++, b = *it;
      pair_comps[{a, b}].push_back(i);
    }
    for (NodeId a : tnb)
      for (NodeId b : g.neighbors(a))
        if (access.count(b) && a < b) pair_comps[{a, b}];

    if (ok) {
      std::map<NodeId, std::vector<NodeId>> pair_adj;
      for (const auto& [pr, unused] : pair_comps) {
        pair_adj[pr.first].push_back(pr.second);
        pair_adj[pr.second].push_back(pr.first);
      }
      for (NodeId a : tnb)
        if (pair_adj[a].size() != 2) ok = false;

      std::vector<NodeId> ring;
      if (ok) {
        NodeId start = *std::min_element(tnb.begin(), tnb.end());
        NodeId prev = -1, cur = start;
        ring.push_back(start);
        NodeId next = std::min(pair_adj[start][0], pair_adj[start][1]);
        while (next != start) {
          ring.push_back(next);
          const auto& nb = pair_adj[next];
          NodeId follow = (nb[0] == cur) ? nb[1] : nb[0];
          prev = cur;
          (void)prev;
          cur = next;
          next = follow;
          if (ring.size() > tnb.size()) {
            ok = false;
            break;
          }
        }
        if (ring.size() != tnb.size()) ok = false;
      }

      if (ok) {
        const int k = static_cast<int>(ring.size());
        std::vector<std::vector<NodeId>> seg_nodes;
        std::vector<RotationSystem> seg_embeddings;
        for (int i = 0; i < k && ok; ++i) {
          NodeId a = ring[i], b = ring[(i + 1) % k];
          auto key = std::make_pair(std::min(a, b), std::max(a, b));
          auto it = pair_comps.find(key);
          if (it == pair_comps.end()) {
            ok = false;
            break;
          }
          std::set<NodeId> keep{a, b};
          for (int ci : it->second) keep.insert(comps[ci].begin(), comps[ci].end());
          auto R = outerplanar_embed(piece(g, keep, std::nullopt));
          if (!R) {
            ok = false;
            break;
          }
          seg_nodes.emplace_back(keep.begin(), keep.end());
          seg_embeddings.push_back(std::move(*R));
        }
        if (ok) {
          verdict.kind = YesClass::RingOfOuterplanar;
          verdict.ring = std::move(ring);
          verdict.segment_nodes = std::move(seg_nodes);
          verdict.segment_embeddings = std::move(seg_embeddings);
          return verdict;
        }
      }
    }
  }

  verdict.kind = YesClass::NoneOfThree;
  return verdict;
}

SynthEmbedding synth_outerplanar(const RootedGraph& g, const ClassVerdict& verdict) {
  if (verdict.kind != YesClass::OuterplanarMinusT)
    throw WrongClass("expected outerplanar-minus-t verdict");
  SynthEmbedding out;

  if (g.n() == 1) {
    out.rot.rotation[g.target];
    out.rot.finalize();
    return out;
  }
  const auto& tnb = g.neighbors(g.target);
  if (!verdict.gt_embedding || verdict.gt_embedding->link_count() == 0) {
    // G - t is a single node; only t's links exist.
    if (g.n() != 2) throw WrongClass("missing embedding witness");
    NodeId x = tnb.front();
    out.rot.rotation[g.target] = {x};
    out.rot.rotation[x] = {g.target};
    out.rot.finalize();
    out.entry[x] = g.target;
    return out;
  }

  const RotationSystem& R = *verdict.gt_embedding;
  entries_from_walk(R, {}, out.entry);
  out.rot = attach_node_in_face(R, R.outer_face, g.target,
                                std::set<NodeId>(tnb.begin(), tnb.end()));
  int f = lexmin_face_at(out.rot, g.target);
  if (f >= 0) out.rot.outer_face = f;
  return out;
}

SynthEmbedding synth_dipole(const RootedGraph& g, const ClassVerdict& verdict) {
  if (verdict.kind != YesClass::DipoleOuterplanar)
    throw WrongClass("expected dipole verdict");
  const NodeId u = verdict.pole_u, v = verdict.pole_v, t = g.target;
  SynthEmbedding out;

  std::vector<NodeId> rot_u, rot_v_cw;
  for (size_t i = 0; i < verdict.comp_embeddings.size(); ++i) {
    const RotationSystem& R = verdict.comp_embeddings[i];
    entries_from_walk(R, {u, v}, out.entry);
    auto bu = outer_block(R, u);
    rot_u.insert(rot_u.end(), bu.begin(), bu.end());
    auto bv = outer_block(R, v);
    // sigma_v runs clockwise around v, so the block order reverses.
    std::reverse(bv.begin(), bv.end());
    rot_v_cw.insert(rot_v_cw.end(), bv.begin(), bv.end());
    for (NodeId w : verdict.comp_nodes[i]) {
      const RotationSystem& Ri = verdict.comp_embeddings[i];
      out.rot.rotation[w] = Ri.rot(w);
    }
  }
  if (verdict.pole_link) {
    rot_u.push_back(v);
    rot_v_cw.push_back(u);
  }
  rot_u.push_back(t);
  rot_v_cw.push_back(t);
  std::reverse(rot_v_cw.begin(), rot_v_cw.end());  // back to counterclockwise

  out.rot.rotation[u] = rot_u;
  out.rot.rotation[v] = rot_v_cw;
  out.rot.rotation[t] = {u, v};
  out.rot.finalize();
  int f = lexmin_face_at(out.rot, t);
  if (f >= 0) out.rot.outer_face = f;

  out.entry[u] = t;
  if (!verdict.comp_embeddings.empty()) {
    // e_v is the first link of sigma_v^1.
    auto bv1 = outer_block(verdict.comp_embeddings.front(), v);
    out.entry[v] = bv1.back();
  } else {
    out.entry[v] = verdict.pole_link ? u : t;
  }
  return out;
}

SynthEmbedding synth_ring(const RootedGraph& g, const ClassVerdict& verdict) {
  if (verdict.kind != YesClass::RingOfOuterplanar) throw WrongClass("expected ring verdict");
  const NodeId t = g.target;
  const int k = static_cast<int>(verdict.ring.size());
  SynthEmbedding out;

  // Internal nodes keep their segment rotations and entry links.
  for (int i = 0; i < k; ++i) {
    const RotationSystem& R = verdict.segment_embeddings[i];
    NodeId a = verdict.ring[i], b = verdict.ring[(i + 1) % k];
    entries_from_walk(R, {a, b}, out.entry);
    for (NodeId w : verdict.segment_nodes[i])
      if (w != a && w != b) out.rot.rotation[w] = R.rot(w);
  }
  // Pole u_i carries the block toward segment i, then t, then the block
  // toward segment i-1; t sits inside the inner ring face.
  for (int i = 0; i < k; ++i) {
    NodeId ui = verdict.ring[i];
    const RotationSystem& Rnext = verdict.segment_embeddings[i];
    const RotationSystem& Rprev = verdict.segment_embeddings[(i + k - 1) % k];
    auto a_block = outer_block(Rnext, ui);
    auto b_block = outer_block(Rprev, ui);
    std::vector<NodeId> order = a_block;
    order.push_back(t);
    order.insert(order.end(), b_block.begin(), b_block.end());
    out.rot.rotation[ui] = order;
    out.entry[ui] = b_block.back();
  }
  out.rot.rotation[t] = verdict.ring;
  out.rot.finalize();

  // Outer face: the unique face visiting every access node but not t.
  std::set<NodeId> poles(verdict.ring.begin(), verdict.ring.end());
  int best = -1;
  for (int i = 0; i < static_cast<int>(out.rot.faces.size()); ++i) {
    std::set<NodeId> seen;
    bool has_t = false;
    for (const auto& step : out.rot.faces[i]) {
      seen.insert(step.first);
      if (step.first == t) has_t = true;
    }
    if (has_t) continue;
    bool all = true;
    for (NodeId p : poles)
      if (!seen.count(p)) all = false;
    if (all && (best < 0 || out.rot.faces[i] < out.rot.faces[best])) best = i;
  }
  if (best >= 0) out.rot.outer_face = best;
  return out;
}

SynthEmbedding synth_for_class(const RootedGraph& g, const ClassVerdict& verdict) {
  switch (verdict.kind) {
    case YesClass::OuterplanarMinusT: return synth_outerplanar(g, verdict);
    case YesClass::DipoleOuterplanar: return synth_dipole(g, verdict);
    case YesClass::RingOfOuterplanar: return synth_ring(g, verdict);
    case YesClass::NoneOfThree: break;
  }
  throw WrongClass("no synthesizer for none-of-three");
}

}  // namespace resil
