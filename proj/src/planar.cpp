#include "resil/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <cassert>
#include <sstream>

namespace resil {

int RotationSystem::link_count() const {
  int darts = 0;
  for (const auto& [v, nb] : rotation) darts += static_cast<int>(nb.size());
  return darts / 2;
}

const std::vector<NodeId>& RotationSystem::rot(NodeId v) const {
  auto it = rotation.find(v);
  if (it == rotation.end()) throw UnknownNode(v);
  return it->second;
}

void RotationSystem::finalize() {
  faces.clear();
  const int n = node_count();
  const int m = link_count();

  if (m == 0) {
    faces.push_back({});  // the whole plane
    outer_face = 0;
    if (n > 1) throw ModelViolation("edgeless rotation with several nodes");
    return;
  }

  // Position of each neighbor within each rotation.
  std::map<NodeId, std::map<NodeId, int>> pos;
  for (const auto& [v, nb] : rotation) {
    auto& pv = pos[v];
    for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
      if (!pv.emplace(nb[i], i).second)
        throw ModelViolation("neighbor repeated in rotation of " + std::to_string(v));
    }
  }
  for (const auto& [v, nb] : rotation)
    for (NodeId u : nb)
      if (!pos.count(u) || !pos[u].count(v))
        throw ModelViolation("asymmetric rotation entry " + to_string(Link(v, u)));

  std::set<std::pair<NodeId, NodeId>> visited;
  std::vector<std::vector<std::pair<NodeId, NodeId>>> walks;
  for (const auto& [v, nb] : rotation) {
    for (NodeId u : nb) {
      if (visited.count({v, u})) continue;
      std::vector<std::pair<NodeId, NodeId>> walk;
      NodeId from = v, to = u;
      while (visited.insert({from, to}).second) {
        walk.push_back({from, to});
        const auto& rto = rotation.at(to);
        int p = pos[to][from];
        NodeId next = rto[(p + static_cast<int>(rto.size()) - 1) % rto.size()];
        from = to;
        to = next;
      }
      // Rotate so the walk starts at its smallest step.
      auto mn = std::min_element(walk.begin(), walk.end());
      std::rotate(walk.begin(), mn, walk.end());
      walks.push_back(std::move(walk));
    }
  }
  std::sort(walks.begin(), walks.end());
  faces = std::move(walks);

  const int f = static_cast<int>(faces.size());
  if (n - m + f != 2)
    throw ModelViolation("rotation violates Euler's formula (V-E+F = " +
                         std::to_string(n - m + f) + ")");
  if (outer_face < 0 || outer_face >= f) outer_face = 0;
}

int RotationSystem::face_of(NodeId from, NodeId to) const {
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    for (const auto& step : faces[i])
      if (step.first == from && step.second == to) return i;
  return -1;
}

std::vector<int> RotationSystem::faces_at(NodeId v) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    for (const auto& step : faces[i])
      if (step.first == v) {
        out.push_back(i);
        break;
      }
  return out;
}

std::vector<std::vector<std::pair<NodeId, NodeId>>> faces(const RotationSystem& rot) {
  return rot.faces;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

int pick_face_at(const RotationSystem& rs, NodeId v) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(rs.faces.size()); ++i) {
    bool hit = false;
    for (const auto& step : rs.faces[i])
      if (step.first == v) {
        hit = true;
        break;
      }
    if (!hit) continue;
    if (best < 0 || rs.faces[i] < rs.faces[best]) best = i;
  }
  return best;
}

std::optional<RotationSystem> embed_impl(const RootedGraph& g) {
  if (!g.connected()) throw NotConnected();

  RotationSystem rs;
  if (g.m() == 0) {
    for (NodeId v : g.nodes) rs.rotation[v];
    rs.finalize();
    return rs;
  }

  std::map<NodeId, int> idx;
  for (int i = 0; i < g.n(); ++i) idx[g.nodes[i]] = i;
  BoostGraph bg(g.n());
  for (const Link& l : g.links) boost::add_edge(idx[l.a], idx[l.b], bg);
  auto e_index = boost::get(boost::edge_index, bg);
  int ecount = 0;
  for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(e_index, *ei, ecount++);

  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data());
  if (!planar) return std::nullopt;

  for (int i = 0; i < g.n(); ++i) {
    NodeId v = g.nodes[i];
    auto& order = rs.rotation[v];
    for (const Edge& e : embedding[i]) {
      int s = static_cast<int>(boost::source(e, bg));
      int t = static_cast<int>(boost::target(e, bg));
      order.push_back(g.nodes[s == i ? t : s]);
    }
  }
  rs.finalize();
  return rs;
}

}  // namespace

std::optional<RotationSystem> planarity_embed(const RootedGraph& g) {
  auto rs = embed_impl(g);
  if (!rs) return std::nullopt;
  int f = pick_face_at(*rs, g.target);
  if (f >= 0) rs->outer_face = f;
  return rs;
}

std::optional<RotationSystem> outerplanar_embed(const RootedGraph& g) {
  if (!g.connected()) throw NotConnected();
  if (g.n() <= 1 || g.m() == 0) {
    RotationSystem rs;
    for (NodeId v : g.nodes) rs.rotation[v];
    if (g.n() > 1) return std::nullopt;  // disconnected, cannot happen here
    rs.finalize();
    return rs;
  }

  NodeId apex = g.nodes.back() + 1;
  std::vector<Link> aux_links = g.links;
  for (NodeId v : g.nodes) aux_links.emplace_back(v, apex);
  RootedGraph aux = RootedGraph::make(g.target, aux_links);
  auto embedded = embed_impl(aux);
  if (!embedded) return std::nullopt;

  RotationSystem rs;
  for (NodeId v : g.nodes) {
    auto& order = rs.rotation[v];
    for (NodeId u : embedded->rotation.at(v))
      if (u != apex) order.push_back(u);
  }
  rs.finalize();

  // The faces around the apex merged into one walk that visits every node;
  // make it the outer face (smallest such walk for determinism).
  std::set<NodeId> all(g.nodes.begin(), g.nodes.end());
  int best = -1;
  for (int i = 0; i < static_cast<int>(rs.faces.size()); ++i) {
    std::set<NodeId> seen;
    for (const auto& step : rs.faces[i]) seen.insert(step.first);
    if (seen == all && (best < 0 || rs.faces[i] < rs.faces[best])) best = i;
  }
  if (best < 0) throw ModelViolation("apex removal left no face with all nodes");
  rs.outer_face = best;
  return rs;
}

std::pair<NodeId, NodeId> face_corner(const RotationSystem& rot, int face, NodeId v) {
  if (face < 0 || face >= static_cast<int>(rot.faces.size()))
    throw NotOnFace("no such face");
  const auto& walk = rot.faces[face];
  for (size_t i = 0; i < walk.size(); ++i) {
    if (walk[i].second == v) {
      NodeId entering = walk[i].first;
      NodeId leaving = walk[(i + 1) % walk.size()].second;
      return {entering, leaving};
    }
  }
  throw NotOnFace("node " + std::to_string(v) + " not on face");
}

namespace {

void insert_before(std::vector<NodeId>& order, NodeId before, NodeId value) {
  auto it = std::find(order.begin(), order.end(), before);
  assert(it != order.end());
  order.insert(it, value);
}

}  // namespace

RotationSystem insert_link_in_face(const RotationSystem& rot, NodeId u, NodeId v, int face) {
  if (u == v) throw ModelViolation("self-loop insertion");
  const auto& ru = rot.rot(u);
  if (std::find(ru.begin(), ru.end(), v) != ru.end())
    throw LinkExists("link " + to_string(Link(u, v)) + " already embedded");

  auto [enter_u, leave_u] = face_corner(rot, face, u);
  auto [enter_v, leave_v] = face_corner(rot, face, v);
  (void)leave_u;
  (void)leave_v;

  RotationSystem out = rot;
  std::pair<NodeId, NodeId> outer_mark =
      rot.outer_face >= 0 && !rot.faces[rot.outer_face].empty()
          ? rot.faces[rot.outer_face].front()
          : std::pair<NodeId, NodeId>{-1, -1};
  insert_before(out.rotation[u], enter_u, v);
  insert_before(out.rotation[v], enter_v, u);
  out.finalize();
  if (outer_mark.first >= 0) out.outer_face = out.face_of(outer_mark.first, outer_mark.second);
  return out;
}

RotationSystem attach_node_in_face(const RotationSystem& rot, int face, NodeId apex,
                                   const std::set<NodeId>& attach) {
  if (rot.rotation.count(apex)) throw ModelViolation("apex id already used");
  if (face < 0 || face >= static_cast<int>(rot.faces.size()))
    throw NotOnFace("no such face");

  const auto& walk = rot.faces[face];
  RotationSystem out = rot;
  std::pair<NodeId, NodeId> outer_mark =
      rot.outer_face >= 0 && rot.outer_face != face && !rot.faces[rot.outer_face].empty()
          ? rot.faces[rot.outer_face].front()
          : std::pair<NodeId, NodeId>{-1, -1};

  std::set<NodeId> pending = attach;
  std::vector<NodeId> apex_order;
  for (size_t i = 0; i < walk.size(); ++i) {
    NodeId v = walk[i].second;
    if (!pending.count(v)) continue;
    pending.erase(v);
    apex_order.push_back(v);
    insert_before(out.rotation[v], walk[i].first, apex);
  }
  if (!pending.empty()) throw NotOnFace("attach node not on face");
  out.rotation[apex] = apex_order;
  out.finalize();
  if (outer_mark.first >= 0) out.outer_face = out.face_of(outer_mark.first, outer_mark.second);
  return out;
}

std::string dump_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  for (const auto& [v, nb] : rot.rotation) {
    out << "rot " << v << ":";
    for (size_t i = 0; i < nb.size(); ++i)
      out << (i ? "," : " ") << std::min(v, nb[i]) << "-" << std::max(v, nb[i]);
    out << "\n";
  }
  for (int i = 0; i < static_cast<int>(rot.faces.size()); ++i) {
    out << "face " << i << (i == rot.outer_face ? " (outer):" : ":");
    for (const auto& step : rot.faces[i]) out << " " << step.first;
    if (!rot.faces[i].empty()) out << " " << rot.faces[i].front().first;
    out << "\n";
  }
  return out.str();
}

}  // namespace resil
