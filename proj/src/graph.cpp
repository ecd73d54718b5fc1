#include "resil/graph.hpp"

#include <cassert>
#include <deque>
#include <functional>
#include <istream>
#include <sstream>

namespace resil {

std::string to_string(const Link& l) {
  return std::to_string(l.a) + "-" + std::to_string(l.b);
}

RootedGraph RootedGraph::make(NodeId target, const std::vector<Link>& links,
                              const std::vector<NodeId>& extra_nodes) {
  RootedGraph g;
  g.target = target;
  std::set<NodeId> node_set;
  node_set.insert(target);
  node_set.insert(extra_nodes.begin(), extra_nodes.end());
  std::set<Link> link_set;
  for (const Link& l : links) {
    if (l.a == l.b) throw ModelViolation("self-loop at node " + std::to_string(l.a));
    if (!link_set.insert(l).second)
      throw ModelViolation("duplicate link " + to_string(l));
    node_set.insert(l.a);
    node_set.insert(l.b);
  }
  g.nodes.assign(node_set.begin(), node_set.end());
  g.links.assign(link_set.begin(), link_set.end());
  for (NodeId v : g.nodes) g.adj[v];
  for (const Link& l : g.links) {
    g.adj[l.a].push_back(l.b);
    g.adj[l.b].push_back(l.a);
  }
  for (auto& [v, nb] : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

bool RootedGraph::has_node(NodeId v) const { return adj.count(v) > 0; }

bool RootedGraph::has_link(const Link& l) const {
  return std::binary_search(links.begin(), links.end(), l);
}

int RootedGraph::degree(NodeId v) const {
  return static_cast<int>(neighbors(v).size());
}

const std::vector<NodeId>& RootedGraph::neighbors(NodeId v) const {
  auto it = adj.find(v);
  if (it == adj.end()) throw UnknownNode(v);
  return it->second;
}

bool RootedGraph::connected() const {
  if (nodes.empty()) return true;
  std::set<NodeId> seen;
  std::deque<NodeId> queue{nodes.front()};
  seen.insert(nodes.front());
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId u : neighbors(v))
      if (seen.insert(u).second) queue.push_back(u);
  }
  return seen.size() == nodes.size();
}

namespace {

// Articulation points by iterative lowpoint DFS.
std::set<NodeId> articulation_points(const RootedGraph& g) {
  std::set<NodeId> cuts;
  std::map<NodeId, int> disc, low;
  std::map<NodeId, NodeId> parent;
  int timer = 0;
  for (NodeId root : g.nodes) {
    if (disc.count(root)) continue;
    struct Frame {
      NodeId v;
      size_t next = 0;
    };
    std::vector<Frame> stack{{root}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        NodeId u = nb[f.next++];
        if (!disc.count(u)) {
          parent[u] = f.v;
          if (f.v == root) ++root_children;
          disc[u] = low[u] = timer++;
          stack.push_back({u});
        } else if (!parent.count(f.v) || parent[f.v] != u) {
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          NodeId p = stack.back().v;
          low[p] = std::min(low[p], low[f.v]);
          if (p != root && low[f.v] >= disc[p]) cuts.insert(p);
        }
      }
    }
    if (root_children > 1) cuts.insert(root);
  }
  return cuts;
}

}  // namespace

bool RootedGraph::biconnected() const {
  if (!connected()) return false;
  if (n() <= 1) return true;
  if (n() == 2) return m() == 1;
  return cut_nodes().empty();
}

std::set<NodeId> RootedGraph::cut_nodes() const { return articulation_points(*this); }

RootedGraph RootedGraph::without_links(const LinkSet& remove) const {
  std::vector<Link> kept;
  for (const Link& l : links)
    if (!remove.count(l)) kept.push_back(l);
  return make(target, kept, nodes);
}

RootedGraph RootedGraph::with_link(const Link& l) const {
  std::vector<Link> all = links;
  all.push_back(l);
  return make(target, all, nodes);
}

RootedGraph RootedGraph::induced(const std::set<NodeId>& keep, NodeId new_target) const {
  if (!keep.count(new_target)) throw UnknownNode(new_target);
  std::vector<Link> kept;
  for (const Link& l : links)
    if (keep.count(l.a) && keep.count(l.b)) kept.push_back(l);
  std::vector<NodeId> extra(keep.begin(), keep.end());
  return make(new_target, kept, extra);
}

RootedGraph parse_rooted_graph(std::istream& in) {
  std::optional<NodeId> target;
  std::vector<Link> links;
  std::set<Link> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "t") {
      NodeId v;
      if (!(ls >> v) || v < 0) throw ParseError(lineno, "expected `t <id>`");
      if (target) throw ModelViolation("more than one target line");
      target = v;
    } else if (kind == "e") {
      NodeId u, v;
      if (!(ls >> u >> v) || u < 0 || v < 0) throw ParseError(lineno, "expected `e <u> <v>`");
      if (u == v) throw ModelViolation("self-loop at node " + std::to_string(u));
      Link l(u, v);
      if (!seen.insert(l).second) throw ModelViolation("duplicate link " + to_string(l));
      links.push_back(l);
    } else {
      throw ParseError(lineno, "unknown directive `" + kind + "`");
    }
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens");
  }
  if (!target) throw ModelViolation("missing target line");
  return RootedGraph::make(*target, links);
}

std::string emit_rooted_graph(const RootedGraph& g) {
  std::ostringstream out;
  out << "t " << g.target << "\n";
  for (const Link& l : g.links) out << "e " << l.a << " " << l.b << "\n";
  return out.str();
}

LinkSet parse_failure_lines(std::istream& in, const RootedGraph& g) {
  LinkSet failed;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind != "f") throw ParseError(lineno, "expected `f <u> <v>`");
    NodeId u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected `f <u> <v>`");
    Link l(u, v);
    if (!g.has_link(l)) throw ModelViolation("failure names missing link " + to_string(l));
    failed.insert(l);
  }
  return failed;
}

ComponentSplit component_of_target(const RootedGraph& g) {
  std::set<NodeId> seen{g.target};
  std::deque<NodeId> queue{g.target};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId u : g.neighbors(v))
      if (seen.insert(u).second) queue.push_back(u);
  }
  ComponentSplit split;
  split.component = g.induced(seen, g.target);
  for (NodeId v : g.nodes)
    if (!seen.count(v)) split.outside.insert(v);
  return split;
}

namespace {

std::map<NodeId, int> bfs_distances(const RootedGraph& g, NodeId from) {
  std::map<NodeId, int> dist;
  dist[from] = 0;
  std::deque<NodeId> queue{from};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId u : g.neighbors(v))
      if (!dist.count(u)) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

}  // namespace

BiconnectedDecomposition biconnected_decomposition(const RootedGraph& g) {
  if (!g.connected()) throw NotConnected();
  BiconnectedDecomposition dec;
  dec.distance_to_t = bfs_distances(g, g.target);
  dec.cut_nodes = g.cut_nodes();

  // Hopcroft-Tarjan: partition links into biconnected components via an
  // edge stack.
  std::map<NodeId, int> disc, low;
  std::map<NodeId, NodeId> parent;
  std::vector<Link> edge_stack;
  std::vector<std::vector<Link>> comps;
  int timer = 0;

  struct Frame {
    NodeId v;
    size_t next = 0;
  };
  for (NodeId root : g.nodes) {
    if (disc.count(root)) continue;
    std::vector<Frame> stack{{root}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        NodeId u = nb[f.next++];
        if (!disc.count(u)) {
          parent[u] = f.v;
          edge_stack.emplace_back(f.v, u);
          disc[u] = low[u] = timer++;
          stack.push_back({u});
        } else if ((!parent.count(f.v) || parent[f.v] != u) && disc[u] < disc[f.v]) {
          edge_stack.emplace_back(f.v, u);
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        NodeId child = f.v;
        stack.pop_back();
        if (stack.empty()) continue;
        NodeId p = stack.back().v;
        low[p] = std::min(low[p], low[child]);
        if (low[child] >= disc[p]) {
          std::vector<Link> comp;
          Link pc(p, child);
          while (!edge_stack.empty()) {
            Link l = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(l);
            if (l == pc) break;
          }
          if (!comp.empty()) comps.push_back(std::move(comp));
        }
      }
    }
  }

  for (auto& comp_links : comps) {
    std::set<NodeId> comp_nodes;
    for (const Link& l : comp_links) {
      comp_nodes.insert(l.a);
      comp_nodes.insert(l.b);
    }
    NodeId local = -1;
    if (comp_nodes.count(g.target)) {
      local = g.target;
    } else {
      int best = -1;
      for (NodeId v : comp_nodes) {
        int d = dec.distance_to_t.at(v);
        if (best < 0 || d < best) {
          best = d;
          local = v;
        }
      }
    }
    std::vector<NodeId> extra(comp_nodes.begin(), comp_nodes.end());
    dec.components.push_back({RootedGraph::make(local, comp_links, extra), local});
  }
  std::sort(dec.components.begin(), dec.components.end(),
            [](const auto& x, const auto& y) {
              return x.graph.nodes < y.graph.nodes;
            });
  return dec;
}

const LinkSet& SeparatorReport::s_of(const Link& l) const {
  static const LinkSet kEmpty;
  auto it = separated_by.find(l);
  return it == separated_by.end() ? kEmpty : it->second;
}

SeparatorReport separating_links(const RootedGraph& g) {
  if (!g.connected()) throw NotConnected();
  SeparatorReport report;
  for (const Link& l : g.links) report.separated_by[l];

  // Dense index for the per-link BFS sweep.
  const int n = g.n();
  std::vector<NodeId> idx_to_node = g.nodes;
  std::map<NodeId, int> node_to_idx;
  for (int i = 0; i < n; ++i) node_to_idx[idx_to_node[i]] = i;
  std::vector<std::vector<int>> dense(n);
  for (const Link& l : g.links) {
    int a = node_to_idx[l.a], b = node_to_idx[l.b];
    dense[a].push_back(b);
    dense[b].push_back(a);
  }
  const int t_idx = node_to_idx[g.target];

  std::vector<int> comp(n);
  std::vector<int> queue(n);
  for (const Link& e : g.links) {
    const int ua = node_to_idx[e.a], ub = node_to_idx[e.b];
    std::fill(comp.begin(), comp.end(), -1);
    comp[ua] = comp[ub] = -2;  // removed
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] != -1) continue;
      comp[s] = ncomp;
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        int v = queue[head++];
        for (int u : dense[v])
          if (comp[u] == -1) {
            comp[u] = ncomp;
            queue[tail++] = u;
          }
      }
      ++ncomp;
    }
    if (ncomp < 2) continue;
    if (e.incident(g.target)) {
      report.sep_t.insert(e);
      continue;
    }
    report.sep_other.insert(e);
    const int tc = comp[t_idx];
    LinkSet& s_e = report.separated_by[e];
    for (const Link& f : g.links) {
      if (f == e) continue;
      int ca = comp[node_to_idx[f.a]];
      int cb = comp[node_to_idx[f.b]];
      if ((ca >= 0 && ca != tc) || (cb >= 0 && cb != tc)) s_e.insert(f);
    }
  }
  return report;
}

std::vector<Link> separating_order(const RootedGraph& g, const SeparatorReport& report) {
  if (!report.sep_t.empty())
    throw PreconditionViolated("separating links incident to target present");
  if (!g.biconnected()) throw PreconditionViolated("graph is not biconnected");

  // Topological sort of the relation f in S_e (arc e -> f), smallest link first.
  std::map<Link, int> indeg;
  std::map<Link, std::vector<Link>> out;
  for (const Link& e : report.sep_other) indeg[e] = 0;
  for (const Link& e : report.sep_other) {
    for (const Link& f : report.s_of(e)) {
      if (!report.sep_other.count(f)) continue;
      out[e].push_back(f);
      ++indeg[f];
    }
  }
  std::set<Link> ready;
  for (auto& [e, d] : indeg)
    if (d == 0) ready.insert(e);
  std::vector<Link> order;
  while (!ready.empty()) {
    Link e = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(e);
    for (const Link& f : out[e])
      if (--indeg[f] == 0) ready.insert(f);
  }
  if (order.size() != report.sep_other.size())
    throw CycleDetected("cyclic separation relation");
  return order;
}

}  // namespace resil
