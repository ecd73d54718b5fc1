#include "resil/pattern.hpp"

#include <cassert>
#include <deque>
#include <istream>
#include <sstream>

#include "resil/hier.hpp"

namespace resil {

const std::vector<NodeId>& SkippingPattern::list(NodeId v, NodeId inport) const {
  auto nit = lists.find(v);
  if (nit == lists.end())
    throw ModelViolation("pattern has no table for node " + std::to_string(v));
  auto lit = nit->second.find(inport);
  if (lit == nit->second.end())
    throw ModelViolation("pattern node " + std::to_string(v) + " missing in-port " +
                         (inport == kStart ? std::string("-") : std::to_string(inport)));
  return lit->second;
}

std::string to_string(RouteVerdict v) {
  switch (v) {
    case RouteVerdict::Reached: return "REACHED";
    case RouteVerdict::Loop: return "LOOP";
    case RouteVerdict::Stuck: return "STUCK";
  }
  return "?";
}

Routing route(const RootedGraph& g, const SkippingPattern& p, NodeId s, const FailureSet& F) {
  if (!g.has_node(s)) throw UnknownNode(s);
  Routing r;
  r.trace.push_back(s);
  if (s == g.target) {
    r.verdict = RouteVerdict::Reached;
    return r;
  }
  NodeId inport = kStart;
  NodeId cur = s;
  std::set<std::pair<NodeId, NodeId>> seen;
  const int cap = 2 * g.m() + 2;
  while (true) {
    if (cur == g.target) {
      r.verdict = RouteVerdict::Reached;
      return r;
    }
    if (!seen.insert({inport, cur}).second) {
      r.verdict = RouteVerdict::Loop;
      return r;
    }
    NodeId out = -1;
    for (NodeId w : p.list(cur, inport)) {
      if (!F.failed.count(Link(cur, w))) {
        out = w;
        break;
      }
    }
    if (out == -1) {
      r.verdict = RouteVerdict::Stuck;
      return r;
    }
    r.trace.push_back(out);
    ++r.steps;
    inport = cur;
    cur = out;
    if (static_cast<int>(r.trace.size()) > cap)
      throw ModelViolation("routing exceeded the 2m+2 step bound");
  }
}

std::vector<NodeId> right_hand_list(const RotationSystem& rot, NodeId v, NodeId inport) {
  const auto& order = rot.rot(v);
  auto it = std::find(order.begin(), order.end(), inport);
  if (it == order.end())
    throw NotIncident("in-port " + to_string(Link(v, inport)) + " not incident");
  std::vector<NodeId> out;
  size_t start = static_cast<size_t>(it - order.begin());
  for (size_t k = 1; k <= order.size(); ++k)
    out.push_back(order[(start + k) % order.size()]);
  return out;
}

namespace {

void move_to_front(std::vector<NodeId>& list, NodeId value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) return;
  list.erase(it);
  list.insert(list.begin(), value);
}

}  // namespace

std::map<NodeId, std::vector<NodeId>> updated_right_hand(const RootedGraph& g,
                                                         const RotationSystem& rot, NodeId v,
                                                         NodeId e_v) {
  const auto& order = rot.rot(v);
  if (std::find(order.begin(), order.end(), e_v) == order.end())
    throw NotIncident("e_v " + to_string(Link(v, e_v)) + " not incident");
  bool access = g.has_link(Link(v, g.target));
  std::map<NodeId, std::vector<NodeId>> lists;
  for (NodeId f : order) {
    auto lst = right_hand_list(rot, v, f);
    if (access) move_to_front(lst, g.target);
    lists[f] = std::move(lst);
  }
  lists[kStart] = lists[e_v];
  return lists;
}

SkippingPattern updated_right_hand_pattern(const RootedGraph& g, const RotationSystem& rot,
                                           const std::map<NodeId, NodeId>& entry) {
  SkippingPattern p;
  for (NodeId v : g.nodes) {
    if (v == g.target) continue;
    p.lists[v] = updated_right_hand(g, rot, v, entry.at(v));
  }
  return p;
}

SkippingPattern hier_right_hand(
    const HierEmbedding& h, const RootedGraph& g, const std::map<NodeId, NodeId>& entry,
    const std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>>& priorities,
    const SeparatorReport& report) {
  SkippingPattern p;
  for (NodeId v : g.nodes) {
    if (v == g.target) continue;
    const auto& darts = h.rot_of(v);
    bool access = g.has_link(Link(v, g.target));
    auto& table = p.lists[v];
    for (NodeId f : g.neighbors(v)) {
      std::vector<NodeId> lst;
      std::set<NodeId> placed;
      if (access) {
        lst.push_back(g.target);
        placed.insert(g.target);
      }
      auto pit = priorities.find({v, f});
      if (pit != priorities.end()) {
        for (NodeId w : pit->second) {
          Link e(v, w);
          if (!g.has_link(e))
            throw InvalidPriorityChoice("priority entry " + to_string(e) + " not incident");
          if (!report.s_of(e).count(Link(v, f)))
            throw InvalidPriorityChoice("in-port " + to_string(Link(v, f)) +
                                        " not separated by " + to_string(e));
          if (placed.insert(w).second) lst.push_back(w);
        }
      }
      // Regular part: outgoing arcs counterclockwise from the incoming arc
      // of the in-port.
      size_t start = darts.size();
      for (size_t i = 0; i < darts.size(); ++i)
        if (!darts[i].out && darts[i].other == f) {
          start = i;
          break;
        }
      if (start == darts.size())
        throw NotIncident("in-port " + to_string(Link(v, f)) + " not embedded");
      for (size_t k = 1; k <= darts.size(); ++k) {
        const Dart& d = darts[(start + k) % darts.size()];
        if (!d.out) continue;
        if (placed.count(d.other)) continue;
        lst.push_back(d.other);
        placed.insert(d.other);
      }
      table[f] = std::move(lst);
    }
    table[kStart] = table.at(entry.at(v));
  }
  return p;
}

std::set<NodeId> relevant_neighbors(const RootedGraph& g, NodeId v, const LinkSet& failed_at_v) {
  std::set<NodeId> active;
  for (NodeId u : g.neighbors(v))
    if (!failed_at_v.count(Link(u, v))) active.insert(u);
  std::set<NodeId> relevant;
  for (NodeId u : active) {
    if (u == g.target) {
      relevant.insert(u);
      continue;
    }
    // Reachability from u to t avoiding the other active neighbors of v.
    std::set<NodeId> blocked = active;
    blocked.erase(u);
    std::set<NodeId> seen{u};
    std::deque<NodeId> queue{u};
    bool found = false;
    while (!queue.empty() && !found) {
      NodeId x = queue.front();
      queue.pop_front();
      for (NodeId y : g.neighbors(x)) {
        if (blocked.count(y) || seen.count(y)) continue;
        if (y == g.target) {
          found = true;
          break;
        }
        seen.insert(y);
        queue.push_back(y);
      }
    }
    if (found) relevant.insert(u);
  }
  return relevant;
}

std::vector<NodeId> orbit(const SkippingPattern& p, NodeId v, const LinkSet& failed_at_v,
                          NodeId u) {
  std::vector<NodeId> seq{u};
  std::set<NodeId> seen{u};
  NodeId cur = u;
  while (true) {
    NodeId next = -1;
    for (NodeId w : p.list(v, cur)) {
      if (!failed_at_v.count(Link(v, w))) {
        next = w;
        break;
      }
    }
    if (next == -1) break;  // every incident link failed
    seq.push_back(next);
    if (!seen.insert(next).second) break;
    cur = next;
  }
  return seq;
}

bool pattern_valid(const RootedGraph& g, const SkippingPattern& p) {
  for (NodeId v : g.nodes) {
    if (v == g.target) continue;
    auto it = p.lists.find(v);
    if (it == p.lists.end()) return false;
    const auto& nb = g.neighbors(v);
    std::set<NodeId> want(nb.begin(), nb.end());
    std::set<NodeId> ports = want;
    ports.insert(kStart);
    if (it->second.size() != ports.size()) return false;
    for (const auto& [inport, lst] : it->second) {
      if (!ports.count(inport)) return false;
      std::set<NodeId> got(lst.begin(), lst.end());
      if (got != want || lst.size() != want.size()) return false;
    }
  }
  return true;
}

SkippingPattern parse_pattern(std::istream& in) {
  SkippingPattern p;
  NodeId cur = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "node") {
      if (!(ls >> cur) || cur < 0) throw ParseError(lineno, "expected `node <v>`");
      p.lists[cur];
    } else if (kind == "in") {
      if (cur < 0) throw ParseError(lineno, "`in` before any `node`");
      std::string port, colon, entries;
      if (!(ls >> port >> colon) || colon != ":")
        throw ParseError(lineno, "expected `in <u> : w1,w2,...`");
      NodeId inport;
      if (port == "-") {
        inport = kStart;
      } else {
        try {
          inport = std::stoi(port);
        } catch (...) {
          throw ParseError(lineno, "bad in-port `" + port + "`");
        }
      }
      std::vector<NodeId> lst;
      if (ls >> entries) {
        std::istringstream es(entries);
        std::string tok;
        while (std::getline(es, tok, ','))
          try {
            lst.push_back(std::stoi(tok));
          } catch (...) {
            throw ParseError(lineno, "bad list entry `" + tok + "`");
          }
      }
      if (!p.lists[cur].emplace(inport, std::move(lst)).second)
        throw ModelViolation("duplicate in-port for node " + std::to_string(cur));
    } else {
      throw ParseError(lineno, "unknown directive `" + kind + "`");
    }
  }
  return p;
}

std::string emit_pattern(const SkippingPattern& p) {
  std::ostringstream out;
  for (const auto& [v, table] : p.lists) {
    out << "node " << v << "\n";
    auto emit_line = [&](NodeId inport, const std::vector<NodeId>& lst) {
      out << "in ";
      if (inport == kStart)
        out << "-";
      else
        out << inport;
      out << " : ";
      for (size_t i = 0; i < lst.size(); ++i) out << (i ? "," : "") << lst[i];
      out << "\n";
    };
    auto sit = table.find(kStart);
    if (sit != table.end()) emit_line(kStart, sit->second);
    for (const auto& [inport, lst] : table)
      if (inport != kStart) emit_line(inport, lst);
  }
  return out.str();
}

std::string format_routing(const Routing& r) {
  std::ostringstream out;
  for (size_t i = 0; i < r.trace.size(); ++i) out << (i ? " " : "") << r.trace[i];
  out << " | " << to_string(r.verdict);
  return out.str();
}

}  // namespace resil
