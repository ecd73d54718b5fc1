#include "resil/synth.hpp"

#include <cassert>

namespace resil {

std::string to_string(Decision::Reason r) {
  switch (r) {
    case Decision::Reason::Classified: return "classified";
    case Decision::Reason::NonPlanarComponent: return "non-planar-component";
    case Decision::Reason::ReducedInstanceUnclassifiable: return "reduced-instance-unclassifiable";
  }
  return "?";
}

namespace {

using PriorityMap = std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>>;

// Priority parts dictated by mu: separator e goes to the lists of mu(e) for
// in-ports separated by e. Later-inserted separators come first.
PriorityMap build_priorities(const RootedGraph& cur, const std::vector<Link>& inserted,
                             const std::map<Link, NodeId>& mu_map, const LinkSet& special,
                             const SeparatorReport& report) {
  PriorityMap prio;
  for (auto it = inserted.rbegin(); it != inserted.rend(); ++it) {
    const Link& e = *it;
    if (special.count(e)) continue;  // handled after assembly
    NodeId x = mu_map.at(e);
    const LinkSet& s_e = report.s_of(e);
    for (NodeId f : cur.neighbors(x))
      if (s_e.count(Link(x, f))) prio[{x, f}].push_back(e.other(x));
  }
  return prio;
}

// The N(t) = {u,v} separator goes right after the t-entry in every list of
// both endpoints.
void apply_specials(SkippingPattern& p, const LinkSet& special, const RootedGraph& g) {
  for (const Link& e : special) {
    for (NodeId x : {e.a, e.b}) {
      NodeId w = e.other(x);
      auto it = p.lists.find(x);
      if (it == p.lists.end()) continue;
      for (auto& [inport, lst] : it->second) {
        auto pos = std::find(lst.begin(), lst.end(), w);
        if (pos != lst.end()) lst.erase(pos);
        size_t at = (!lst.empty() && lst.front() == g.target) ? 1 : 0;
        lst.insert(lst.begin() + at, w);
      }
    }
  }
}

}  // namespace

SkippingPattern lift_sep_links(const RootedGraph& g, const SkippingPattern& rh0,
                               const RotationSystem& rot0, const SeparatorReport& report,
                               const std::vector<Link>& order,
                               const std::map<NodeId, NodeId>& entry) {
  if (!report.sep_t.empty())
    throw PreconditionViolated("separating links incident to target present");
  if (report.sep_other.empty()) return rh0;

  const auto& tn = g.neighbors(g.target);
  const std::set<NodeId> tnb(tn.begin(), tn.end());

  std::vector<Link> insertion(order.rbegin(), order.rend());  // innermost first
  HierEmbedding h = symmetric_orientation(rot0);
  RootedGraph cur = g.without_links(report.sep_other);
  std::vector<Link> inserted;
  std::map<Link, NodeId> mu_map;
  LinkSet special;

  for (const Link& e : insertion) {
    if (tnb == std::set<NodeId>{e.a, e.b}) {
      special.insert(e);
    } else {
      auto prio = build_priorities(cur, inserted, mu_map, special, report);
      SkippingPattern prev = hier_right_hand(h, cur, entry, prio, report);
      apply_specials(prev, special, cur);
      mu_map[e] = mu(cur, prev, e, report.s_of(e));
    }
    h = insert_separating_link(h, e, report.s_of(e));
    cur = cur.with_link(e);
    inserted.push_back(e);
  }

  auto prio = build_priorities(cur, inserted, mu_map, special, report);
  SkippingPattern out = hier_right_hand(h, g, entry, prio, report);
  apply_specials(out, special, g);
  return out;
}

SkippingPattern lift_sep_links_t(const RootedGraph& g, const SkippingPattern& p,
                                 const LinkSet& sep_t) {
  SkippingPattern out = p;
  for (const Link& e : sep_t) {
    if (!e.incident(g.target))
      throw PreconditionViolated("sep_t link " + to_string(e) + " not incident to target");
    NodeId v = e.other(g.target);
    auto& table = out.lists[v];
    for (auto& [inport, lst] : table) lst.insert(lst.begin(), g.target);
    std::vector<NodeId> fresh{g.target};
    for (NodeId w : g.neighbors(v))
      if (w != g.target) fresh.push_back(w);
    table[g.target] = std::move(fresh);
  }
  return out;
}

SkippingPattern lift_cut_nodes(const RootedGraph& g, const BiconnectedDecomposition& dec,
                               const std::vector<SkippingPattern>& per_component) {
  if (per_component.size() != dec.components.size())
    throw MissingComponentPattern("component/pattern count mismatch");
  if (dec.components.size() == 1) return per_component.front();

  std::map<NodeId, std::vector<int>> in_comps;
  for (int i = 0; i < static_cast<int>(dec.components.size()); ++i)
    for (NodeId v : dec.components[i].graph.nodes) in_comps[v].push_back(i);

  SkippingPattern out;
  for (NodeId u : g.nodes) {
    if (u == g.target) continue;
    const auto& cs = in_comps.at(u);
    if (cs.size() == 1) {
      const auto& src = per_component[cs.front()].lists;
      auto it = src.find(u);
      if (it == src.end()) throw MissingComponentPattern("no lists for node " + std::to_string(u));
      out.lists[u] = it->second;
      continue;
    }
    // Home component: the unique one where u is not the local target.
    int home = -1;
    for (int ci : cs)
      if (dec.components[ci].local_target != u) {
        if (home >= 0) throw MissingComponentPattern("ambiguous home component");
        home = ci;
      }
    if (home < 0) throw MissingComponentPattern("cut node with no home component");
    const auto& home_graph = dec.components[home].graph;
    auto hit = per_component[home].lists.find(u);
    if (hit == per_component[home].lists.end())
      throw MissingComponentPattern("no lists for cut node " + std::to_string(u));
    const auto& home_table = hit->second;
    std::set<NodeId> home_nb(home_graph.neighbors(u).begin(), home_graph.neighbors(u).end());

    std::vector<NodeId> sigma;
    for (NodeId w : g.neighbors(u))
      if (!home_nb.count(w)) sigma.push_back(w);

    auto& table = out.lists[u];
    auto combined = [&](const std::vector<NodeId>& base) {
      std::vector<NodeId> lst = base;
      lst.insert(lst.end(), sigma.begin(), sigma.end());
      return lst;
    };
    table[kStart] = combined(home_table.at(kStart));
    for (NodeId f : g.neighbors(u))
      table[f] = combined(home_nb.count(f) ? home_table.at(f) : home_table.at(kStart));
  }
  return out;
}

SkippingPattern lift_component(const SkippingPattern& p, const RootedGraph& g,
                               const std::set<NodeId>& outside) {
  SkippingPattern out = p;
  for (NodeId v : outside) {
    const auto& nb = g.neighbors(v);
    auto& table = out.lists[v];
    table[kStart] = nb;
    for (NodeId f : nb) table[f] = nb;
  }
  return out;
}

namespace {

struct ComponentPlan {
  Decision::ComponentInfo info;
  RootedGraph no_st;           // component minus separating target links
  SeparatorReport rep_no_st;   // report recomputed on no_st
  std::vector<Link> order;
  ClassVerdict verdict;
};

// Shared first half of decide and synthesize. Returns nullopt plus a filled
// Decision when the instance is a no-instance.
Decision run_pipeline(const RootedGraph& g, std::vector<ComponentPlan>* plans,
                      ComponentSplit* split_out, BiconnectedDecomposition* dec_out) {
  Decision d;
  ComponentSplit split = component_of_target(g);
  d.outside = split.outside;
  if (split_out) *split_out = split;

  if (split.component.n() == 1) {
    d.yes = true;
    d.reason = Decision::Reason::Classified;
    return d;
  }
  if (!planarity_embed(split.component)) {
    d.yes = false;
    d.reason = Decision::Reason::NonPlanarComponent;
    return d;
  }

  BiconnectedDecomposition dec = biconnected_decomposition(split.component);
  if (dec_out) *dec_out = dec;

  for (int i = 0; i < static_cast<int>(dec.components.size()); ++i) {
    const auto& comp = dec.components[i];
    ComponentPlan plan;
    plan.info.graph = comp.graph;
    plan.info.local_target = comp.local_target;

    SeparatorReport rep = separating_links(comp.graph);
    plan.info.sep_t = rep.sep_t;
    plan.info.sep_other = rep.sep_other;

    plan.no_st = comp.graph.without_links(rep.sep_t);
    plan.rep_no_st = separating_links(plan.no_st);
    plan.order = separating_order(plan.no_st, plan.rep_no_st);

    RootedGraph nice = plan.no_st.without_links(plan.rep_no_st.sep_other);
    plan.verdict = classify_nice(nice);
    plan.info.kind = plan.verdict.kind;
    d.components.push_back(plan.info);

    if (plan.verdict.kind == YesClass::NoneOfThree) {
      d.yes = false;
      d.reason = Decision::Reason::ReducedInstanceUnclassifiable;
      d.failed_component = i;
      return d;
    }
    if (plans) plans->push_back(std::move(plan));
  }
  d.yes = true;
  d.reason = Decision::Reason::Classified;
  return d;
}

}  // namespace

Decision decide(const RootedGraph& g) { return run_pipeline(g, nullptr, nullptr, nullptr); }

SynthesisResult synthesize(const RootedGraph& g) {
  SynthesisResult result;
  std::vector<ComponentPlan> plans;
  ComponentSplit split;
  BiconnectedDecomposition dec;
  result.decision = run_pipeline(g, &plans, &split, &dec);
  if (!result.decision.yes) return result;

  if (split.component.n() == 1) {
    result.pattern = lift_component(SkippingPattern{}, g, split.outside);
    return result;
  }

  std::vector<SkippingPattern> per_component;
  for (auto& plan : plans) {
    RootedGraph nice = plan.no_st.without_links(plan.rep_no_st.sep_other);
    SynthEmbedding se = synth_for_class(nice, plan.verdict);
    SkippingPattern p0 = updated_right_hand_pattern(nice, se.rot, se.entry);
    SkippingPattern p1 =
        lift_sep_links(plan.no_st, p0, se.rot, plan.rep_no_st, plan.order, se.entry);
    SkippingPattern p2 = lift_sep_links_t(plan.info.graph, p1, plan.info.sep_t);
    per_component.push_back(std::move(p2));
  }

  SkippingPattern joined = lift_cut_nodes(split.component, dec, per_component);
  result.pattern = lift_component(joined, g, split.outside);
  return result;
}

}  // namespace resil
