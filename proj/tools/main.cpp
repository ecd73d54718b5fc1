#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "resil/synth.hpp"
#include "resil/verify.hpp"

namespace {

using namespace resil;

RootedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return parse_rooted_graph(in);
}

SkippingPattern load_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pattern file " + path);
  return parse_pattern(in);
}

LinkSet parse_fail_spec(const std::string& spec, const RootedGraph& g) {
  LinkSet failed;
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw std::runtime_error("bad failure `" + tok + "`, expected u-v");
    Link l(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    if (!g.has_link(l)) throw std::runtime_error("failure names missing link " + to_string(l));
    failed.insert(l);
  }
  return failed;
}

std::string format_links(const LinkSet& ls) {
  std::ostringstream out;
  bool first = true;
  for (const Link& l : ls) {
    if (!first) out << ",";
    out << l.a << "-" << l.b;
    first = false;
  }
  return out.str();
}

void print_explain(const Decision& d) {
  std::cout << "stage component-of-target: " << d.outside.size() << " foreign node(s)\n";
  std::cout << "stage biconnected-decomposition: " << d.components.size() << " component(s)\n";
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    std::cout << "  component " << i << ": " << c.graph.n() << " nodes, " << c.graph.m()
              << " links, local target " << c.local_target << "\n";
    std::cout << "    separating links at target: "
              << (c.sep_t.empty() ? "-" : format_links(c.sep_t)) << "\n";
    std::cout << "    other separating links: "
              << (c.sep_other.empty() ? "-" : format_links(c.sep_other)) << "\n";
    std::cout << "    class: " << to_string(c.kind) << "\n";
  }
}

int run_decide(const std::string& path, bool explain, bool all_targets) {
  RootedGraph g = load_graph(path);
  if (all_targets) {
    bool all_yes = true;
    for (NodeId v : g.nodes) {
      RootedGraph gv = RootedGraph::make(v, g.links, g.nodes);
      Decision d = decide(gv);
      std::cout << "t=" << v << ": " << (d.yes ? "YES" : "NO") << "\n";
      all_yes = all_yes && d.yes;
    }
    std::cout << (all_yes ? "YES" : "NO") << " (all targets)\n";
    return all_yes ? 0 : 1;
  }
  Decision d = decide(g);
  if (explain) print_explain(d);
  std::cout << (d.yes ? "YES" : "NO");
  if (!d.yes) {
    std::cout << " " << to_string(d.reason);
    if (d.failed_component >= 0) std::cout << " component=" << d.failed_component;
  }
  std::cout << "\n";
  return d.yes ? 0 : 1;
}

int run_synth(const std::string& path, const std::string& out_path, bool explain) {
  RootedGraph g = load_graph(path);
  SynthesisResult r = synthesize(g);
  if (explain) print_explain(r.decision);
  if (!r.decision.yes) {
    std::cout << "NOT-RESILIENT " << to_string(r.decision.reason) << "\n";
    return 1;
  }
  std::string text = emit_pattern(*r.pattern);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write pattern file " + out_path);
    out << text;
    std::cout << "OK wrote " << out_path << "\n";
  }
  return 0;
}

int run_route(const std::string& gpath, const std::string& ppath, NodeId source,
              const std::string& fail_spec, const std::string& fail_file) {
  RootedGraph g = load_graph(gpath);
  SkippingPattern p = load_pattern(ppath);
  FailureSet F;
  F.failed = parse_fail_spec(fail_spec, g);
  if (!fail_file.empty()) {
    std::ifstream in(fail_file);
    if (!in) throw std::runtime_error("cannot open failure file " + fail_file);
    LinkSet extra = parse_failure_lines(in, g);
    F.failed.insert(extra.begin(), extra.end());
  }
  Routing r = route(g, p, source, F);
  std::cout << format_routing(r) << "\n";
  return r.verdict == RouteVerdict::Reached ? 0 : 1;
}

int run_verify(const std::string& gpath, const std::string& ppath, int cap) {
  RootedGraph g = load_graph(gpath);
  SkippingPattern p = load_pattern(ppath);
  if (!pattern_valid(g, p)) {
    std::cerr << "pattern is not a valid skipping pattern for this graph\n";
    return 2;
  }
  VerifyResult r = verify_exhaustive(g, p, cap);
  if (!r.counterexample) {
    std::cout << "OK (checked " << r.scenarios << " scenarios)\n";
    return 0;
  }
  const Counterexample& cex = *r.counterexample;
  std::cout << "FAIL s=" << cex.source << " F=" << format_links(cex.failures.failed)
            << " route=";
  for (size_t i = 0; i < cex.routing.trace.size(); ++i)
    std::cout << (i ? " " : "") << cex.routing.trace[i];
  std::cout << " " << to_string(cex.routing.verdict) << "\n";
  return 1;
}

int run_gadget(const std::string& name) {
  std::cout << emit_rooted_graph(gadget(name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect-resilience toolkit: decide, synthesize, route and verify "
               "local fast-rerouting rules"};
  app.require_subcommand(1);

  std::string graph_path, pattern_path, out_path = "-", fail_spec, fail_file, gadget_name;
  NodeId source = -1;
  int cap = 20;
  bool explain = false, all_targets = false;

  auto* cmd_decide = app.add_subcommand("decide", "decide perfect resilience");
  cmd_decide->add_option("graph", graph_path)->required();
  cmd_decide->add_flag("--explain", explain, "per-stage diagnostics");
  cmd_decide->add_flag("--all-targets", all_targets, "re-decide for every node as target");

  auto* cmd_synth = app.add_subcommand("synth", "synthesize a skipping forwarding pattern");
  cmd_synth->add_option("graph", graph_path)->required();
  cmd_synth->add_option("-o,--output", out_path, "pattern file ('-' for stdout)");
  cmd_synth->add_flag("--explain", explain, "per-stage diagnostics");

  auto* cmd_route = app.add_subcommand("route", "execute a pattern from a source");
  cmd_route->add_option("graph", graph_path)->required();
  cmd_route->add_option("pattern", pattern_path)->required();
  cmd_route->add_option("--source", source, "start node")->required();
  cmd_route->add_option("--fail", fail_spec, "failed links, e.g. 0-1,2-3");
  cmd_route->add_option("--fail-file", fail_file, "file with `f <u> <v>` lines");

  auto* cmd_verify = app.add_subcommand("verify", "exhaustively verify a pattern");
  cmd_verify->add_option("graph", graph_path)->required();
  cmd_verify->add_option("pattern", pattern_path)->required();
  cmd_verify->add_option("--cap", cap, "maximum link count (default 20)");

  auto* cmd_gadget = app.add_subcommand("gadget", "print a named fixture graph");
  cmd_gadget->add_option("name", gadget_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_decide->parsed()) return run_decide(graph_path, explain, all_targets);
    if (cmd_synth->parsed()) return run_synth(graph_path, out_path, explain);
    if (cmd_route->parsed())
      return run_route(graph_path, pattern_path, source, fail_spec, fail_file);
    if (cmd_verify->parsed()) return run_verify(graph_path, pattern_path, cap);
    if (cmd_gadget->parsed()) return run_gadget(gadget_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
