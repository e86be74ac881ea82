// cdom: command-line front end for the connected-domination library.
//
// Exit codes: 0 success, 1 property absent or expectation missed, 2 usage or
// parse error, 3 a theorem validator fired.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cdom/compliance.hpp"
#include "cdom/constructions.hpp"
#include "cdom/domination.hpp"
#include "cdom/errors.hpp"
#include "cdom/io.hpp"
#include "cdom/iso.hpp"
#include "cdom/parallel.hpp"
#include "cdom/report.hpp"
#include "cdom/search.hpp"
#include "cdom/topology.hpp"
#include "cdom/verify.hpp"

namespace {

using namespace cdom;
using OJson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@file" holds an edge list (or graph6); anything else is graph6 or a name.
Graph load_graph(const std::string& arg) {
  if (arg.starts_with("@")) return parse_graph(slurp(arg.substr(1)));
  return parse_graph_or_name(arg);
}

struct Options {
  bool json = false;
  bool timing = false;
  int threads = 0;
};

struct Outcome {
  Report report;
  int code = 0;
};

Outcome cmd_gammac(const std::string& arg) {
  const Graph g = load_graph(arg);
  const auto r = gamma_c(g);
  Outcome o;
  o.report.command = "gammac";
  o.report.inputs["graph"] = emit_graph6(g);
  o.report.verdicts.push_back({{"gamma_c", r.value ? OJson(*r.value) : OJson("infinite")}});
  if (r.value) {
    o.report.witnesses.push_back({{"connected_dominating_set", to_json(r.witness)}});
    o.report.lines.push_back(fmt::format("gamma_c={}, witness {}", *r.value, format_set(r.witness)));
  } else {
    o.report.lines.push_back("gamma_c=infinite (disconnected)");
  }
  return o;
}

Outcome cmd_comply(const std::string& arg, int k, const std::string& expect, const std::string& route) {
  const Graph g = load_graph(arg);
  if (k < 1 || k > g.order()) throw UsageError(fmt::format("-k must lie in [1, {}]", g.order()));
  const auto r = route == "minor" ? compliance_by_minor(g, k) : is_k_compliant(g, k);
  Outcome o;
  o.report.command = "comply";
  o.report.inputs = {{"graph", emit_graph6(g)}, {"k", k}, {"route", route}};
  o.report.verdicts.push_back(to_json(r));
  std::string line = r.compliant() ? "compliant" : "non-compliant";
  if (r.min_k) line += fmt::format(", min_k={}", *r.min_k);
  if (r.side) {
    line += fmt::format(", witness {} in the {}", format_set(r.witness), side_name(*r.side));
    o.report.witnesses.push_back({{"side", side_name(*r.side)}, {"set", to_json(r.witness)}});
  }
  o.report.lines.push_back(line);
  if (!expect.empty() && (expect == "compliant") != r.compliant()) {
    o.report.lines.push_back(fmt::format("expected {}", expect));
    o.code = 1;
  }
  return o;
}

Outcome cmd_paley(int q) {
  const Graph g = paley(q);
  const auto srg = srg_check(g);
  Outcome o;
  o.report.command = "paley";
  o.report.inputs["q"] = q;
  o.report.verdicts.push_back(
      {{"graph6", emit_graph6(g)}, {"srg", {srg->n, srg->k, srg->lambda, srg->mu}}, {"edges", g.size()}});
  o.report.lines.push_back(emit_graph6(g));
  o.report.lines.push_back(fmt::format("srg({},{},{},{}), {} edges", srg->n, srg->k, srg->lambda, srg->mu, g.size()));
  return o;
}

Outcome cmd_twin(const std::string& arg, Vertex v, bool closed) {
  const Graph g = load_graph(arg);
  const Graph t = twin_add(g, v, closed);
  Outcome o;
  o.report.command = "twin";
  o.report.inputs = {{"graph", emit_graph6(g)}, {"vertex", v}, {"kind", closed ? "closed" : "open"}};
  o.report.verdicts.push_back({{"graph6", emit_graph6(t)}});
  o.report.lines.push_back(emit_graph6(t));
  return o;
}

Outcome cmd_minor(const std::string& target_arg, const std::string& host_arg, std::optional<std::uint64_t> budget) {
  const Graph target = load_graph(target_arg), host = load_graph(host_arg);
  const auto r = has_minor(host, target, budget);
  Outcome o;
  o.report.command = "minor";
  o.report.inputs = {{"target", emit_graph6(target)}, {"host", emit_graph6(host)}};
  if (budget) o.report.inputs["budget"] = *budget;
  const char* status = r.status == MinorStatus::Found ? "found" : r.status == MinorStatus::Absent ? "absent" : "unknown";
  o.report.verdicts.push_back({{"minor", status}, {"nodes", r.nodes}});
  if (r.witness) {
    o.report.witnesses.push_back(to_json(*r.witness));
    std::vector<std::string> sets;
    for (VertexSet b : r.witness->branch_sets) sets.push_back(format_set(b));
    o.report.lines.push_back(fmt::format("minor found, branch sets {}", fmt::join(sets, " ")));
  } else {
    o.report.lines.push_back(fmt::format("minor {}", status));
    o.code = 1;
  }
  return o;
}

Outcome cmd_il(const std::string& arg) {
  const Graph g = load_graph(arg);
  const auto r = is_il(g);
  Outcome o;
  o.report.command = "il";
  o.report.inputs["graph"] = emit_graph6(g);
  o.report.verdicts.push_back({{"intrinsically_linked", r.linked}});
  if (r.linked) {
    const Graph& member = petersen_family()[*r.member];
    o.report.witnesses.push_back({{"family_member", emit_graph6(member)}, {"minor", to_json(*r.witness)}});
    o.report.lines.push_back(fmt::format("IL: contains Petersen-family member {} as a minor", emit_graph6(member)));
  } else {
    o.report.lines.push_back("not IL (linklessly embeddable)");
    o.code = 1;
  }
  return o;
}

Outcome cmd_ik(const std::string& arg) {
  const Graph g = load_graph(arg);
  const auto r = is_ik_sufficient(g);
  const char* name = r == IkCertificate::ByK7 ? "ik-by-k7" : r == IkCertificate::ByConeOverIl ? "ik-by-cone-over-il" : "unknown";
  Outcome o;
  o.report.command = "ik";
  o.report.inputs["graph"] = emit_graph6(g);
  o.report.verdicts.push_back({{"certificate", name}});
  o.report.lines.push_back(name);
  if (r == IkCertificate::Unknown) o.code = 1;
  return o;
}

Outcome cmd_petersen_family() {
  Outcome o;
  o.report.command = "petersen-family";
  for (const Graph& g : petersen_family()) {
    o.report.verdicts.push_back({{"graph6", emit_graph6(g)}, {"order", g.order()}, {"edges", g.size()}});
    o.report.lines.push_back(emit_graph6(g));
  }
  return o;
}

Outcome cmd_fn(int n, bool long_run, bool serial) {
  const auto r = compute_f(n, serial ? Execution::Serial : Execution::Parallel, long_run);
  Outcome o;
  o.report.command = "fn";
  o.report.inputs = {{"n", n}, {"long", long_run}};
  o.report.verdicts.push_back({{"n", n}, {"f", r.f}, {"max_min_k", r.max_min_k}});
  o.report.witnesses.push_back({{"extremal", emit_graph6(r.extremal)}, {"mask", r.mask}});
  o.report.lines.push_back(fmt::format("f({})={}", n, r.f));
  o.report.lines.push_back(fmt::format("extremal {} (min_k={})", emit_graph6(r.extremal), r.max_min_k));
  return o;
}

Outcome cmd_search(const std::string& path, const std::string& checkpoint) {
  const SearchSpec spec = parse_search_spec(slurp(path));
  const auto r = search_non_compliant(spec);
  Outcome o;
  o.report.command = "search";
  o.report.inputs = {{"spec", path}, {"spec_hash", fmt::format("{:016x}", spec_hash(spec))}, {"seed", spec.seed}};
  o.report.verdicts.push_back({{"examined", r.examined},
                               {"rejected", r.rejected},
                               {"filtered", r.filtered},
                               {"checked", r.checked},
                               {"non_compliant", r.hits.size()}});
  o.report.lines.push_back(fmt::format("examined {}, rejected {}, filtered {}, checked {}, non-compliant classes {}",
                                       r.examined, r.rejected, r.filtered, r.checked, r.hits.size()));
  Checkpoint cp{spec_hash(spec), spec.seed, {}};
  for (const auto& hit : r.hits) {
    o.report.witnesses.push_back({{"graph6", emit_graph6(hit.graph)}, {"report", to_json(hit.report)}});
    o.report.lines.push_back(fmt::format("{} min_k={}", emit_graph6(hit.graph), hit.report.min_k.value_or(-1)));
    cp.graphs.push_back(hit.graph);
  }
  if (!checkpoint.empty()) {
    std::ofstream out(checkpoint);
    if (!out) throw UsageError(fmt::format("cannot write '{}'", checkpoint));
    write_checkpoint(out, cp);
  }
  return o;
}

Outcome cmd_saturate(const std::string& arg) {
  const Graph g = load_graph(arg);
  const Graph s = saturate_nil(g);
  Outcome o;
  o.report.command = "saturate";
  o.report.inputs["graph"] = emit_graph6(g);
  o.report.verdicts.push_back({{"graph6", emit_graph6(s)}, {"edges", s.size()}, {"max_nil", is_max_nil(s)}});
  o.report.lines.push_back(emit_graph6(s));
  o.report.lines.push_back(fmt::format("{} edges, maxnIL={}", s.size(), is_max_nil(s)));
  return o;
}

Outcome cmd_filter(const std::string& arg) {
  const Graph g = load_graph(arg);
  Outcome o;
  o.report.command = "filter";
  o.report.inputs["graph"] = emit_graph6(g);
  auto add = [&](const char* name, const FilterVerdict& v) {
    OJson j = to_json(v);
    j["filter"] = name;
    o.report.verdicts.push_back(j);
    std::string line = fmt::format("{}: {}", name, v.pass ? "pass" : "fail");
    if (v.evidence)
      line += fmt::format(" ({} on the {}, vertices {}, measured {} vs {} bound {})", rule_name(v.evidence->rule),
                          side_name(v.evidence->side), format_set(v.evidence->vertices), v.evidence->measured,
                          v.evidence->upper_bound ? "upper" : "lower", v.evidence->threshold);
    o.report.lines.push_back(line);
    if (!v.pass) o.code = 1;
  };
  add("basic", filter_basic(g));
  if (g.order() == 14) add("order14", filter_order14(g));
  if (g.order() == 15) add("order15", filter_order15(g));
  return o;
}

Outcome cmd_verify(bool long_run, bool json) {
  Outcome o;
  o.report.command = "verify";
  o.report.inputs["long"] = long_run;
  auto sink = [&](const CriterionResult& r) {
    if (!json) std::cout << format_result(r) << std::endl;
  };
  auto results = run_acceptance(sink);
  if (long_run) {
    auto extra = run_long_checks(sink);
    results.insert(results.end(), extra.begin(), extra.end());
  }
  int failed = 0;
  for (const auto& r : results) {
    o.report.verdicts.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) ++failed;
  }
  o.report.lines.push_back(fmt::format("{} of {} criteria passed", results.size() - failed, results.size()));
  o.code = failed ? 1 : 0;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected domination, k-compliance and minor tools for small graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit the JSON report");
  app.add_flag("--timing", opt.timing, "Include wall-clock time in the report");
  app.add_option("--threads", opt.threads, "Cap OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  std::string graph, target, expect, route = "domination", spec_path, checkpoint;
  int k = 0, q = 0, n = 0;
  Vertex open_v = -1, closed_v = -1;
  bool long_run = false, serial = false;
  std::optional<std::uint64_t> budget;

  auto* gammac = app.add_subcommand("gammac", "Connected domination number");
  gammac->add_option("graph", graph, "graph6, name, or @edgelist-file")->required();

  auto* comply = app.add_subcommand("comply", "k-compliance test");
  comply->add_option("-k", k, "Threshold")->required();
  comply->add_option("graph", graph, "graph6, name, or @edgelist-file")->required();
  comply->add_option("--expect", expect, "Exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"compliant", "non-compliant"}));
  comply->add_option("--route", route, "domination (default) or minor")->check(CLI::IsMember({"domination", "minor"}));

  auto* paley_cmd = app.add_subcommand("paley", "Paley graph QR_q");
  paley_cmd->add_option("q", q, "Prime = 1 (mod 4), at most 29")->required();

  auto* twin = app.add_subcommand("twin", "Add a twin vertex");
  auto* open_opt = twin->add_option("--open", open_v, "Open twin of vertex V");
  auto* closed_opt = twin->add_option("--closed", closed_v, "Closed twin of vertex V");
  open_opt->excludes(closed_opt);
  twin->add_option("graph", graph, "graph6, name, or @edgelist-file")->required();

  auto* minor = app.add_subcommand("minor", "Minor containment");
  minor->add_option("target", target, "Target graph (name or graph6)")->required();
  minor->add_option("graph", graph, "Host graph")->required();
  minor->add_option("--budget", budget, "Give up (unknown) after this many search states");

  auto* il = app.add_subcommand("il", "Intrinsic linking");
  il->add_option("graph", graph, "graph6, name, or @edgelist-file")->required();
  auto* ik = app.add_subcommand("ik", "Sufficient conditions for intrinsic knotting");
  ik->add_option("graph", graph, "graph6, name, or @edgelist-file")->required();
  auto* family = app.add_subcommand("petersen-family", "The seven Petersen-family graphs");

  auto* fn = app.add_subcommand("fn", "Exhaustive f(n)");
  fn->add_option("n", n, "Order, 1..8")->required();
  fn->add_flag("--long", long_run, "Allow the long-running n = 8");
  fn->add_flag("--serial", serial, "Use the serial reference kernel");

  auto* search = app.add_subcommand("search", "Search for k-non-compliant graphs");
  search->add_option("spec", spec_path, "JSON search spec")->required();
  search->add_option("--checkpoint", checkpoint, "Write surviving graphs to this file");

  auto* saturate = app.add_subcommand("saturate", "Complete a linklessly embeddable graph to a maxnIL one");
  saturate->add_option("graph", graph, "graph6, name, or @edgelist-file")->required();

  auto* filter = app.add_subcommand("filter", "Necessary-condition filters for 3-non-compliance");
  filter->add_option("graph", graph, "graph6, name, or @edgelist-file")->required();

  auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
  verify->add_flag("--long", long_run, "Also run the long-running checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_thread_count(opt.threads);
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (*gammac) out = cmd_gammac(graph);
    else if (*comply) out = cmd_comply(graph, k, expect, route);
    else if (*paley_cmd) out = cmd_paley(q);
    else if (*twin) {
      if (!*open_opt && !*closed_opt) throw UsageError("twin needs --open V or --closed V");
      out = cmd_twin(graph, *open_opt ? open_v : closed_v, static_cast<bool>(*closed_opt));
    } else if (*minor) out = cmd_minor(target, graph, budget);
    else if (*il) out = cmd_il(graph);
    else if (*ik) out = cmd_ik(graph);
    else if (*family) out = cmd_petersen_family();
    else if (*fn) out = cmd_fn(n, long_run, serial);
    else if (*search) out = cmd_search(spec_path, checkpoint);
    else if (*saturate) out = cmd_saturate(graph);
    else if (*filter) out = cmd_filter(graph);
    else if (*verify) out = cmd_verify(long_run, opt.json);
  } catch (const TheoremFalsified& e) {
    std::cerr << "theorem falsified: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  if (opt.timing) out.report.timing = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (opt.json ? render_json(out.report) : render_text(out.report));
  return out.code;
}
