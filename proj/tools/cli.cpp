#include "whirl/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "whirl/cantor.hpp"
#include "whirl/farey.hpp"
#include "whirl/json_io.hpp"
#include "whirl/pathsys.hpp"
#include "whirl/ubiquity.hpp"
#include "whirl/whirl.hpp"

namespace whirl::cli {

namespace {

using io::ordered_json;

// Reproducible sampling: mt19937_64 seeded with --seed, bounded draws by
// modulo. Identical on every platform, unlike the std distributions.
struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }
  std::mt19937_64 rng;
};

template <VertexLabel V>
std::string generic_dot(const Graph<V>& g, const std::vector<Edge<V>>& blue = {}) {
  const std::set<Edge<V>> highlighted(blue.begin(), blue.end());
  std::ostringstream out;
  out << "graph farey {\n";
  for (const auto& v : g.vertices()) out << "  \"" << to_label(v) << "\";\n";
  for (const auto& e : g.edges()) {
    out << "  \"" << to_label(e.first) << "\" -- \"" << to_label(e.second) << "\"";
    if (highlighted.contains(e)) out << " [color=blue]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// Writes via a temporary file and rename so readers never see partial output.
void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ParseError("cannot write " + tmp);
    f << text;
    if (!f) throw ParseError("failed writing " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw ParseError("cannot rename " + tmp + " to " + path);
}

std::vector<ordered_json> edge_list(const std::vector<WhirlEdge>& edges) {
  std::vector<ordered_json> out;
  for (const auto& e : edges) out.push_back({to_label(e.first), to_label(e.second)});
  return out;
}

struct Options {
  std::string out_file;
  std::string format = "json";
  int low = 1, high = 1, order = 0, level = 1;
  bool halved = false;
  std::string graph_file, u, v, method = "mincost";
  int k = 1;
  bool k_given = false;
  std::uint64_t seed = 1;
  std::size_t samples = 100, trials = 100, max_length = 10;
  std::uint64_t budget = kDefaultBudget;
};

ordered_json gen_whirl(const Options& o, std::string& text) {
  const auto g = whirl_graph(LevelWindow::make(o.low, o.high));
  if (o.format == "dot") text = to_dot(g);
  return io::graph_to_json(g);
}

ordered_json gen_farey(const Options& o, std::string& text) {
  if (o.halved) {
    const auto h = halved_farey(o.order);
    if (o.format == "dot") text = generic_dot(h.graph, h.blue);
    return io::colored_graph_to_json(h);
  }
  const auto g = farey_graph(o.order);
  if (o.format == "dot") text = generic_dot(g);
  return io::graph_to_json(g);
}

ordered_json gen_gstar(const Options& o) {
  const auto g = gstar(o.level);
  ordered_json j = io::graph_to_json(g.graph);
  j["matching"] = edge_list(g.matching.edges());
  return j;
}

ordered_json system_report(const SystemReport& r) {
  ordered_json j;
  j["pathsValid"] = r.paths_valid;
  j["sharedEndpoints"] = r.shared_endpoints;
  j["edgeDisjoint"] = r.edge_disjoint;
  j["orderCompatible"] = r.order_compatible;
  j["problems"] = r.problems;
  return j;
}

ordered_json run_paths(const Options& o, bool& ok) {
  std::ifstream f(o.graph_file);
  if (!f) throw ParseError("cannot read graph file " + o.graph_file);
  io::json parsed;
  try {
    parsed = io::json::parse(f);
  } catch (const io::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const auto g = io::whirl_graph_from_json(parsed);
  const auto u = parse_triadic(o.u);
  const auto v = parse_triadic(o.v);
  ordered_json j;
  j["method"] = o.method;
  PathSystem<TriadicRational> system;
  if (o.method == "maxflow") {
    system = max_edge_disjoint(g, u, v);
    if (o.k_given && static_cast<std::size_t>(o.k) < system.paths.size()) system.paths.resize(static_cast<std::size_t>(o.k));
  } else if (o.method == "mincost") {
    system = min_edge_system(g, u, v, o.k);
  } else {
    Sampler s(o.seed);
    const auto start = random_edge_disjoint(g, u, v, o.k, s.rng);
    const auto result = uncross(start);
    j["seed"] = o.seed;
    j["initialTotalEdges"] = start.total_edges();
    ordered_json steps = ordered_json::array();
    for (const auto& step : result.steps) {
      steps.push_back({{"x", to_label(step.x)},
                       {"y", to_label(step.y)},
                       {"edgesBefore", step.edges_before},
                       {"edgesAfter", step.edges_after}});
    }
    j["steps"] = std::move(steps);
    system = result.system;
  }
  const auto report = validate_system(system, g);
  ok = report.ok();
  j["system"] = io::path_system_to_json(system);
  j["totalEdges"] = system.total_edges();
  j["validation"] = system_report(report);
  return j;
}

ordered_json verify_lemma22(const Options& o, bool& ok) {
  if (o.level < 2) throw RangeError("lemma22 needs --level >= 2");
  Sampler s(o.seed);
  const auto window = LevelWindow::make(o.level, o.level + 1);
  const auto g = whirl_graph(window);
  const auto coarse = level_vertices(o.level - 1);
  std::size_t checked_paths = 0;
  ordered_json failures = ordered_json::array();
  for (std::size_t i = 0; i < o.samples; ++i) {
    std::size_t a = s.below(coarse.size());
    std::size_t b = s.below(coarse.size() - 1);
    if (b >= a) ++b;
    if (b < a) std::swap(a, b);
    const auto p = random_path(g, coarse[a], coarse[b], s.rng);
    if (!p) {
      failures.push_back("no path from " + to_label(coarse[a]) + " to " + to_label(coarse[b]));
      continue;
    }
    ++checked_paths;
    const auto r = check_lemma22(*p, coarse[a], coarse[b], o.level);
    if (!r.all_hold()) failures.push_back(to_label(*p));
  }
  ok = failures.empty();
  ordered_json j;
  j["check"] = "lemma22";
  j["level"] = o.level;
  j["window"] = {window.low, window.high};
  j["seed"] = o.seed;
  j["samples"] = o.samples;
  j["pathsChecked"] = checked_paths;
  j["failures"] = std::move(failures);
  j["verified"] = ok;
  return j;
}

ordered_json verify_kneip(const Options& o, bool& ok) {
  Sampler s(o.seed);
  const auto g = whirl_graph(LevelWindow::make(1, o.level));
  const auto& vs = g.vertices();
  ordered_json failures = ordered_json::array();
  std::size_t steps = 0;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const std::size_t a = s.below(vs.size());
    std::size_t b = s.below(vs.size() - 1);
    if (b >= a) ++b;
    const auto& u = vs[a];
    const auto& v = vs[b];
    const auto bound = max_edge_disjoint(g, u, v).size();
    const int k = 1 + static_cast<int>(s.below(bound));
    const auto best = min_edge_system(g, u, v, k);
    const auto start = random_edge_disjoint(g, u, v, k, s.rng);
    const auto result = uncross(start);
    steps += result.steps.size();
    const std::string where = to_label(u) + " -> " + to_label(v) + " k=" + std::to_string(k);
    if (best.size() != static_cast<std::size_t>(k) || !validate_system(best, g).ok()) {
      failures.push_back("mincost invalid at " + where);
    }
    if (result.system.size() != static_cast<std::size_t>(k) || !validate_system(result.system, g).ok()) {
      failures.push_back("uncross invalid at " + where);
    }
    if (best.total_edges() > result.system.total_edges()) failures.push_back("mincost beaten at " + where);
    for (const auto& step : result.steps) {
      if (step.edges_after >= step.edges_before) failures.push_back("non-decreasing step at " + where);
    }
  }
  ok = failures.empty();
  ordered_json j;
  j["check"] = "kneip";
  j["level"] = o.level;
  j["seed"] = o.seed;
  j["trials"] = o.trials;
  j["uncrossSteps"] = steps;
  j["failures"] = std::move(failures);
  j["verified"] = ok;
  return j;
}

ordered_json verify_theorem1(const Options& o, bool& ok) {
  if (o.level < 2) throw RangeError("theorem1 needs --level >= 2");
  const auto sweep = sweep_incompatibility(TriadicRational::zero(), TriadicRational::one(),
                                           LevelWindow::make(2, o.level), o.max_length, o.budget);
  ok = sweep.ok();
  ordered_json j;
  j["check"] = "theorem1";
  j["window"] = {2, o.level};
  j["maxLength"] = o.max_length;
  j["budget"] = o.budget;
  j["paths"] = sweep.paths;
  j["witnesses"] = sweep.witnesses;
  j["comparisons"] = sweep.comparisons;
  j["refutations"] = sweep.refutations;
  j["oracleNegatives"] = sweep.oracle_negatives;
  j["failures"] = sweep.failures;
  j["verified"] = ok;
  return j;
}

ordered_json verify_lemma31(const Options& o, bool& ok) {
  if (o.order < 1) throw RangeError("lemma31 needs --order >= 1");
  ok = true;
  ordered_json levels = ordered_json::array();
  MinorMap previous;
  bool nested = true;
  std::size_t vertices = 0;
  for (int n = 1; n <= o.order; ++n) {
    const auto map = phi(n);
    if (!map.extends(previous)) nested = false;
    vertices = map.size();
    levels.push_back({{"order", n}, {"vertices", map.size()}});
    previous = map;
  }
  ok = nested;
  ordered_json j;
  j["check"] = "lemma31";
  j["order"] = o.order;
  j["levels"] = std::move(levels);
  j["nested"] = nested;
  j["verified"] = ok;
  j["summary"] = ok ? "iso verified, " + std::to_string(vertices) + " vertices" : "iso failed";
  return j;
}

ordered_json verify_theorem2(const Options& o, bool& ok) {
  try {
    const auto a = theorem2_assembly(o.level);
    ok = a.verified();
    return io::assembly_to_json(a);
  } catch (const StructureError&) {
    ok = false;
    ordered_json j;
    j["level"] = o.level;
    j["verified"] = false;
    j["branchSets"] = ordered_json::array();
    j["fareyOrder"] = o.level - 2;
    return j;
  }
}

ordered_json comparison(const DeterminantComparison& c) {
  return {{"vertices", c.vertices},
          {"graphEdges", c.graph_edges},
          {"determinantEdges", c.determinant_edges},
          {"labelsReduced", c.labels_reduced},
          {"equal", c.equal}};
}

ordered_json verify_sternbrocot(const Options& o, bool& ok) {
  const auto r = stern_brocot_check(o.order);
  ok = r.ok();
  ordered_json j;
  j["check"] = "sternbrocot";
  j["order"] = o.order;
  j["halved"] = comparison(r.halved);
  j["full"] = comparison(r.full);
  j["verified"] = ok;
  return j;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandOutcome outcome;
  Options o;
  CLI::App app{"Whirl graph and Farey minor toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_file, "Also write the output to this file");

  auto* gw = app.add_subcommand("gen-whirl", "Emit the whirl graph on levels [low, high]");
  gw->add_option("--low", o.low)->required();
  gw->add_option("--high", o.high)->required();
  gw->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  auto* gf = app.add_subcommand("gen-farey", "Emit the order-N Farey graph");
  gf->add_option("--order", o.order)->required();
  gf->add_flag("--halved", o.halved, "Emit the halved Farey graph with its blue edges");
  gf->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  auto* gg = app.add_subcommand("gen-gstar", "Emit the Cantor subgraph and its matching");
  gg->add_option("--level", o.level)->required();

  auto* paths = app.add_subcommand("paths", "Compute an edge-disjoint path system");
  paths->add_option("--graph", o.graph_file)->required();
  paths->add_option("--u", o.u)->required();
  paths->add_option("--v", o.v)->required();
  auto* k_opt = paths->add_option("--k", o.k);
  paths->add_option("--method", o.method)->check(CLI::IsMember({"mincost", "uncross", "maxflow"}));
  paths->add_option("--seed", o.seed);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto* v22 = verify->add_subcommand("lemma22", "Random paths against the cut-vertex lemma");
  v22->add_option("--level", o.level)->required();
  v22->add_option("--samples", o.samples)->required();
  v22->add_option("--seed", o.seed);
  auto* vk = verify->add_subcommand("kneip", "Random instances of the uncrossing theorem");
  vk->add_option("--level", o.level)->required();
  vk->add_option("--trials", o.trials)->required();
  vk->add_option("--seed", o.seed);
  auto* v1 = verify->add_subcommand("theorem1", "Incompatibility sweep over short 0-1 paths");
  v1->add_option("--level", o.level)->required();
  v1->add_option("--budget", o.budget)->required();
  v1->add_option("--max-length", o.max_length);
  auto* v31 = verify->add_subcommand("lemma31", "Order-isomorphisms onto halved Farey graphs");
  v31->add_option("--order", o.order)->required();
  auto* v2 = verify->add_subcommand("theorem2", "Farey minor with branch sets of size two");
  v2->add_option("--level", o.level)->required();
  auto* vsb = verify->add_subcommand("sternbrocot", "Recursive vs determinant Farey definitions");
  vsb->add_option("--order", o.order)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    outcome.exit_code = kUsageError;
    return outcome;
  }
  o.k_given = k_opt->count() > 0;

  std::string text;
  bool ok = true;
  try {
    if (*gw) {
      outcome.report = gen_whirl(o, text);
    } else if (*gf) {
      outcome.report = gen_farey(o, text);
    } else if (*gg) {
      outcome.report = gen_gstar(o);
    } else if (*paths) {
      outcome.report = run_paths(o, ok);
    } else if (*v22) {
      outcome.report = verify_lemma22(o, ok);
    } else if (*vk) {
      outcome.report = verify_kneip(o, ok);
    } else if (*v1) {
      outcome.report = verify_theorem1(o, ok);
    } else if (*v31) {
      outcome.report = verify_lemma31(o, ok);
    } else if (*v2) {
      outcome.report = verify_theorem2(o, ok);
    } else if (*vsb) {
      outcome.report = verify_sternbrocot(o, ok);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    outcome.exit_code = kBudgetExceeded;
    return outcome;
  } catch (const StructureError& e) {
    err << "verification failed: " << e.what() << "\n";
    outcome.exit_code = kVerificationFailed;
    return outcome;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    outcome.exit_code = kUsageError;
    return outcome;
  }

  if (text.empty()) text = outcome.report.dump(2) + "\n";
  out << text;
  if (!o.out_file.empty()) {
    try {
      write_atomically(o.out_file, text);
      outcome.artifacts.push_back(o.out_file);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      outcome.exit_code = kUsageError;
      return outcome;
    }
  }
  outcome.exit_code = ok ? kOk : kVerificationFailed;
  return outcome;
}

}  // namespace whirl::cli
