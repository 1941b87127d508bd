// Command-line front end. Graphs are read in the JSON graph format from a
// file or stdin ("-"); results go to stdout as JSON (or CSV / DOT where the
// command supports --format). Exit codes: 0 true, 1 false, 2 budget or
// inconclusive, 3 error.
#include <cstdio>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semideg/classifiers.hpp"
#include "semideg/constructions.hpp"
#include "semideg/error.hpp"
#include "semideg/explorer.hpp"
#include "semideg/generators.hpp"
#include "semideg/partition.hpp"
#include "semideg/serialize.hpp"
#include "semideg/solvers.hpp"
#include "semideg/transforms.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace semideg;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBudget = 2;
constexpr int kExitError = 3;

struct Globals {
  std::uint64_t budget_ms = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  int exit_code = kExitTrue;

  Budget budget() const { return {budget_ms, 0}; }
};

std::string read_input(const std::string& path) {
  if (path != "-") return read_text_file(path);
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

OrientedGraph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

FourPartition load_partition(const std::string& path, std::size_t n) {
  return parse_partition(read_text_file(path), n);
}

json graph_json(const OrientedGraph& g) { return json::parse(serialize(g)); }
json partition_json(const FourPartition& p) { return json::parse(serialize_partition(p)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::kTrue: return kExitTrue;
    case Outcome::kFalse: return kExitFalse;
    case Outcome::kBudget: return kExitBudget;
  }
  return kExitError;
}

void emit_graph(const Globals& g, const OrientedGraph& graph) {
  if (g.format == "dot")
    std::cout << serialize(graph, GraphFormat::kDot);
  else
    std::cout << serialize(graph) << "\n";
}

json solve_json(const SolveResult& r) {
  json j;
  j["verdict"] = to_string(r.outcome);
  j["certificate"] = r.certificate ? json(r.certificate->sequences) : json(nullptr);
  j["nodes"] = r.nodes;
  return j;
}

std::vector<TerminalPair> parse_pairs(const std::vector<std::string>& items) {
  std::vector<TerminalPair> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::kParseError, "terminal pair '" + item + "' is not x:y");
    try {
      out.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "terminal pair '" + item + "' is not x:y");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void add_gen(CLI::App& app, Globals& g) {
  auto* gen = app.add_subcommand("gen", "Build graphs");
  gen->require_subcommand(1);

  {
    auto* c = gen->add_subcommand("extremal", "Member of the extremal family");
    auto n = std::make_shared<std::size_t>(0);
    auto mu = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    c->add_option("--n", *n, "Order, a multiple of 4")->required();
    c->add_option("--mu", *mu, "Parameter mu")->required();
    c->add_option("--partition-out", *out, "Write the partition JSON here");
    c->callback([&g, n, mu, out] {
      const auto m = build_extremal_member(*n, *mu, g.seed);
      if (!out->empty()) write_text_file(*out, serialize_partition(m.partition) + "\n");
      emit_graph(g, m.graph);
    });
  }
  {
    auto* c = gen->add_subcommand("klinked-cx", "Semidegree-bounded graph that is not k-linked");
    auto n = std::make_shared<std::size_t>(0);
    auto k = std::make_shared<std::size_t>(0);
    auto out = std::make_shared<std::string>();
    c->add_option("--n", *n, "Order")->required();
    c->add_option("--k", *k, "Number of terminal pairs")->required();
    c->add_option("--gadget-out", *out, "Write the vertex roles (b, c, x, y) here");
    c->callback([&g, n, k, out] {
      const auto cx = build_linkage_counterexample(*n, *k);
      if (!out->empty()) {
        json j;
        j["k"] = cx.gadget.k;
        j["b"] = cx.gadget.b;
        j["c"] = cx.gadget.c;
        j["x"] = cx.gadget.x;
        j["y"] = cx.gadget.y;
        write_text_file(*out, j.dump() + "\n");
      }
      emit_graph(g, cx.graph);
    });
  }
  {
    auto* c = gen->add_subcommand("cycle", "Directed cycle");
    auto n = std::make_shared<std::size_t>(0);
    c->add_option("--n", *n)->required();
    c->callback([&g, n] { emit_graph(g, directed_cycle(*n)); });
  }
  {
    auto* c = gen->add_subcommand("tournament", "Tournament");
    auto n = std::make_shared<std::size_t>(0);
    auto kind = std::make_shared<std::string>("near-regular");
    c->add_option("--n", *n)->required();
    c->add_option("--kind", *kind)->check(CLI::IsMember({"near-regular", "rotational", "transitive"}));
    c->callback([&g, n, kind] {
      if (*kind == "rotational")
        emit_graph(g, rotational_tournament(*n));
      else if (*kind == "transitive")
        emit_graph(g, transitive_tournament(*n));
      else
        emit_graph(g, near_regular_tournament(*n));
    });
  }
  {
    auto* c = gen->add_subcommand("random", "Random oriented graph");
    auto n = std::make_shared<std::size_t>(0);
    auto p = std::make_shared<double>(0.5);
    c->add_option("--n", *n)->required();
    c->add_option("--p", *p, "Probability that a pair carries an arc");
    c->callback([&g, n, p] { emit_graph(g, random_oriented(*n, *p, g.seed)); });
  }
  {
    auto* c = gen->add_subcommand("min-semidegree", "Random graph with a semidegree floor");
    auto n = std::make_shared<std::size_t>(0);
    auto d = std::make_shared<std::size_t>(0);
    auto rate = std::make_shared<double>(0.5);
    c->add_option("--n", *n)->required();
    c->add_option("--d", *d, "Minimum semidegree")->required();
    c->add_option("--deletion-rate", *rate);
    c->callback([&g, n, d, rate] { emit_graph(g, random_min_semidegree(*n, *d, g.seed, *rate)); });
  }
}

// ---------------------------------------------------------------------------

void add_check(CLI::App& app, Globals& g) {
  auto* check = app.add_subcommand("check", "Verify structural definitions");
  check->require_subcommand(1);
  auto graph = std::make_shared<std::string>("-");
  check->add_option("--graph", *graph, "Graph file, - for stdin");

  check->add_subcommand("degrees", "Degree profile")->callback([graph] {
    const auto gr = load_graph(*graph);
    const auto dp = degree_profile(gr);
    json j;
    j["n"] = gr.order();
    j["arcs"] = gr.arc_total();
    j["min_out"] = dp.min_out;
    j["min_in"] = dp.min_in;
    j["delta0"] = dp.min_semidegree;
    j["delta"] = dp.min_degree;
    j["deltastar"] = dp.star;
    emit(j);
  });

  {
    auto* c = check->add_subcommand("expander", "Robust outexpander test");
    auto mu = std::make_shared<double>(0.0);
    auto tau = std::make_shared<double>(0.0);
    auto opts = std::make_shared<ExpanderOptions>();
    c->add_option("--mu", *mu)->required();
    c->add_option("--tau", *tau)->required();
    c->add_option("--exhaustive-limit", opts->exhaustive_limit);
    c->add_flag("--sample", opts->allow_sampling, "Sample subsets above the exhaustive limit");
    c->add_option("--samples", opts->samples);
    c->callback([&g, graph, mu, tau, opts] {
      opts->seed = g.seed;
      const auto r = is_robust_outexpander(load_graph(*graph), ExpanderParams::make(*mu, *tau), *opts);
      json j;
      switch (r.verdict) {
        case ExpansionVerdict::kExpander: j["verdict"] = "expander"; g.exit_code = kExitTrue; break;
        case ExpansionVerdict::kNotExpander: j["verdict"] = "not-expander"; g.exit_code = kExitFalse; break;
        case ExpansionVerdict::kNotRefuted: j["verdict"] = "not-refuted"; g.exit_code = kExitBudget; break;
      }
      j["exhaustive"] = r.exhaustive;
      j["subsets_checked"] = r.subsets_checked;
      if (r.witness) j["witness"] = *r.witness;
      emit(j);
    });
  }
  {
    auto* c = check->add_subcommand("classify", "Acceptable / circular / good vertices");
    auto part = std::make_shared<std::string>();
    auto cc = std::make_shared<double>(0.1);
    auto mu = std::make_shared<double>(0.0);
    c->add_option("--partition", *part)->required();
    c->add_option("--c", *cc);
    c->add_option("--mu", *mu)->required();
    c->callback([graph, part, cc, mu] {
      const auto gr = load_graph(*graph);
      const auto p = load_partition(*part, gr.order());
      const auto params = ClassifierParams::make(*cc, *mu, gr.order());
      json j;
      j["alpha"] = params.alpha();
      j["beta"] = params.beta();
      j["vertices"] = json::array();
      std::size_t unacceptable = 0, non_circular = 0;
      for (Vertex v = 0; v < gr.order(); ++v) {
        const auto cls = classify_vertex(gr, p, v, params);
        json e;
        e["vertex"] = v;
        e["class"] = p.class_of(v) + 1;
        e["acceptable"] = cls.acceptable;
        e["pattern"] = cls.pattern >= 0
                           ? json(std::string(acceptance_patterns()[static_cast<std::size_t>(cls.pattern)].label))
                           : json(nullptr);
        e["circular"] = cls.circular;
        if (p.imbalance() != 0) e["good"] = classify_good(gr, p, v, params).good;
        unacceptable += !cls.acceptable;
        non_circular += !cls.circular;
        j["vertices"].push_back(e);
      }
      j["unacceptable"] = unacceptable;
      j["non_circular"] = non_circular;
      emit(j);
    });
  }
  {
    auto* c = check->add_subcommand("extremal", "Membership checks for a given partition");
    auto part = std::make_shared<std::string>();
    auto cc = std::make_shared<double>(0.1);
    auto mu = std::make_shared<double>(0.0);
    auto rot = std::make_shared<bool>(false);
    c->add_option("--partition", *part)->required();
    c->add_option("--c", *cc);
    c->add_option("--mu", *mu)->required();
    c->add_flag("--rotations", *rot, "Also try the cyclic rotations of the partition");
    c->callback([&g, graph, part, cc, mu, rot] {
      const auto gr = load_graph(*graph);
      const auto p = load_partition(*part, gr.order());
      const auto r = verify_extremal_member(gr, p, ClassifierParams::make(*cc, *mu, gr.order()), *rot);
      json j;
      j["passed"] = r.passed();
      j["sizes_ok"] = r.sizes_ok;
      j["arcs_ok"] = r.arcs_ok;
      j["arc_checks"] = json::array();
      for (const auto& a : r.arc_checks)
        j["arc_checks"].push_back({{"label", a.label}, {"value", a.value}, {"bound", a.bound}, {"pass", a.pass}});
      j["vertices_ok"] = r.vertices_ok;
      j["all_acceptable"] = r.all_acceptable;
      j["non_circular"] = r.non_circular;
      j["non_circular_bound"] = r.non_circular_bound;
      j["rotation"] = r.rotation;
      emit(j);
      g.exit_code = r.passed() ? kExitTrue : kExitFalse;
    });
  }
  {
    auto* c = check->add_subcommand("regular-pair", "Exhaustive (super-)regularity of a pair");
    auto a = std::make_shared<std::vector<Vertex>>();
    auto b = std::make_shared<std::vector<Vertex>>();
    auto params = std::make_shared<RegularityParams>();
    auto super = std::make_shared<bool>(false);
    auto limit = std::make_shared<std::size_t>(12);
    c->add_option("--a", *a, "Vertices of A, comma separated")->required()->delimiter(',');
    c->add_option("--b", *b, "Vertices of B, comma separated")->required()->delimiter(',');
    c->add_option("--eps", params->eps)->required();
    c->add_option("--d", params->d);
    c->add_flag("--super", *super);
    c->add_option("--side-limit", *limit);
    c->callback([&g, graph, a, b, params, super, limit] {
      const auto r = is_regular_pair(load_graph(*graph), *a, *b, *params, *super, *limit);
      json j;
      j["verdict"] = r.verdict;
      j["density"] = r.density;
      j["regular"] = r.regular;
      if (*super) j["super_regular"] = r.super_regular;
      if (r.witness) j["witness"] = {{"x", r.witness->first}, {"y", r.witness->second}};
      if (r.degree_witness) j["degree_witness"] = *r.degree_witness;
      emit(j);
      g.exit_code = r.verdict ? kExitTrue : kExitFalse;
    });
  }
  {
    auto* c = check->add_subcommand("expansion-upgrade", "Degree + expansion implication on a reduced graph");
    auto d = std::make_shared<double>(0.001);
    auto mu = std::make_shared<double>(0.01);
    auto tau = std::make_shared<double>(0.05);
    c->add_option("--d", *d);
    c->add_option("--mu", *mu);
    c->add_option("--tau", *tau);
    c->callback([&g, graph, d, mu, tau] {
      const auto r = check_expansion_upgrade(load_graph(*graph), *d, *mu, *tau);
      json j;
      j["degree_condition"] = r.degree_condition;
      j["third_expander"] = r.third_expander;
      j["hypothesis"] = r.hypothesis;
      j["conclusion"] = r.conclusion;
      j["implication_holds"] = r.implication_holds();
      if (r.conclusion_witness) j["witness"] = *r.conclusion_witness;
      emit(j);
      g.exit_code = r.implication_holds() ? kExitTrue : kExitFalse;
    });
  }
}

// ---------------------------------------------------------------------------

void add_solve(CLI::App& app, Globals& g) {
  auto* solve = app.add_subcommand("solve", "Exact solvers");
  solve->require_subcommand(1);
  auto graph = std::make_shared<std::string>("-");
  solve->add_option("--graph", *graph, "Graph file, - for stdin");

  auto finish = [&g](const SolveResult& r) {
    emit(solve_json(r));
    g.exit_code = exit_for(r.outcome);
  };

  solve->add_subcommand("ham-cycle", "Hamiltonian cycle")->callback([&g, graph, finish] {
    finish(hamiltonian_cycle(load_graph(*graph), g.budget()));
  });
  {
    auto* c = solve->add_subcommand("ham-path", "Hamiltonian path between two vertices");
    auto from = std::make_shared<Vertex>(0);
    auto to = std::make_shared<Vertex>(0);
    c->add_option("--from", *from)->required();
    c->add_option("--to", *to)->required();
    c->callback([&g, graph, from, to, finish] {
      finish(hamiltonian_path(load_graph(*graph), *from, *to, g.budget()));
    });
  }
  {
    auto* c = solve->add_subcommand("cycle-factor", "Disjoint cycles of given lengths covering V");
    auto lengths = std::make_shared<std::vector<std::size_t>>();
    c->add_option("--lengths", *lengths, "Cycle lengths, comma separated")->required()->delimiter(',');
    c->callback([&g, graph, lengths, finish] {
      const auto gr = load_graph(*graph);
      finish(cycle_factor(gr, LengthPartition::make(*lengths, gr.order()), g.budget()));
    });
  }
  {
    auto* c = solve->add_subcommand("k-ordered", "Hamiltonian cycle through a sequence in order");
    auto seq = std::make_shared<std::vector<Vertex>>();
    c->add_option("--seq", *seq, "Vertex sequence, comma separated")->required()->delimiter(',');
    c->callback([&g, graph, seq, finish] {
      finish(k_ordered_hamiltonian(load_graph(*graph), *seq, g.budget()));
    });
  }
  {
    auto* c = solve->add_subcommand("k-linked", "Disjoint paths for given terminal pairs");
    auto pairs = std::make_shared<std::vector<std::string>>();
    auto spanning = std::make_shared<bool>(false);
    c->add_option("--pairs", *pairs, "Terminal pairs x:y, comma separated")->required()->delimiter(',');
    c->add_flag("--spanning", *spanning, "Paths must cover every vertex");
    c->callback([&g, graph, pairs, spanning, finish] {
      finish(k_linkage(load_graph(*graph), parse_pairs(*pairs), *spanning, g.budget()));
    });
  }
  {
    auto* c = solve->add_subcommand("linked", "Is the graph k-linked (every terminal system)");
    auto k = std::make_shared<std::size_t>(1);
    auto spanning = std::make_shared<bool>(false);
    c->add_option("--k", *k)->required();
    c->add_flag("--spanning", *spanning);
    c->callback([&g, graph, k, spanning] {
      const auto r = is_k_linked(load_graph(*graph), *k, *spanning, g.budget());
      json j;
      j["verdict"] = to_string(r.outcome);
      j["systems_checked"] = r.systems_checked;
      j["failing_pairs"] = r.failing_pairs ? json(*r.failing_pairs) : json(nullptr);
      emit(j);
      g.exit_code = exit_for(r.outcome);
    });
  }
  solve->add_subcommand("shc", "Hamiltonian path between every ordered pair")->callback([&g, graph] {
    const auto r = strongly_hamiltonian_connected(load_graph(*graph), g.budget());
    json j;
    j["verdict"] = to_string(r.outcome);
    j["pairs_checked"] = r.pairs_checked;
    j["failing_pair"] = r.failing_pair ? json(*r.failing_pair) : json(nullptr);
    emit(j);
    g.exit_code = exit_for(r.outcome);
  });
  solve->add_subcommand("diameter", "Longest shortest-path distance")->callback([&g, graph] {
    const std::size_t d = diameter(load_graph(*graph));
    json j;
    j["diameter"] = d == kInfiniteDistance ? json(nullptr) : json(d);
    j["strongly_connected"] = d != kInfiniteDistance;
    emit(j);
    g.exit_code = d == kInfiniteDistance ? kExitFalse : kExitTrue;
  });
  {
    auto* c = solve->add_subcommand("pancyclic", "Cycles of every length in a range");
    auto lo = std::make_shared<std::size_t>(3);
    auto hi = std::make_shared<std::size_t>(0);
    c->add_option("--min", *lo);
    c->add_option("--max", *hi, "Defaults to n");
    c->callback([&g, graph, lo, hi] {
      const auto gr = load_graph(*graph);
      const auto r = pancyclic_range(gr, *lo, *hi ? *hi : gr.order(), g.budget());
      json j;
      Outcome overall = Outcome::kTrue;
      j["lengths"] = json::array();
      for (const auto& [len, res] : r.per_length) {
        json e = solve_json(res);
        e["length"] = len;
        j["lengths"].push_back(e);
        if (res.outcome == Outcome::kFalse) overall = Outcome::kFalse;
        if (res.outcome == Outcome::kBudget && overall == Outcome::kTrue) overall = Outcome::kBudget;
      }
      j["verdict"] = to_string(overall);
      emit(j);
      g.exit_code = exit_for(overall);
    });
  }
}

// ---------------------------------------------------------------------------

json contraction_json(const Contraction& c) {
  json j;
  j["graph"] = graph_json(c.graph);
  j["partition"] = partition_json(c.partition);
  j["expansion"] = c.expansion;
  return j;
}

void add_transform(CLI::App& app, Globals& g) {
  auto* tr = app.add_subcommand("transform", "Graph surgeries");
  tr->require_subcommand(1);
  auto graph = std::make_shared<std::string>("-");
  tr->add_option("--graph", *graph, "Graph file, - for stdin");

  {
    auto* c = tr->add_subcommand("contract", "Contract a path system");
    auto part = std::make_shared<std::string>();
    auto paths = std::make_shared<std::string>();
    c->add_option("--partition", *part)->required();
    c->add_option("--paths", *paths, "JSON list of vertex lists")->required();
    c->callback([graph, part, paths] {
      const auto gr = load_graph(*graph);
      const auto p = load_partition(*part, gr.order());
      PathSystem system;
      try {
        system = json::parse(read_text_file(*paths)).get<PathSystem>();
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParseError, std::string("path system: ") + e.what());
      }
      emit(contraction_json(contract_paths(gr, p, system)));
    });
  }
  {
    auto* c = tr->add_subcommand("merge", "Merge u and v into one vertex");
    auto u = std::make_shared<Vertex>(0);
    auto v = std::make_shared<Vertex>(0);
    c->add_option("--u", *u)->required();
    c->add_option("--v", *v)->required();
    c->callback([&g, graph, u, v] {
      const auto r = merge_endpoints(load_graph(*graph), *u, *v, g.seed);
      json j;
      j["graph"] = graph_json(r.graph);
      j["w"] = r.w;
      j["original"] = r.original;
      j["n_u"] = r.n_u;
      j["n_v"] = r.n_v;
      emit(j);
    });
  }
  auto add_params = [](CLI::App* c, std::shared_ptr<std::string> part, std::shared_ptr<double> cc,
                       std::shared_ptr<double> mu) {
    c->add_option("--partition", *part)->required();
    c->add_option("--c", *cc);
    c->add_option("--mu", *mu)->required();
  };
  {
    auto* c = tr->add_subcommand("rebalance", "Relocate bad vertices");
    auto part = std::make_shared<std::string>();
    auto cc = std::make_shared<double>(0.1);
    auto mu = std::make_shared<double>(0.0);
    add_params(c, part, cc, mu);
    c->callback([&g, graph, part, cc, mu] {
      const auto gr = load_graph(*graph);
      const auto r = relocate_bad_vertices(gr, load_partition(*part, gr.order()),
                                           ClassifierParams::make(*cc, *mu, gr.order()));
      json j;
      j["outcome"] = to_string(r.outcome);
      j["moves"] = json::array();
      for (const auto& m : r.moves)
        j["moves"].push_back({{"vertex", m.vertex}, {"from", m.from + 1}, {"to", m.to + 1}, {"trigger", m.trigger}});
      j["stuck_vertex"] = r.stuck_vertex ? json(*r.stuck_vertex) : json(nullptr);
      j["partition"] = partition_json(r.partition);
      emit(j);
      g.exit_code = r.outcome == RelocationOutcome::kStuck ? kExitFalse : kExitTrue;
    });
  }
  {
    auto* c = tr->add_subcommand("balance", "Equalise the four classes by path contraction");
    auto part = std::make_shared<std::string>();
    auto cc = std::make_shared<double>(0.1);
    auto mu = std::make_shared<double>(0.0);
    add_params(c, part, cc, mu);
    c->callback([graph, part, cc, mu] {
      const auto gr = load_graph(*graph);
      const auto r = balance_classes(gr, load_partition(*part, gr.order()),
                                     ClassifierParams::make(*cc, *mu, gr.order()));
      json j = contraction_json(r.contraction);
      j["matching"] = json::array();
      for (const Arc& a : r.m0) j["matching"].push_back({a.tail, a.head});
      j["absorbing_paths"] = r.absorbing_paths;
      j["r13"] = r.r13 ? json(*r.r13) : json(nullptr);
      j["r21"] = r.r21 ? json(*r.r21) : json(nullptr);
      emit(j);
    });
  }
  {
    auto* c = tr->add_subcommand("split", "Random split with degree-retention report");
    auto spec = std::make_shared<ClusterSplit>();
    c->add_option("--targets", spec->targets, "Part sizes, comma separated")->required()->delimiter(',');
    c->add_option("--ratios", spec->ratios, "Ratios xi, comma separated")->required()->delimiter(',');
    c->add_option("--eta", spec->eta);
    c->callback([&g, graph, spec] {
      spec->seed = g.seed;
      const auto r = random_split(load_graph(*graph), *spec);
      json j;
      j["retention_ok"] = r.retention_ok();
      j["violation_count"] = r.violation_count;
      j["violations"] = json::array();
      for (const auto& v : r.violations)
        j["violations"].push_back({{"vertex", v.vertex}, {"part", v.part}, {"sigma", v.out ? "+" : "-"}});
      j["parts"] = json::array();
      for (const auto& p : r.parts)
        j["parts"].push_back({{"members", p.members},
                              {"retention_ok", p.retention_ok},
                              {"worst_margin", p.worst_margin},
                              {"min_semidegree", p.min_semidegree},
                              {"semidegree_ok", p.semidegree_ok}});
      emit(j);
      g.exit_code = r.retention_ok() ? kExitTrue : kExitFalse;
    });
  }
}

// ---------------------------------------------------------------------------

void add_sweep(CLI::App& app, Globals& g) {
  auto* c = app.add_subcommand("sweep", "Threshold sweep over enumerated or sampled graphs");
  auto o = std::make_shared<SweepOptions>();
  auto property = std::make_shared<std::string>("hamiltonian");
  auto threshold = std::make_shared<std::string>();
  auto mode = std::make_shared<std::string>("exhaustive");
  auto cx_dir = std::make_shared<std::string>();
  c->add_option("--n", o->n)->required();
  c->add_option("--property", *property,
                "hamiltonian | pancyclic | shc | k-ordered(K) | k-linked(K) | cycle-factor(all|t=T|L+L..)");
  c->add_option("--threshold", *threshold, "e.g. \"d0 >= (3n-4)/8\"");
  c->add_option("--mode", *mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  c->add_option("--samples", o->samples);
  c->add_option("--max-attempts", o->max_attempts);
  c->add_option("--density", o->density);
  c->add_option("--k", o->k, "Value of k in the threshold (default: the property's k)");
  c->add_option("--total-ms", o->total_time_ms, "Stop the whole sweep after this many ms");
  c->add_option("--counterexample-dir", *cx_dir, "Write failing graphs here");
  c->callback([&g, o, property, threshold, mode, cx_dir] {
    o->property = PropertySpec::parse(*property);
    o->threshold = Threshold::parse(*threshold);
    o->mode = *mode == "sampled" ? SweepMode::kSampled : SweepMode::kExhaustive;
    o->seed = g.seed;
    o->budget = g.budget();
    const auto report = sweep(*o);
    if (!cx_dir->empty()) write_counterexamples(report, *cx_dir);
    const auto format = g.format == "csv" ? ReportFormat::kCsv : ReportFormat::kJson;
    std::cout << render_report(report, format, cx_dir->empty() ? "counterexamples" : *cx_dir);
    std::fprintf(stderr, "sweep: %zu examined, %zu meet the threshold, %zu failures (%llu ms)\n",
                 report.examined, report.accepted, report.failures,
                 static_cast<unsigned long long>(report.runtime_ms));
    if (report.failures > 0)
      g.exit_code = kExitFalse;
    else if (!report.complete)
      g.exit_code = kExitBudget;
  });
}

void add_suite(CLI::App& app, Globals& g) {
  auto* c = app.add_subcommand("suite", "Run the acceptance criteria");
  auto only = std::make_shared<std::vector<int>>();
  c->add_option("--only", *only, "Criterion ids, comma separated")->delimiter(',');
  c->callback([&g, only] {
    SuiteOptions o;
    o.only = *only;
    o.on_result = [](const CriterionResult& r) {
      std::cout << format_criterion(r) << std::endl;
    };
    bool all = true;
    for (const auto& r : run_acceptance_suite(o)) all = all && r.pass;
    g.exit_code = all ? kExitTrue : kExitFalse;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented-graph semidegree toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget-ms", g.budget_ms, "Time budget per solver call (0 = none)");
  app.add_option("--seed", g.seed, "Seed for randomised commands");
  app.add_option("--format", g.format, "json | csv | dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  add_gen(app, g);
  add_check(app, g);
  add_solve(app, g);
  add_transform(app, g);
  add_sweep(app, g);
  add_suite(app, g);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  } catch (const semideg::Error& e) {
    json j;
    j["error"] = std::string(semideg::to_string(e.code()));
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"internal\",\"message\":" << json(e.what()).dump() << "}\n";
    return kExitError;
  }
  return g.exit_code;
}
