#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "semideg/classifiers.hpp"
#include "semideg/constructions.hpp"
#include "semideg/enumerate.hpp"
#include "semideg/error.hpp"
#include "semideg/explorer.hpp"
#include "semideg/generators.hpp"
#include "semideg/oracle.hpp"
#include "semideg/random.hpp"
#include "semideg/transforms.hpp"

namespace semideg {

namespace {

struct Measured {
  bool pass = false;
  std::string measured;
  std::string expected;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Measured linkage_counterexample(const SuiteHooks& hooks) {
  const auto cx = build_linkage_counterexample(10, 2);
  const std::size_t d0 = min_semidegree(cx.graph);
  const Rational bound = Rational::make(10, 4) + Rational::make(3 * 2, 2) - Rational::make(5, 2);
  const std::vector<TerminalPair> pairs{{cx.gadget.x[0], cx.gadget.y[0]},
                                        {cx.gadget.x[1], cx.gadget.y[1]}};
  const auto r = hooks.k_linkage(cx.graph, pairs, false, {});
  return {bound == Rational::make(3) && d0 == 3 && r.outcome == Outcome::kFalse,
          fmt("delta0=%zu bound=%s linkage=%s", d0, bound.text().c_str(), to_string(r.outcome)),
          "delta0=3 bound=3 linkage=false"};
}

Measured oracle_equivalence(const SuiteHooks& hooks) {
  std::size_t graphs = 0, ham = 0, cycle_mismatch = 0, factor_mismatch = 0, bad_certificates = 0;
  const auto single = LengthPartition::make({5}, 5);
  enumerate_labelled(5, [&](const OrientedGraph& g) {
    ++graphs;
    const bool expected = oracle_hamiltonian_cycle(g);
    const auto r = hooks.hamiltonian_cycle(g, {});
    const bool got = r.outcome == Outcome::kTrue;
    ham += expected;
    cycle_mismatch += got != expected;
    if (got && (!r.certificate || !validate_cycle(g, r.certificate->sequences.at(0), true)))
      ++bad_certificates;
    const auto f = hooks.cycle_factor(g, single, {});
    factor_mismatch += f.outcome != r.outcome;
    return true;
  });
  return {graphs == 59049 && cycle_mismatch == 0 && factor_mismatch == 0 && bad_certificates == 0,
          fmt("graphs=%zu hamiltonian=%zu mismatches=%zu factor_mismatches=%zu bad_certs=%zu",
              graphs, ham, cycle_mismatch, factor_mismatch, bad_certificates),
          "graphs=59049 mismatches=0 factor_mismatches=0 bad_certs=0"};
}

Measured threshold_sanity(const SuiteHooks& hooks) {
  auto run = [&](std::size_t n, const char* threshold) {
    SweepOptions o;
    o.n = n;
    o.threshold = Threshold::parse(threshold);
    o.evaluator = [&](const OrientedGraph& g) {
      const auto r = hooks.hamiltonian_cycle(g, {});
      return PropertyVerdict{r.outcome, ""};
    };
    return sweep(o);
  };
  const auto five = run(5, "d0 >= 2");
  const auto four = run(4, "d0 >= (3n-4)/8");
  return {five.complete && five.accepted > 0 && five.failures == 0 && four.failures >= 1,
          fmt("n=5: %zu graphs meet d0>=2, %zu fail; n=4: %zu meet d0>=1, %zu fail", five.accepted,
              five.failures, four.accepted, four.failures),
          "n=5 failures=0; n=4 failures>=1"};
}

Measured extremal_pipeline(const SuiteHooks& hooks) {
  const double mu = hooks.builder_mu;
  const auto params = ClassifierParams::make(0.1, mu, 400);
  const auto m = build_extremal_member(400, mu, 1);
  const auto report = verify_extremal_member(m.graph, m.partition, params);

  const auto bal = balance_classes(m.graph, m.partition, params);
  const auto cycle = expand_sequence(
      bal.contraction.expansion,
      dense_4partite_hamiltonian(bal.contraction.graph, bal.contraction.partition, 0.1));
  const bool ham_ok = validate_cycle(m.graph, cycle, true).valid;

  // same pipeline after two vertices are misplaced into D3
  const auto moved = m.partition.with_move(0, 2).with_move(1, 2);
  const auto bal2 = balance_classes(m.graph, moved, params);
  const auto cycle2 = expand_sequence(
      bal2.contraction.expansion,
      dense_4partite_hamiltonian(bal2.contraction.graph, bal2.contraction.partition, 0.1));
  const bool ham2_ok = validate_cycle(m.graph, cycle2, false).valid;

  const auto lengths = LengthPartition::make({100, 100, 100, 100}, 400);
  const auto cert = extremal_cycle_factor(m.graph, m.partition, lengths, params);
  const bool factor_ok = validate_cycle_factor(m.graph, cert.sequences, lengths.lengths).valid;

  return {report.passed() && ham_ok && ham2_ok && factor_ok,
          fmt("sizes=%d arcs=%d vertices=%d hamiltonian=%d rebalanced_cycle=%d factor=%d",
              report.sizes_ok, report.arcs_ok, report.vertices_ok, ham_ok, ham2_ok, factor_ok),
          "all 1"};
}

Measured expander_implication() {
  constexpr double d = 0.001, mu = 0.01, tau = 0.05;
  std::size_t hypothesis = 0, conclusion = 0, drawn = 0;
  for (std::uint64_t seed = 0; hypothesis < 200 && seed < 20000; ++seed) {
    const std::size_t n = 8 + seed % 7;
    const auto floor = static_cast<std::size_t>(std::ceil((3.0 / 8.0 - 3.0 * d) * static_cast<double>(n)));
    const auto g = random_min_semidegree(n, floor, seed, 0.3);
    ++drawn;
    const auto r = check_expansion_upgrade(g, d, mu, tau);
    if (!r.hypothesis) continue;
    ++hypothesis;
    conclusion += r.conclusion;
  }
  return {hypothesis == 200 && conclusion == 200,
          fmt("drawn=%zu hypothesis=%zu conclusion=%zu", drawn, hypothesis, conclusion),
          "hypothesis=200 conclusion=200"};
}

Measured diameter_bound() {
  std::size_t violations = 0, below_floor = 0, worst = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 12 + seed % 7;
    const std::size_t floor = (n + 2) / 3;
    const auto g = random_min_semidegree(n, floor, 1000 + seed);
    below_floor += min_semidegree(g) < floor;
    const std::size_t diam = diameter(g);
    worst = std::max(worst, diam);
    violations += diam > 5;
  }
  return {violations == 0 && below_floor == 0,
          fmt("graphs=500 max_diameter=%zu violations=%zu", worst, violations),
          "violations=0"};
}

Measured merge_soundness() {
  Rng rng(7);
  std::size_t hits = 0, violations = 0;
  for (std::uint64_t t = 0; t < 300; ++t) {
    const std::size_t n = 4 + rng.below(6);
    const auto g = random_oriented(n, 0.95, rng.next());
    const Vertex u = rng.below(n);
    Vertex v = rng.below(n - 1);
    if (v >= u) ++v;
    const auto r = merge_endpoints(g, u, v, t);
    if (!oracle_hamiltonian_cycle(r.graph)) continue;
    ++hits;
    violations += !oracle_hamiltonian_path(g, u, v);
  }
  return {violations == 0 && hits > 0,
          fmt("graphs=300 hamiltonian_merges=%zu violations=%zu", hits, violations),
          "violations=0"};
}

Measured split_concentration() {
  std::size_t good = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_oriented(3000, 0.8, 5000 + seed);
    ClusterSplit spec{{1000, 1000, 1000}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 0.1, seed};
    const auto r = random_split(g, spec);
    good += r.retention_ok();
    for (const auto& part : r.parts) worst = std::min(worst, part.worst_margin);
  }
  return {good >= 99, fmt("runs=100 retained=%zu worst_margin=%.1f", good, worst), "retained>=99"};
}

// Contraction rule recomputed from scratch: arcs of untouched pairs are kept;
// a pair with a contracted end keeps last(a) -> first(b) only into the next
// class.
std::size_t contraction_mismatches(const OrientedGraph& g, const FourPartition& p,
                                   const PathSystem& paths, const Contraction& c) {
  std::size_t removed = 0;
  for (const Path& path : paths) removed += path.size() - 1;
  std::size_t bad = c.graph.order() == g.order() - removed ? 0 : 1;
  std::vector<bool> contracted(c.graph.order(), false);
  for (Vertex a = 0; a < c.graph.order(); ++a)
    for (const Path& path : paths)
      if (path == c.expansion[a]) contracted[a] = true;
  for (Vertex a = 0; a < c.graph.order(); ++a)
    for (Vertex b = 0; b < c.graph.order(); ++b) {
      if (a == b) continue;
      const Vertex head = c.expansion[b].front();
      bool expected = g.has_arc(c.expansion[a].back(), head);
      if (contracted[a] || contracted[b])
        expected = expected && p.class_of(head) == next_class(p.class_of(c.expansion[a].front()));
      bad += c.graph.has_arc(a, b) != expected;
    }
  return bad;
}

Measured contraction_rule() {
  std::size_t mismatches = 0, contracted_vertices = 0;
  Rng rng(99);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto m = build_extremal_member(40 + 4 * (i % 5), 0.001, i);
    const std::size_t n = m.graph.order();
    PathSystem paths;
    std::vector<bool> used(n, false);
    const std::size_t want = 1 + rng.below(6);
    for (std::size_t attempt = 0; paths.size() < want && attempt < 500; ++attempt) {
      const Vertex s = rng.below(n);
      if (used[s]) continue;
      Path path{s};
      const std::size_t target = 1 + rng.below(12);
      while (path.size() < target) {
        std::vector<Vertex> options;
        m.graph.out(path.back()).for_each([&](Vertex w) {
          if (!used[w] && std::find(path.begin(), path.end(), w) == path.end()) options.push_back(w);
        });
        if (options.empty()) break;
        path.push_back(options[rng.below(options.size())]);
      }
      while (m.partition.class_of(path.back()) != m.partition.class_of(path.front())) path.pop_back();
      for (Vertex v : path) used[v] = true;
      contracted_vertices += path.size();
      paths.push_back(std::move(path));
    }
    const auto c = contract_paths(m.graph, m.partition, paths);
    mismatches += contraction_mismatches(m.graph, m.partition, paths, c);
  }
  return {mismatches == 0,
          fmt("instances=100 path_vertices=%zu mismatches=%zu", contracted_vertices, mismatches),
          "mismatches=0"};
}

bool in_cyclic_order(const std::vector<Vertex>& cycle, std::span<const Vertex> seq) {
  std::vector<std::size_t> pos(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = i;
  const std::size_t n = cycle.size();
  std::size_t last = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const std::size_t rel = (pos[seq[i]] + n - pos[seq[0]]) % n;
    if (rel <= last) return false;
    last = rel;
  }
  return true;
}

Measured k_ordered_oracle(const SuiteHooks& hooks) {
  std::size_t graphs = 0, checks = 0, mismatches = 0, positives = 0, bad_certificates = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_unlabelled(n)) {
      ++graphs;
      if (n < 3) continue;
      const auto cycles = oracle_hamiltonian_cycles(g);
      Rng rng(graphs);
      for (int s = 0; s < 50; ++s) {
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        rng.shuffle(std::span<Vertex>(all));
        const std::vector<Vertex> seq(all.begin(), all.begin() + 3);
        const bool expected = std::any_of(cycles.begin(), cycles.end(),
                                          [&](const auto& c) { return in_cyclic_order(c, seq); });
        const auto r = hooks.k_ordered(g, seq, {});
        const bool got = r.outcome == Outcome::kTrue;
        if (got && (!r.certificate || !validate_ordered_cycle(g, r.certificate->sequences.at(0), seq)))
          ++bad_certificates;
        ++checks;
        positives += expected;
        mismatches += got != expected;
      }
    }
  }
  return {mismatches == 0 && bad_certificates == 0 && graphs == 1 + 2 + 7 + 42 + 582 + 21480,
          fmt("graphs=%zu sequences=%zu orderable=%zu mismatches=%zu bad_certs=%zu", graphs, checks,
              positives, mismatches, bad_certificates),
          "graphs=22114 mismatches=0 bad_certs=0"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Measured(const SuiteHooks&)> run;
};

}  // namespace

SuiteHooks default_hooks() {
  SuiteHooks h;
  h.hamiltonian_cycle = [](const OrientedGraph& g, const Budget& b) { return hamiltonian_cycle(g, b); };
  h.cycle_factor = [](const OrientedGraph& g, const LengthPartition& l, const Budget& b) {
    return cycle_factor(g, l, b);
  };
  h.k_ordered = [](const OrientedGraph& g, std::span<const Vertex> seq, const Budget& b) {
    return k_ordered_hamiltonian(g, seq, b);
  };
  h.k_linkage = [](const OrientedGraph& g, std::span<const TerminalPair> pairs, bool spanning,
                   const Budget& b) { return k_linkage(g, pairs, spanning, b); };
  return h;
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  static const Criterion kCriteria[] = {
      {1, "linkage counterexample n=10 k=2", 1.0, linkage_counterexample},
      {2, "hamiltonian cycle vs oracle, all n=5 graphs", 300.0, oracle_equivalence},
      {3, "threshold sweeps n=4 and n=5", 120.0, threshold_sanity},
      {4, "extremal member pipeline n=400", 120.0, extremal_pipeline},
      {5, "expander degree implication", 0.0, [](const SuiteHooks&) { return expander_implication(); }},
      {6, "diameter at most 5 for delta0 >= n/3", 0.0, [](const SuiteHooks&) { return diameter_bound(); }},
      {7, "merge soundness", 0.0, [](const SuiteHooks&) { return merge_soundness(); }},
      {8, "random split degree retention", 0.0, [](const SuiteHooks&) { return split_concentration(); }},
      {9, "path contraction rule", 0.0, [](const SuiteHooks&) { return contraction_rule(); }},
      {10, "k-ordered vs oracle, n <= 6", 0.0, k_ordered_oracle},
  };
  std::vector<CriterionResult> out;
  for (const Criterion& c : kCriteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Measured m = c.run(options.hooks);
      r.pass = m.pass;
      r.measured = m.measured;
      r.expected = m.expected;
    } catch (const std::exception& e) {
      r.pass = false;
      r.measured = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.measured += fmt(" (over the %.0f s limit)", r.limit_seconds);
    }
    if (options.on_result) options.on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  std::string line = fmt("%s [%2d] %s: %s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                         r.measured.c_str());
  if (!r.pass && !r.expected.empty()) line += " | expected " + r.expected;
  line += fmt(" (%.2f s", r.seconds);
  if (r.limit_seconds > 0) line += fmt(", limit %.0f s", r.limit_seconds);
  return line + ")";
}

}  // namespace semideg
