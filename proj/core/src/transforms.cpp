#include "semideg/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

#include "semideg/error.hpp"
#include "semideg/random.hpp"

namespace semideg {

namespace {

std::string vtext(Vertex v) { return std::to_string(v); }

// Per-position candidate sets for a pattern search.
struct PatternSearch {
  const OrientedGraph& g;
  std::vector<VertexSet> allowed;
  bool closed = false;
  std::uint64_t max_nodes = 0;
  std::uint64_t nodes = 0;
  Path path;

  bool run() {
    path.clear();
    if (allowed.empty()) return false;
    bool found = false;
    allowed[0].for_each([&](Vertex v) {
      if (found || nodes > max_nodes) return;
      path.assign(1, v);
      VertexSet on_path(g.order());
      on_path.insert(v);
      found = extend(on_path);
    });
    return found;
  }

  bool extend(VertexSet& on_path) {
    if (++nodes > max_nodes) return false;
    const std::size_t pos = path.size();
    if (pos == allowed.size()) return !closed || g.has_arc(path.back(), path.front());
    VertexSet cand = g.out(path.back()) & allowed[pos];
    cand -= on_path;
    for (Vertex w = cand.first(); w != VertexSet::kNone; w = cand.next(w + 1)) {
      path.push_back(w);
      on_path.insert(w);
      if (extend(on_path)) return true;
      on_path.erase(w);
      path.pop_back();
      if (nodes > max_nodes) return false;
    }
    return false;
  }
};

VertexSet circular_set(const OrientedGraph& g, const FourPartition& p,
                       const ClassifierParams& params) {
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_circular(g, p, v, params)) s.insert(v);
  return s;
}

std::vector<int> repeat_pattern(std::initializer_list<int> fragment, std::size_t times, int tail) {
  std::vector<int> out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), fragment.begin(), fragment.end());
  out.push_back(tail);
  return out;
}

// Removed-class counts of an absorbing path a, c, b, b+1, ..., a after its
// contraction into one vertex of class a: {c} plus the circular run b..a.
bool absorbing_shape_balanced(int a, int b, int c) {
  std::array<int, 4> removed{};
  ++removed[static_cast<std::size_t>(c)];
  for (int x = b;; x = next_class(x)) {
    ++removed[static_cast<std::size_t>(x)];
    if (x == a) break;
  }
  return removed[1] == removed[3];
}

std::size_t run_length(int from, int to) { return static_cast<std::size_t>((to - from + 4) % 4) + 1; }

Contraction identity_contraction(const OrientedGraph& g, const FourPartition& p) {
  Contraction c{g, p, {}};
  c.expansion.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) c.expansion[v] = {v};
  return c;
}

}  // namespace

Contraction contract_paths(const OrientedGraph& g, const FourPartition& p,
                           const PathSystem& paths) {
  const std::size_t n = g.order();
  if (p.order() != n) throw Error(ErrorCode::kBadPartition, "partition order differs from graph");
  VertexSet used(n);
  std::vector<std::size_t> path_of_first(n, VertexSet::kNone);
  for (std::size_t j = 0; j < paths.size(); ++j) {
    const Path& path = paths[j];
    if (path.empty()) throw Error(ErrorCode::kBadParameter, "empty path in path system");
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex v = path[i];
      if (v >= n) throw Error(ErrorCode::kOutOfRange, "path vertex " + vtext(v));
      if (used.contains(v))
        throw Error(ErrorCode::kPathsIntersect, "vertex " + vtext(v) + " on two paths");
      used.insert(v);
      if (i + 1 < path.size() && !g.has_arc(v, path[i + 1]))
        throw Error(ErrorCode::kArcMissing, "arc " + vtext(v) + "->" + vtext(path[i + 1]));
    }
    if (p.class_of(path.front()) != p.class_of(path.back()))
      throw Error(ErrorCode::kEndpointClassMismatch,
                  "path " + std::to_string(j) + " runs from D" +
                      std::to_string(p.class_of(path.front()) + 1) + " to D" +
                      std::to_string(p.class_of(path.back()) + 1));
    path_of_first[path.front()] = j;
  }

  GraphBuilder h(g);
  VertexSet alive = VertexSet::full(n);
  for (const Path& path : paths) {
    const int l = p.class_of(path.front());
    const VertexSet on_path = VertexSet::of(n, path);
    VertexSet in_set = h.in(path.front()) & p.set(prev_class(l)) & alive;
    in_set -= on_path;
    VertexSet out_set = h.out(path.back()) & p.set(next_class(l)) & alive;
    out_set -= on_path;
    for (Vertex x : path) {
      for (Vertex y : h.out(x).to_vector()) h.remove_arc(x, y);
      for (Vertex y : h.in(x).to_vector()) h.remove_arc(y, x);
    }
    in_set.for_each([&](Vertex x) { h.add_arc(x, path.front()); });
    out_set.for_each([&](Vertex y) { h.add_arc(path.front(), y); });
    alive -= on_path;
    alive.insert(path.front());
  }

  InducedGraph ind = induce(h.build(), alive);
  Contraction c;
  std::vector<int> cls(ind.original.size());
  c.expansion.resize(ind.original.size());
  for (std::size_t i = 0; i < ind.original.size(); ++i) {
    const Vertex orig = ind.original[i];
    cls[i] = p.class_of(orig);
    if (path_of_first[orig] != VertexSet::kNone)
      c.expansion[i] = paths[path_of_first[orig]];
    else
      c.expansion[i] = {orig};
  }
  c.graph = std::move(ind.graph);
  c.partition = FourPartition::from_assignment(cls, p.mu());
  return c;
}

std::vector<std::vector<Vertex>> compose_expansions(
    const std::vector<std::vector<Vertex>>& inner, const std::vector<std::vector<Vertex>>& outer) {
  std::vector<std::vector<Vertex>> out(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (Vertex mid : outer[i]) out[i].insert(out[i].end(), inner[mid].begin(), inner[mid].end());
  return out;
}

std::vector<Vertex> expand_sequence(const std::vector<std::vector<Vertex>>& expansion,
                                    std::span<const Vertex> seq) {
  std::vector<Vertex> out;
  for (Vertex v : seq) out.insert(out.end(), expansion.at(v).begin(), expansion.at(v).end());
  return out;
}

MergeResult merge_endpoints(const OrientedGraph& g, Vertex u, Vertex v, std::uint64_t split_seed) {
  const std::size_t n = g.order();
  if (u >= n || v >= n) throw Error(ErrorCode::kOutOfRange, "merge endpoint out of range");
  if (u == v) throw Error(ErrorCode::kSameVertex, "cannot merge a vertex with itself");

  std::vector<Vertex> common = (g.out(u) & g.in(v)).to_vector();
  Rng rng(split_seed);
  rng.shuffle(std::span<Vertex>(common));
  const std::size_t half = (common.size() + 1) / 2;
  MergeResult r;
  r.n_u.assign(common.begin(), common.begin() + static_cast<std::ptrdiff_t>(half));
  r.n_v.assign(common.begin() + static_cast<std::ptrdiff_t>(half), common.end());
  std::sort(r.n_u.begin(), r.n_u.end());
  std::sort(r.n_v.begin(), r.n_v.end());

  VertexSet out_w = g.out(u) - VertexSet::of(n, r.n_v);
  out_w.erase(v);
  VertexSet in_w = g.in(v) - VertexSet::of(n, r.n_u);
  in_w.erase(u);

  std::vector<Vertex> index(n, VertexSet::kNone);
  for (Vertex x = 0; x < n; ++x)
    if (x != u && x != v) {
      index[x] = r.original.size();
      r.original.push_back(x);
    }
  r.w = r.original.size();
  GraphBuilder b(r.w + 1);
  for (const Arc& a : g.arcs())
    if (index[a.tail] != VertexSet::kNone && index[a.head] != VertexSet::kNone)
      b.add_arc(index[a.tail], index[a.head]);
  out_w.for_each([&](Vertex x) { b.add_arc(r.w, index[x]); });
  in_w.for_each([&](Vertex x) { b.add_arc(index[x], r.w); });
  r.graph = b.build();
  return r;
}

const char* to_string(RelocationOutcome o) noexcept {
  switch (o) {
    case RelocationOutcome::kAllGood: return "all-good";
    case RelocationOutcome::kBalanced: return "balanced";
    case RelocationOutcome::kStuck: return "stuck";
  }
  return "?";
}

RelocationResult relocate_bad_vertices(const OrientedGraph& g, const FourPartition& p,
                                       const ClassifierParams& params) {
  if (p.imbalance() == 0)
    throw Error(ErrorCode::kBalancedPartition, "relocation needs |D2| != |D4|");
  RelocationResult r;
  r.partition = p;
  const double beta = params.beta();
  auto at_least_beta = [&](const FourPartition& q, Vertex v, int cls, Direction dir) {
    return static_cast<double>(class_degree(g, q, v, cls, dir)) >= beta - 1e-9;
  };

  for (std::size_t step = 0; step <= g.order(); ++step) {
    const FourPartition& q = r.partition;
    const bool d2_heavy = q.imbalance() > 0;
    std::optional<Vertex> bad;
    for (Vertex v = 0; v < g.order() && !bad; ++v)
      if (!classify_good(g, q, v, params).good) bad = v;
    if (!bad) {
      r.outcome = RelocationOutcome::kAllGood;
      return r;
    }
    const Vertex v = *bad;
    const int from = q.class_of(v);
    int to = -1;
    std::string trigger;
    if (d2_heavy) {
      if (from == 0 || from == 2) {
        to = 3;
        trigger = "bad D" + std::to_string(from + 1) + " vertex";
      } else if (from == 1) {
        if (at_least_beta(q, v, 0, Direction::kOut) || at_least_beta(q, v, 1, Direction::kOut)) {
          to = 0;
          trigger = "D2:(D1)^b or (D2)^b";
        } else if (at_least_beta(q, v, 1, Direction::kIn) ||
                   at_least_beta(q, v, 2, Direction::kIn)) {
          to = 2;
          trigger = "D2:(D2)_b or (D3)_b";
        }
      }
    } else {
      if (from == 0 || from == 2) {
        to = 1;
        trigger = "bad D" + std::to_string(from + 1) + " vertex";
      } else if (from == 3) {
        if (at_least_beta(q, v, 0, Direction::kIn) || at_least_beta(q, v, 3, Direction::kIn)) {
          to = 0;
          trigger = "D4:(D1)_b or (D4)_b";
        } else if (at_least_beta(q, v, 3, Direction::kOut) ||
                   at_least_beta(q, v, 2, Direction::kOut)) {
          to = 2;
          trigger = "D4:(D4)^b or (D3)^b";
        }
      }
    }
    if (to < 0) {
      r.outcome = RelocationOutcome::kStuck;
      r.stuck_vertex = v;
      return r;
    }
    r.moves.push_back({v, from, to, trigger});
    r.partition = q.with_move(v, to);
    if (r.partition.imbalance() == 0) {
      r.outcome = RelocationOutcome::kBalanced;
      return r;
    }
  }
  r.outcome = RelocationOutcome::kStuck;
  return r;
}

Path find_pattern_path(const OrientedGraph& g, const FourPartition& p, std::span<const int> pattern,
                       const ClassifierParams& params, const VertexSet& avoid,
                       const PatternOptions& options) {
  if (pattern.empty()) throw Error(ErrorCode::kBadParameter, "empty pattern");
  for (int c : pattern) {
    if (c < 0 || c > 3) throw Error(ErrorCode::kBadParameter, "pattern class out of range");
    if (p.size(c) == 0) throw Error(ErrorCode::kEmptyClass, "D" + std::to_string(c + 1) + " is empty");
  }
  VertexSet eligible = VertexSet::full(g.order()) - avoid;
  if (options.require_circular) eligible &= circular_set(g, p, params);
  PatternSearch search{g, {}, options.closed, options.max_nodes, 0, {}};
  for (int c : pattern) search.allowed.push_back(p.set(c) & eligible);
  if (!search.run())
    throw Error(ErrorCode::kPatternUnsatisfied,
                "no path of length " + std::to_string(pattern.size()) + " found" +
                    (search.nodes > options.max_nodes ? " within the node limit" : ""));
  return search.path;
}

BalanceResult balance_classes(const OrientedGraph& g, const FourPartition& p,
                              const ClassifierParams& params) {
  if (p.order() != g.order()) throw Error(ErrorCode::kBadPartition, "partition order differs");
  if (p.imbalance() != 0)
    throw Error(ErrorCode::kUnbalanced, "balancing needs |D2| == |D4|, got " +
                                            std::to_string(p.size(1)) + " and " +
                                            std::to_string(p.size(3)));
  const double limit = 300.0 * std::sqrt(params.mu) * static_cast<double>(g.order());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (static_cast<double>(p.size(i)) - static_cast<double>(p.size(j)) > limit + 1e-9)
        throw Error(ErrorCode::kImbalanceTooLarge,
                    "||D" + std::to_string(i + 1) + "| - |D" + std::to_string(j + 1) +
                        "|| exceeds 300 sqrt(mu) n");

  BalanceResult r;
  r.m0 = max_matching(g, class_pair_filter(p, {{1, 3}, {3, 1}}));

  // Absorb non-circular vertices one at a time, worst first, re-deriving
  // circularity after each contraction: a few misplaced vertices make whole
  // neighbouring classes non-circular until they are gone.
  Contraction cur = identity_contraction(g, p);
  for (std::size_t round = 0; round < g.order(); ++round) {
    const OrientedGraph& h = cur.graph;
    const FourPartition& q = cur.partition;
    const VertexSet circular = circular_set(h, q, params);
    std::optional<Vertex> worst;
    std::size_t worst_missing = 0;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (circular.contains(v)) continue;
      const int c = q.class_of(v);
      const std::size_t missing =
          q.size(next_class(c)) - class_degree(h, q, v, next_class(c), Direction::kOut) +
          q.size(prev_class(c)) - class_degree(h, q, v, prev_class(c), Direction::kIn);
      if (!worst || missing > worst_missing) {
        worst = v;
        worst_missing = missing;
      }
    }
    if (!worst) break;
    const Vertex v = *worst;
    const int c = q.class_of(v);
    std::optional<Path> found;
    for (std::size_t len = 1; len <= 4 && !found; ++len)
      for (int a = 0; a < 4 && !found; ++a)
        for (int b = 0; b < 4 && !found; ++b) {
          if (run_length(b, a) != len || !absorbing_shape_balanced(a, b, c)) continue;
          PatternSearch search{h, {}, false, 200'000, 0, {}};
          search.allowed.push_back(q.set(a) & circular & h.in(v));
          search.allowed.push_back(VertexSet::of(h.order(), {v}));
          for (int x = b;; x = next_class(x)) {
            search.allowed.push_back(q.set(x) & circular);
            if (x == a) break;
          }
          search.allowed[2] &= h.out(v);
          if (search.run()) found = search.path;
        }
    if (!found)
      throw Error(ErrorCode::kSupplyExhausted,
                  "no absorbing path for non-circular vertex " +
                      vtext(cur.expansion[v].front()));
    Contraction next = contract_paths(h, q, {*found});
    r.absorbing_paths.push_back(expand_sequence(cur.expansion, *found));
    next.expansion = compose_expansions(cur.expansion, next.expansion);
    cur = std::move(next);
  }

  auto contract_one = [&](const std::vector<int>& pattern) {
    Path path;
    try {
      path = find_pattern_path(cur.graph, cur.partition, pattern, params,
                               VertexSet(cur.graph.order()));
    } catch (const Error& e) {
      throw Error(ErrorCode::kSupplyExhausted, std::string("balancing path: ") + e.what());
    }
    Contraction next = contract_paths(cur.graph, cur.partition, {path});
    next.expansion = compose_expansions(cur.expansion, next.expansion);
    Path original = expand_sequence(cur.expansion, path);
    cur = std::move(next);
    return original;
  };

  const auto s13 = static_cast<std::ptrdiff_t>(cur.partition.size(2)) -
                   static_cast<std::ptrdiff_t>(cur.partition.size(0));
  if (s13 > 0)
    r.r13 = contract_one(repeat_pattern({2, 2, 3, 0, 1}, static_cast<std::size_t>(s13), 2));
  else if (s13 < 0)
    r.r13 = contract_one(repeat_pattern({0, 0, 1, 2, 3}, static_cast<std::size_t>(-s13), 0));

  const auto s21 = static_cast<std::ptrdiff_t>(cur.partition.size(1)) -
                   static_cast<std::ptrdiff_t>(cur.partition.size(0));
  if (s21 > 0)
    r.r21 = contract_one(
        repeat_pattern({1, 3, 0, 1, 2, 3, 1, 2, 3, 0}, static_cast<std::size_t>(s21), 1));
  else if (s21 < 0)
    r.r21 = contract_one(repeat_pattern({0, 0, 1, 2, 2, 3}, static_cast<std::size_t>(-s21), 0));

  for (int i = 1; i < 4; ++i)
    if (cur.partition.size(i) != cur.partition.size(0))
      throw Error(ErrorCode::kSupplyExhausted, "classes still unequal after balancing");
  r.contraction = std::move(cur);
  return r;
}

Certificate extremal_cycle_factor(const OrientedGraph& g, const FourPartition& p,
                                  const LengthPartition& lengths, const ClassifierParams& params,
                                  double eta) {
  const LengthPartition lp = LengthPartition::make(lengths.lengths, g.order());
  if (p.imbalance() != 0)
    throw Error(ErrorCode::kUnbalanced, "cycle factor construction needs |D2| == |D4|");
  Certificate cert{CertificateKind::kCycleSet, {}};
  VertexSet used(g.order());
  for (std::size_t i = 1; i < lp.lengths.size(); ++i) {
    const std::size_t len = lp.lengths[i];
    const std::size_t q = len / 4;
    std::vector<int> pattern;
    auto laps = [&](std::initializer_list<int> lap, std::size_t times) {
      for (std::size_t t = 0; t < times; ++t) pattern.insert(pattern.end(), lap.begin(), lap.end());
    };
    if (len == 3) {
      pattern = {1, 2, 3};
    } else {
      switch (len % 4) {
        case 0: laps({0, 1, 2, 3}, q); break;
        case 1: pattern = {0, 0, 1, 2, 3}; laps({0, 1, 2, 3}, q - 1); break;
        case 2: pattern = {2, 2, 2, 3, 0, 1}; laps({2, 3, 0, 1}, q - 1); break;
        default: pattern = {1, 3, 0, 1, 2, 3, 0}; laps({1, 2, 3, 0}, q - 1); break;
      }
    }
    PatternOptions opts;
    opts.closed = true;
    Path cycle = find_pattern_path(g, p, pattern, params, used, opts);
    for (Vertex v : cycle) used.insert(v);
    cert.sequences.push_back(std::move(cycle));
  }

  const InducedGraph rest = remove_vertices(g, used);
  std::vector<int> cls(rest.original.size());
  for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = p.class_of(rest.original[i]);
  const FourPartition rest_p = FourPartition::from_assignment(cls, p.mu());
  const BalanceResult bal = balance_classes(rest.graph, rest_p, params);
  const std::vector<Vertex> ham =
      dense_4partite_hamiltonian(bal.contraction.graph, bal.contraction.partition, eta);
  std::vector<Vertex> big = expand_sequence(bal.contraction.expansion, ham);
  for (Vertex& v : big) v = rest.original[v];
  cert.sequences.insert(cert.sequences.begin(), std::move(big));
  return cert;
}

SplitReport random_split(const OrientedGraph& g, const ClusterSplit& spec) {
  const std::size_t n = g.order();
  const std::size_t j = spec.targets.size();
  if (j == 0 || spec.ratios.size() != j)
    throw Error(ErrorCode::kBadSpec, "need one ratio per target and at least one part");
  if (std::accumulate(spec.targets.begin(), spec.targets.end(), std::size_t{0}) != n)
    throw Error(ErrorCode::kBadSpec, "targets must sum to n=" + std::to_string(n));
  double total = 0.0;
  for (double xi : spec.ratios) {
    if (!(xi > 0.0 && xi <= 1.0)) throw Error(ErrorCode::kBadSpec, "ratios must lie in (0, 1]");
    total += xi;
  }
  if (total > 1.0 + 1e-9) throw Error(ErrorCode::kBadSpec, "ratios sum above 1");
  if (!(spec.eta >= 0.0)) throw Error(ErrorCode::kBadSpec, "eta must be non-negative");

  Rng rng(spec.seed);
  std::vector<std::vector<Vertex>> parts(j);
  std::vector<Vertex> reserve;
  for (Vertex v = 0; v < n; ++v) {
    const double r = rng.uniform01();
    double acc = 0.0;
    std::size_t pick = j;
    for (std::size_t i = 0; i < j; ++i) {
      acc += spec.ratios[i];
      if (r < acc) {
        pick = i;
        break;
      }
    }
    if (pick == j)
      reserve.push_back(v);
    else
      parts[pick].push_back(v);
  }
  for (std::size_t i = 0; i < j; ++i) {
    if (parts[i].size() <= spec.targets[i]) continue;
    rng.shuffle(std::span<Vertex>(parts[i]));
    reserve.insert(reserve.end(), parts[i].begin() + static_cast<std::ptrdiff_t>(spec.targets[i]),
                   parts[i].end());
    parts[i].resize(spec.targets[i]);
  }
  std::sort(reserve.begin(), reserve.end());
  rng.shuffle(std::span<Vertex>(reserve));
  std::size_t next = 0;
  for (std::size_t i = 0; i < j; ++i)
    while (parts[i].size() < spec.targets[i]) parts[i].push_back(reserve[next++]);

  SplitReport report;
  const double slack = std::pow(static_cast<double>(n), 2.0 / 3.0);
  for (std::size_t i = 0; i < j; ++i) {
    std::sort(parts[i].begin(), parts[i].end());
    SplitPart part;
    part.members = parts[i];
    const VertexSet s = VertexSet::of(n, parts[i]);
    const double xi = spec.ratios[i];
    part.worst_margin = std::numeric_limits<double>::infinity();
    part.min_semidegree = parts[i].empty() ? 0 : std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t out_s = g.out(v).count_common(s);
      const std::size_t in_s = g.in(v).count_common(s);
      for (bool out : {true, false}) {
        const double kept = static_cast<double>(out ? out_s : in_s);
        const double full = static_cast<double>(out ? g.out_degree(v) : g.in_degree(v));
        const double margin = kept - (xi * full - slack);
        part.worst_margin = std::min(part.worst_margin, margin);
        if (margin < -1e-9) {
          part.retention_ok = false;
          if (report.violations.size() < 64) report.violations.push_back({v, i, out});
          ++report.violation_count;
        }
      }
      if (s.contains(v)) part.min_semidegree = std::min(part.min_semidegree, std::min(out_s, in_s));
    }
    part.semidegree_ok = static_cast<double>(part.min_semidegree) >=
                         2.0 * spec.eta * static_cast<double>(parts[i].size()) - 1e-9;
    report.parts.push_back(std::move(part));
  }
  return report;
}

}  // namespace semideg
