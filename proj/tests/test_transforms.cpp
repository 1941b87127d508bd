#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "error_matchers.hpp"
#include "semideg/certificate.hpp"
#include "semideg/constructions.hpp"
#include "semideg/oracle.hpp"
#include "semideg/solvers.hpp"
#include "semideg/transforms.hpp"
#include "test_graphs.hpp"

namespace semideg {
namespace {

using testing::make_graph;
using testing::raises;
using testing::random_graph;
using testing::TestRng;

const ClassifierParams& member_params(std::size_t n) {
  static std::map<std::size_t, ClassifierParams> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ClassifierParams::make(0.1, 0.001, n)).first;
  return it->second;
}

// Arc set the contraction must produce, recomputed from the input graph:
// untouched pairs keep their arcs; a pair involving a path vertex p_j gets
// last(a) -> first(b) only when it runs into the next class.
void expect_contraction_matches_rule(const OrientedGraph& g, const FourPartition& p,
                                     const PathSystem& paths, const Contraction& c) {
  std::size_t removed = 0;
  for (const Path& path : paths) removed += path.size() - 1;
  ASSERT_EQ(c.graph.order(), g.order() - removed);
  std::vector<bool> from_path(c.graph.order(), false);
  for (Vertex a = 0; a < c.graph.order(); ++a) {
    const auto& ex = c.expansion[a];
    from_path[a] = std::any_of(paths.begin(), paths.end(),
                               [&](const Path& path) { return path.front() == ex.front(); });
    ASSERT_EQ(c.partition.class_of(a), p.class_of(ex.front()));
  }
  for (Vertex a = 0; a < c.graph.order(); ++a) {
    for (Vertex b = 0; b < c.graph.order(); ++b) {
      if (a == b) continue;
      const Vertex tail = c.expansion[a].back();
      const Vertex head = c.expansion[b].front();
      bool expected = g.has_arc(tail, head);
      if (from_path[a] || from_path[b])
        expected = expected && p.class_of(head) == next_class(p.class_of(c.expansion[a].front()));
      ASSERT_EQ(c.graph.has_arc(a, b), expected) << "pair " << a << "," << b;
    }
  }
}

// Random disjoint walks that start and end in the same class.
PathSystem random_path_system(TestRng& rng, const OrientedGraph& g, const FourPartition& p,
                              std::size_t count) {
  PathSystem out;
  std::vector<bool> used(g.order(), false);
  for (std::size_t attempt = 0; out.size() < count && attempt < 200 * count; ++attempt) {
    const Vertex start = rng.below(g.order());
    if (used[start]) continue;
    Path path{start};
    const std::size_t target = 1 + rng.below(10);
    while (path.size() < target) {
      std::vector<Vertex> options;
      g.out(path.back()).for_each([&](Vertex w) {
        if (!used[w] && std::find(path.begin(), path.end(), w) == path.end()) options.push_back(w);
      });
      if (options.empty()) break;
      path.push_back(options[rng.below(options.size())]);
    }
    while (!path.empty() && p.class_of(path.back()) != p.class_of(path.front())) path.pop_back();
    for (Vertex v : path) used[v] = true;
    out.push_back(path);
  }
  return out;
}

TEST(ContractPaths, HandTracedInstance) {
  // D1={0}, D2={1}, D3={2,3}, D4={4}
  const auto g = make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {0, 1}, {4, 0}, {0, 3}, {2, 4}});
  const auto p = FourPartition::from_classes(5, {{{0}, {1}, {2, 3}, {4}}}, 0.0);
  const auto c = contract_paths(g, p, {{2, 3}});
  ASSERT_EQ(c.graph.order(), 4u);
  // output order: 0, 1, p, 4
  EXPECT_EQ(c.expansion[2], (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(c.partition.class_of(2), 2);
  EXPECT_EQ(c.graph.in(2).to_vector(), (std::vector<Vertex>{1}));
  EXPECT_EQ(c.graph.out(2).to_vector(), (std::vector<Vertex>{3}));
  EXPECT_TRUE(c.graph.has_arc(0, 1));
  EXPECT_TRUE(c.graph.has_arc(3, 0));
  expect_contraction_matches_rule(g, p, {{2, 3}}, c);
}

TEST(ContractPaths, SingleVertexPathKeepsOnlyAdjacentClassArcs) {
  const auto m = build_extremal_member(16, 0.001, 3);
  const auto c = contract_paths(m.graph, m.partition, {{0}});
  EXPECT_EQ(c.graph.order(), 16u);
  // the D1 tournament arcs at vertex 0 are gone
  EXPECT_EQ(c.graph.out(0).to_vector(), m.partition.members(1));
  EXPECT_EQ(c.graph.in(0).to_vector(), m.partition.members(3));
  expect_contraction_matches_rule(m.graph, m.partition, {{0}}, c);
}

TEST(ContractPaths, RandomSystemsOnMembersMatchTheRule) {
  TestRng rng(41);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = build_extremal_member(40, 0.001, seed);
    const auto paths = random_path_system(rng, m.graph, m.partition, 1 + rng.below(6));
    const auto c = contract_paths(m.graph, m.partition, paths);
    expect_contraction_matches_rule(m.graph, m.partition, paths, c);
  }
}

TEST(ContractPaths, Errors) {
  const auto m = build_extremal_member(8, 0.001, 1);
  const auto& g = m.graph;
  const auto& p = m.partition;
  EXPECT_TRUE(raises(ErrorCode::kEndpointClassMismatch, [&] { contract_paths(g, p, {{0, 2}}); }));
  EXPECT_TRUE(raises(ErrorCode::kPathsIntersect, [&] { contract_paths(g, p, {{0}, {0}}); }));
  EXPECT_TRUE(raises(ErrorCode::kArcMissing, [&] { contract_paths(g, p, {{2, 0}}); }));
  EXPECT_TRUE(raises(ErrorCode::kOutOfRange, [&] { contract_paths(g, p, {{99}}); }));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [&] { contract_paths(g, p, {{}}); }));
}

TEST(ContractPaths, ExpansionComposition) {
  const std::vector<std::vector<Vertex>> inner{{0, 1}, {2}, {3, 4, 5}};
  const std::vector<std::vector<Vertex>> outer{{2, 0}, {1}};
  const auto composed = compose_expansions(inner, outer);
  EXPECT_EQ(composed[0], (std::vector<Vertex>{3, 4, 5, 0, 1}));
  EXPECT_EQ(composed[1], (std::vector<Vertex>{2}));
  const std::vector<Vertex> seq{1, 0};
  EXPECT_EQ(expand_sequence(composed, seq), (std::vector<Vertex>{2, 3, 4, 5, 0, 1}));
}

TEST(MergeEndpoints, TriangleGivesTheSharedVertexToU) {
  const auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto r = merge_endpoints(g, 0, 2, seed);
    EXPECT_EQ(r.n_u, (std::vector<Vertex>{1}));
    EXPECT_TRUE(r.n_v.empty());
    ASSERT_EQ(r.graph.order(), 2u);
    EXPECT_EQ(r.w, 1u);
    EXPECT_EQ(r.original, (std::vector<Vertex>{1}));
    EXPECT_TRUE(r.graph.has_arc(1, 0));
    EXPECT_FALSE(r.graph.has_arc(0, 1));
  }
}

TEST(MergeEndpoints, EmptyIntersection) {
  // N+(0) = {1}, N-(3) = {2}
  const auto g = make_graph(4, {{0, 1}, {2, 3}, {1, 2}});
  const auto r = merge_endpoints(g, 0, 3, 9);
  EXPECT_TRUE(r.n_u.empty() && r.n_v.empty());
  EXPECT_EQ(r.graph.out(r.w).to_vector(), (std::vector<Vertex>{0}));
  EXPECT_EQ(r.graph.in(r.w).to_vector(), (std::vector<Vertex>{1}));
}

TEST(MergeEndpoints, SplitIsDisjointBalancedAndDigonFree) {
  TestRng rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 4 + rng.below(20);
    const auto g = random_graph(rng, n, 0.7);
    const Vertex u = rng.below(n);
    Vertex v = rng.below(n - 1);
    if (v >= u) ++v;
    const auto r = merge_endpoints(g, u, v, rng.next());
    const std::size_t common = (g.out(u) & g.in(v)).count();
    EXPECT_EQ(r.n_u.size(), (common + 1) / 2);
    EXPECT_EQ(r.n_u.size() + r.n_v.size(), common);
    EXPECT_FALSE(r.graph.out(r.w).intersects(r.graph.in(r.w)));
    for (Vertex x = 0; x < r.w; ++x) {
      const Vertex ox = r.original[x];
      const bool nv = std::binary_search(r.n_v.begin(), r.n_v.end(), ox);
      const bool nu = std::binary_search(r.n_u.begin(), r.n_u.end(), ox);
      EXPECT_EQ(r.graph.has_arc(r.w, x), g.has_arc(u, ox) && !nv);
      EXPECT_EQ(r.graph.has_arc(x, r.w), g.has_arc(ox, v) && !nu);
    }
  }
}

TEST(MergeEndpoints, SameSeedSameSplit) {
  TestRng rng(8);
  const auto g = random_graph(rng, 20, 0.9);
  EXPECT_EQ(merge_endpoints(g, 3, 11, 77).n_u, merge_endpoints(g, 3, 11, 77).n_u);
}

TEST(MergeEndpoints, HamiltonianMergeGivesHamiltonianPath) {
  TestRng rng(2024);
  int hits = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 4 + rng.below(6);
    const auto g = random_graph(rng, n, 0.95);
    const Vertex u = rng.below(n);
    Vertex v = rng.below(n - 1);
    if (v >= u) ++v;
    const auto r = merge_endpoints(g, u, v, static_cast<std::uint64_t>(t));
    if (!oracle_hamiltonian_cycle(r.graph)) continue;
    ++hits;
    EXPECT_TRUE(oracle_hamiltonian_path(g, u, v)) << "trial " << t;
  }
  EXPECT_GT(hits, 20);
}

TEST(MergeEndpoints, Errors) {
  const auto g = make_graph(3, {{0, 1}});
  EXPECT_TRUE(raises(ErrorCode::kSameVertex, [&] { merge_endpoints(g, 1, 1, 0); }));
  EXPECT_TRUE(raises(ErrorCode::kOutOfRange, [&] { merge_endpoints(g, 1, 5, 0); }));
}

// Member of order 400 with two D4 vertices removed, so |D2| - |D4| = 2.
struct Skewed {
  OrientedGraph graph;
  FourPartition partition;
};

Skewed skewed_member(std::initializer_list<Vertex> planted_bad) {
  const auto m = build_extremal_member(400, 0.001, 12);
  GraphBuilder b(m.graph);
  // two in-arcs from D2 (beta = 1.32 here)
  for (Vertex v : planted_bad) {
    b.reverse_arc(v, 100 + v);
    b.reverse_arc(v, 150 + v);
  }
  const auto rest = remove_vertices(b.build(), VertexSet::of(400, {398, 399}));
  std::vector<int> cls(rest.original.size());
  for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = m.partition.class_of(rest.original[i]);
  return {rest.graph, FourPartition::from_assignment(cls, 0.001)};
}

TEST(RelocateBadVertices, AllGoodMeansNoMoves) {
  const auto s = skewed_member({});
  const auto r = relocate_bad_vertices(s.graph, s.partition, member_params(398));
  EXPECT_EQ(r.outcome, RelocationOutcome::kAllGood);
  EXPECT_TRUE(r.moves.empty());
}

TEST(RelocateBadVertices, PlantedBadD1VertexMovesToD4) {
  const auto s = skewed_member({7});
  const auto& params = member_params(398);
  EXPECT_FALSE(classify_good(s.graph, s.partition, 7, params).good);
  const auto r = relocate_bad_vertices(s.graph, s.partition, params);
  ASSERT_EQ(r.outcome, RelocationOutcome::kAllGood);
  ASSERT_EQ(r.moves.size(), 1u);
  EXPECT_EQ(r.moves[0].vertex, 7u);
  EXPECT_EQ(r.moves[0].from, 0);
  EXPECT_EQ(r.moves[0].to, 3);
  for (Vertex v = 0; v < s.graph.order(); ++v)
    EXPECT_TRUE(classify_good(s.graph, r.partition, v, params).good) << v;
}

TEST(RelocateBadVertices, ImbalanceManyBadVerticesBalance) {
  const auto s = skewed_member({7, 9});
  const auto r = relocate_bad_vertices(s.graph, s.partition, member_params(398));
  EXPECT_EQ(r.outcome, RelocationOutcome::kBalanced);
  ASSERT_EQ(r.moves.size(), 2u);
  EXPECT_EQ(r.partition.imbalance(), 0);
}

TEST(RelocateBadVertices, BalancedInputRejected) {
  const auto m = build_extremal_member(40, 0.001, 1);
  EXPECT_TRUE(raises(ErrorCode::kBalancedPartition, [&] {
    relocate_bad_vertices(m.graph, m.partition, member_params(40));
  }));
}

TEST(FindPatternPath, TriangleStepShapeOnMember) {
  const auto m = build_extremal_member(400, 0.001, 5);
  const auto& params = member_params(400);
  const std::vector<int> pattern{1, 3, 0, 1};
  const auto path = find_pattern_path(m.graph, m.partition, pattern, params, VertexSet(400));
  ASSERT_EQ(path.size(), 4u);
  EXPECT_TRUE(validate_path(m.graph, path, path.front(), path.back(), false).valid);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(m.partition.class_of(path[i]), pattern[i]);
    EXPECT_TRUE(is_circular(m.graph, m.partition, path[i], params));
  }
}

TEST(FindPatternPath, SingleClassGivesLeastCandidate) {
  const auto m = build_extremal_member(40, 0.001, 5);
  const std::vector<int> pattern{2};
  VertexSet avoid(40);
  EXPECT_EQ(find_pattern_path(m.graph, m.partition, pattern, member_params(40), avoid),
            (Path{20}));
  avoid.insert(20);
  EXPECT_EQ(find_pattern_path(m.graph, m.partition, pattern, member_params(40), avoid),
            (Path{21}));
}

TEST(FindPatternPath, ClosedPatternIsACycle) {
  const auto m = build_extremal_member(40, 0.001, 5);
  const std::vector<int> pattern{1, 2, 3};
  PatternOptions opts;
  opts.closed = true;
  const auto cyc = find_pattern_path(m.graph, m.partition, pattern, member_params(40),
                                     VertexSet(40), opts);
  EXPECT_TRUE(validate_cycle(m.graph, cyc, false).valid);
}

TEST(FindPatternPath, Errors) {
  const auto g = make_graph(3, {{0, 1}, {1, 2}});
  const auto p = FourPartition::from_classes(3, {{{}, {0}, {1}, {2}}}, 0.001);
  const auto params = ClassifierParams::make(0.1, 0.001, 3);
  const std::vector<int> uses_d1{0, 1};
  EXPECT_TRUE(raises(ErrorCode::kEmptyClass,
                     [&] { find_pattern_path(g, p, uses_d1, params, VertexSet(3)); }));
  const std::vector<int> backwards{3, 2};
  PatternOptions loose;
  loose.require_circular = false;
  EXPECT_TRUE(raises(ErrorCode::kPatternUnsatisfied,
                     [&] { find_pattern_path(g, p, backwards, params, VertexSet(3), loose); }));
}

void expect_balanced_and_circular(const BalanceResult& r, const ClassifierParams& params) {
  const auto& c = r.contraction;
  for (int i = 1; i < 4; ++i) EXPECT_EQ(c.partition.size(i), c.partition.size(0));
  for (Vertex v = 0; v < c.graph.order(); ++v)
    EXPECT_TRUE(is_circular(c.graph, c.partition, v, params)) << v;
}

TEST(BalanceClasses, BalancedMemberIsUntouched) {
  const auto m = build_extremal_member(80, 0.001, 2);
  const auto r = balance_classes(m.graph, m.partition, member_params(80));
  EXPECT_EQ(r.contraction.graph, m.graph);
  EXPECT_TRUE(r.absorbing_paths.empty());
  EXPECT_FALSE(r.r13 || r.r21);
}

TEST(BalanceClasses, TwoVerticesMovedFromD1ToD3) {
  const auto m = build_extremal_member(400, 0.001, 2);
  const auto p = m.partition.with_move(0, 2).with_move(1, 2);
  const auto& params = member_params(400);
  const auto r = balance_classes(m.graph, p, params);
  EXPECT_EQ(r.absorbing_paths.size(), 2u);
  expect_balanced_and_circular(r, params);
  // every output vertex expands to a real path of the input
  std::vector<bool> seen(400, false);
  for (const auto& ex : r.contraction.expansion) {
    EXPECT_TRUE(validate_path(m.graph, ex, ex.front(), ex.back(), false).valid ||
                ex.size() == 1);
    for (Vertex v : ex) {
      EXPECT_FALSE(seen[v]);
      seen[v] = true;
    }
  }
  const auto cycle = dense_4partite_hamiltonian(r.contraction.graph, r.contraction.partition, 0.1);
  const auto full = expand_sequence(r.contraction.expansion, cycle);
  EXPECT_TRUE(validate_cycle(m.graph, full, false).valid);
}

TEST(BalanceClasses, UnequalD1D2RepairedByR21) {
  const auto m = build_extremal_member(400, 0.001, 4);
  // D1 and D3 each lose two vertices to a removal, leaving |D2| = |D4| > |D1| = |D3|
  const auto rest = remove_vertices(m.graph, VertexSet::of(400, {0, 1, 200, 201}));
  std::vector<int> cls(rest.original.size());
  for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = m.partition.class_of(rest.original[i]);
  const auto p = FourPartition::from_assignment(cls, 0.001);
  const auto& params = member_params(396);
  const auto r = balance_classes(rest.graph, p, params);
  EXPECT_FALSE(r.r13.has_value());
  ASSERT_TRUE(r.r21.has_value());
  expect_balanced_and_circular(r, params);
}

TEST(BalanceClasses, Errors) {
  const auto m = build_extremal_member(400, 0.001, 4);
  const auto& params = member_params(400);
  const auto skew = m.partition.with_move(0, 1);
  EXPECT_TRUE(raises(ErrorCode::kUnbalanced, [&] { balance_classes(m.graph, skew, params); }));
  // 300 sqrt(mu) n is below 1 vertex at this mu
  const auto tiny = ClassifierParams::make(0.1, 1e-10, 400);
  const auto moved = m.partition.with_move(0, 2);
  EXPECT_TRUE(raises(ErrorCode::kImbalanceTooLarge,
                     [&] { balance_classes(m.graph, moved, tiny); }));
}

TEST(ExtremalCycleFactor, FourEqualCycles) {
  const auto m = build_extremal_member(400, 0.001, 1);
  const auto lengths = LengthPartition::make({100, 100, 100, 100}, 400);
  const auto cert = extremal_cycle_factor(m.graph, m.partition, lengths, member_params(400));
  EXPECT_TRUE(validate_cycle_factor(m.graph, cert.sequences, lengths.lengths).valid);
}

TEST(ExtremalCycleFactor, EveryResidueAndTriangles) {
  const auto m = build_extremal_member(200, 0.001, 3);
  const auto lengths = LengthPartition::make({150, 3, 3, 4, 5, 6, 7, 11, 11}, 200);
  const auto cert = extremal_cycle_factor(m.graph, m.partition, lengths, member_params(200));
  const auto v = validate_cycle_factor(m.graph, cert.sequences, lengths.lengths);
  EXPECT_TRUE(v.valid) << v.reason;
}

ClusterSplit equal_split(std::size_t n, std::size_t j, std::uint64_t seed) {
  ClusterSplit s;
  for (std::size_t i = 0; i < j; ++i) {
    s.targets.push_back(n / j + (i < n % j ? 1 : 0));
    s.ratios.push_back(1.0 / static_cast<double>(j));
  }
  s.eta = 0.1;
  s.seed = seed;
  return s;
}

TEST(RandomSplit, SinglePartIsEverything) {
  TestRng rng(1);
  const auto g = random_graph(rng, 60, 0.8);
  const auto r = random_split(g, equal_split(60, 1, 4));
  ASSERT_EQ(r.parts.size(), 1u);
  EXPECT_EQ(r.parts[0].members.size(), 60u);
  EXPECT_TRUE(r.retention_ok());
  EXPECT_DOUBLE_EQ(r.parts[0].worst_margin, std::pow(60.0, 2.0 / 3.0));
  EXPECT_EQ(r.parts[0].min_semidegree, min_semidegree(g));
}

TEST(RandomSplit, PartsAreExactDisjointAndReproducible) {
  TestRng rng(2);
  const auto g = random_graph(rng, 301, 0.8);
  const auto spec = equal_split(301, 3, 10);
  const auto a = random_split(g, spec);
  const auto b = random_split(g, spec);
  std::vector<int> owner(301, -1);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(a.parts[i].members.size(), spec.targets[i]);
    EXPECT_EQ(a.parts[i].members, b.parts[i].members);
    for (Vertex v : a.parts[i].members) {
      EXPECT_EQ(owner[v], -1);
      owner[v] = static_cast<int>(i);
    }
  }
  EXPECT_TRUE(std::none_of(owner.begin(), owner.end(), [](int o) { return o < 0; }));
}

TEST(RandomSplit, DenseGraphRetainsDegrees) {
  TestRng rng(3);
  const auto g = random_graph(rng, 900, 0.8);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) ok += random_split(g, equal_split(900, 3, seed)).retention_ok();
  EXPECT_GE(ok, 4);
}

TEST(RandomSplit, ReportFlagsViolations) {
  // ratio 0.9 but a one-vertex part: nobody keeps 90% of their degree
  TestRng rng(4);
  const auto g = random_graph(rng, 30, 1.0);
  ClusterSplit s;
  s.targets = {1, 29};
  s.ratios = {0.9, 0.1};
  s.seed = 1;
  const auto r = random_split(g, s);
  EXPECT_FALSE(r.retention_ok());
  EXPECT_FALSE(r.parts[0].retention_ok);
  EXPECT_GT(r.violation_count, 0u);
  EXPECT_LE(r.violations.size(), 64u);
}

TEST(RandomSplit, BadSpecs) {
  const auto g = make_graph(4, {{0, 1}});
  ClusterSplit s{{2, 1}, {0.5, 0.5}, 0.0, 0};
  EXPECT_TRUE(raises(ErrorCode::kBadSpec, [&] { random_split(g, s); }));
  s = {{2, 2}, {0.5}, 0.0, 0};
  EXPECT_TRUE(raises(ErrorCode::kBadSpec, [&] { random_split(g, s); }));
  s = {{2, 2}, {0.7, 0.7}, 0.0, 0};
  EXPECT_TRUE(raises(ErrorCode::kBadSpec, [&] { random_split(g, s); }));
  s = {{2, 2}, {0.0, 0.5}, 0.0, 0};
  EXPECT_TRUE(raises(ErrorCode::kBadSpec, [&] { random_split(g, s); }));
  s = {{}, {}, 0.0, 0};
  EXPECT_TRUE(raises(ErrorCode::kBadSpec, [&] { random_split(g, s); }));
}

}  // namespace
}  // namespace semideg
