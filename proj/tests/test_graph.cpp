#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "error_matchers.hpp"
#include "semideg/generators.hpp"
#include "semideg/graph.hpp"
#include "test_graphs.hpp"

namespace semideg {
namespace {

using testing::make_graph;
using testing::raises;
using testing::random_graph;
using testing::TestRng;

// ---------------------------------------------------------------------------
// VertexSet against std::set

TEST(VertexSet, MatchesStdSetUnderRandomOperations) {
  TestRng rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t u = 1 + rng.below(200);
    VertexSet a(u), b(u);
    std::set<Vertex> ra, rb;
    for (int i = 0; i < 60; ++i) {
      const Vertex v = rng.below(u);
      if (rng.below(2)) {
        a.insert(v);
        ra.insert(v);
      } else {
        b.insert(v);
        rb.insert(v);
      }
      if (rng.below(5) == 0) {
        a.erase(v);
        ra.erase(v);
      }
    }
    std::set<Vertex> inter, uni, diff;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                          std::inserter(inter, inter.end()));
    std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(uni, uni.end()));
    std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(),
                        std::inserter(diff, diff.end()));
    auto as_vec = [](const std::set<Vertex>& s) { return std::vector<Vertex>(s.begin(), s.end()); };

    ASSERT_EQ(a.count(), ra.size());
    ASSERT_EQ(a.to_vector(), as_vec(ra));
    ASSERT_EQ((a & b).to_vector(), as_vec(inter));
    ASSERT_EQ((a | b).to_vector(), as_vec(uni));
    ASSERT_EQ((a - b).to_vector(), as_vec(diff));
    ASSERT_EQ(a.count_common(b), inter.size());
    ASSERT_EQ(a.intersects(b), !inter.empty());
    ASSERT_EQ(a.complement().count(), u - ra.size());
    ASSERT_EQ((a & b).is_subset_of(a), true);
    ASSERT_EQ(a.empty(), ra.empty());
    const Vertex from = rng.below(u + 1);
    const auto it = ra.lower_bound(from);
    ASSERT_EQ(a.next(from), it == ra.end() ? VertexSet::kNone : *it);
  }
}

TEST(VertexSet, FullAndComplementRespectTheUniverse) {
  for (std::size_t u : {0u, 1u, 63u, 64u, 65u, 130u}) {
    const auto f = VertexSet::full(u);
    EXPECT_EQ(f.count(), u);
    EXPECT_TRUE(f.complement().empty());
    EXPECT_EQ(VertexSet(u).complement(), f);
    EXPECT_FALSE(f.contains(u));
  }
}

// ---------------------------------------------------------------------------
// Construction and validation

TEST(OrientedGraph, RejectsInvalidArcs) {
  EXPECT_TRUE(raises(ErrorCode::kLoop, [] { make_graph(3, {{1, 1}}); }));
  EXPECT_TRUE(raises(ErrorCode::kDigon, [] { make_graph(3, {{0, 1}, {1, 0}}); }));
  EXPECT_TRUE(raises(ErrorCode::kDuplicateArc, [] { make_graph(3, {{0, 1}, {0, 1}}); }));
  EXPECT_TRUE(raises(ErrorCode::kOutOfRange, [] { make_graph(3, {{0, 3}}); }));
}

TEST(GraphBuilder, TryAddReportsInsteadOfThrowing) {
  GraphBuilder b(3);
  EXPECT_TRUE(b.try_add_arc(0, 1));
  EXPECT_FALSE(b.try_add_arc(1, 0));
  EXPECT_FALSE(b.try_add_arc(2, 2));
  EXPECT_FALSE(b.try_add_arc(0, 5));
  EXPECT_FALSE(b.try_add_arc(0, 1));
  EXPECT_EQ(b.build().arc_total(), 1u);
}

TEST(GraphBuilder, ReverseAndRemoveKeepBothAdjacencies) {
  GraphBuilder b(make_graph(3, {{0, 1}, {1, 2}}));
  b.reverse_arc(0, 1);
  b.reverse_arc(2, 0);  // absent, no-op
  b.remove_arc(1, 2);
  const auto g = b.build();
  EXPECT_EQ(g.arcs(), (std::vector<Arc>{{1, 0}}));
  EXPECT_TRUE(g.in(0).contains(1));
  EXPECT_FALSE(g.out(0).contains(1));
  EXPECT_EQ(g.arc_total(), 1u);
}

TEST(OrientedGraph, ArcsAreSortedAndConsistentWithAdjacency) {
  TestRng rng(3);
  for (int round = 0; round < 50; ++round) {
    const auto g = random_graph(rng, 2 + rng.below(30), 0.6);
    const auto arcs = g.arcs();
    EXPECT_TRUE(std::is_sorted(arcs.begin(), arcs.end()));
    EXPECT_EQ(arcs.size(), g.arc_total());
    std::size_t out_sum = 0, in_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
      EXPECT_FALSE(g.out(v).intersects(g.in(v)));
      g.out(v).for_each([&](Vertex w) { EXPECT_TRUE(g.in(w).contains(v)); });
    }
    EXPECT_EQ(out_sum, arcs.size());
    EXPECT_EQ(in_sum, arcs.size());
  }
}

// ---------------------------------------------------------------------------
// Degrees and counts

TEST(DegreeProfile, HandTrace) {
  // 0->1, 0->2, 1->2, 2->3, 3->0
  const auto g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 0}});
  const auto dp = degree_profile(g);
  EXPECT_EQ(dp.out, (std::vector<std::size_t>{2, 1, 1, 1}));
  EXPECT_EQ(dp.in, (std::vector<std::size_t>{1, 1, 2, 1}));
  EXPECT_EQ(dp.min_out, 1u);
  EXPECT_EQ(dp.min_in, 1u);
  EXPECT_EQ(dp.min_semidegree, 1u);
  EXPECT_EQ(dp.min_degree, 2u);
  EXPECT_EQ(dp.star, 4u);
  EXPECT_EQ(min_semidegree(g), 1u);
}

TEST(DegreeProfile, EmptyGraph) {
  const auto dp = degree_profile(OrientedGraph::from_arcs(0, {}));
  EXPECT_EQ(dp.min_semidegree, 0u);
  EXPECT_EQ(dp.star, 0u);
}

TEST(DegreeProfile, RegularTournamentIsBalanced) {
  const auto g = rotational_tournament(11);
  const auto dp = degree_profile(g);
  EXPECT_EQ(dp.min_semidegree, 5u);
  EXPECT_EQ(dp.min_degree, 10u);
  EXPECT_EQ(dp.star, 20u);
}

TEST(ArcCount, AgreesWithDirectCount) {
  TestRng rng(5);
  for (int round = 0; round < 40; ++round) {
    const auto g = random_graph(rng, 3 + rng.below(25), 0.5);
    const std::size_t n = g.order();
    VertexSet x(n), y(n);
    std::vector<Vertex> xs, ys;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.below(2)) {
        x.insert(v);
        xs.push_back(v);
      }
      if (rng.below(2)) {
        y.insert(v);
        ys.push_back(v);
      }
    }
    std::size_t expect = 0;
    for (Vertex u : xs)
      for (Vertex v : ys) expect += g.has_arc(u, v);
    EXPECT_EQ(arc_count(g, x, y), expect);
    EXPECT_EQ(arc_count(g, xs, ys), expect);

    std::size_t within = 0;
    for (Vertex u : xs)
      for (Vertex v : xs) within += g.has_arc(u, v);
    EXPECT_EQ(arc_count(g, x, x), within);
  }
}

TEST(CommonOutIn, CountsTwoPathsInsideASet) {
  // y -> z -> x through z in {2, 3}
  const auto g = make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  EXPECT_EQ(common_out_in(g, 0, 1, VertexSet::of(5, {2, 3})), 2u);
  EXPECT_EQ(common_out_in(g, 0, 1, VertexSet::full(5)), 3u);
  EXPECT_EQ(common_out_in(g, 1, 0, VertexSet::full(5)), 0u);
}

// ---------------------------------------------------------------------------
// Induced subgraphs

TEST(Induce, RelabelsInAscendingOrder) {
  const auto g = make_graph(5, {{0, 1}, {1, 3}, {3, 4}, {4, 0}, {2, 4}});
  const auto ind = induce(g, VertexSet::of(5, {1, 3, 4}));
  EXPECT_EQ(ind.original, (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(ind.graph.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}}));

  const auto rem = remove_vertices(g, VertexSet::of(5, {1, 3, 4}));
  EXPECT_EQ(rem.original, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(rem.graph.arc_total(), 0u);
}

TEST(Induce, PreservesEveryArcBetweenKeptVertices) {
  TestRng rng(8);
  for (int round = 0; round < 30; ++round) {
    const auto g = random_graph(rng, 4 + rng.below(20), 0.5);
    VertexSet keep(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng.below(3)) keep.insert(v);
    const auto ind = induce(g, keep);
    ASSERT_EQ(ind.graph.order(), keep.count());
    for (Vertex i = 0; i < ind.graph.order(); ++i)
      for (Vertex j = 0; j < ind.graph.order(); ++j)
        ASSERT_EQ(ind.graph.has_arc(i, j), g.has_arc(ind.original[i], ind.original[j]));
  }
}

TEST(Induce, RejectsForeignUniverse) {
  const auto g = directed_cycle(4);
  EXPECT_TRUE(raises(ErrorCode::kOutOfRange, [&] { induce(g, VertexSet(5)); }));
  const std::vector<Vertex> bad{0, 4};
  EXPECT_TRUE(raises(ErrorCode::kOutOfRange, [&] { require_vertices(g, bad); }));
}

// ---------------------------------------------------------------------------
// Generators

TEST(Generators, DirectedCycle) {
  const auto g = directed_cycle(5);
  EXPECT_EQ(g.arc_total(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_TRUE(g.has_arc(v, (v + 1) % 5));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { directed_cycle(2); }));
}

TEST(Generators, TournamentsCoverEveryPairOnce) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<OrientedGraph> ts{transitive_tournament(n), near_regular_tournament(n)};
    if (n % 2 == 1) ts.push_back(rotational_tournament(n));
    for (const auto& t : ts) {
      ASSERT_EQ(t.arc_total(), n * (n - 1) / 2);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) ASSERT_TRUE(t.adjacent(u, v));
    }
    const auto nr = near_regular_tournament(n);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_GE(nr.out_degree(v), (n - 1) / 2);
      ASSERT_LE(nr.out_degree(v), n / 2);
    }
  }
}

TEST(Generators, RotationalSymbolsAreValidated) {
  const auto g = rotational_tournament(7, {1, 2, 4});
  EXPECT_TRUE(g.has_arc(0, 4));
  EXPECT_TRUE(g.has_arc(3, 0));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { rotational_tournament(6); }));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { rotational_tournament(7, {1, 6, 2}); }));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { rotational_tournament(7, {1, 2}); }));
}

TEST(Generators, RandomOrientedIsSeededAndDense) {
  EXPECT_EQ(random_oriented(30, 0.5, 4), random_oriented(30, 0.5, 4));
  EXPECT_NE(random_oriented(30, 0.5, 4), random_oriented(30, 0.5, 5));
  EXPECT_EQ(random_oriented(20, 1.0, 1).arc_total(), 190u);
  EXPECT_EQ(random_oriented(20, 0.0, 1).arc_total(), 0u);
  const double frac = static_cast<double>(random_oriented(200, 0.3, 9).arc_total()) / (200 * 199 / 2);
  EXPECT_NEAR(frac, 0.3, 0.03);
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { random_oriented(5, 1.5, 0); }));
}

TEST(Generators, MinSemidegreeFloorHolds) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 5 + seed % 20;
    const std::size_t d = (n - 1) / 2 - seed % 2;
    const auto g = random_min_semidegree(n, d, seed, 0.7);
    ASSERT_GE(min_semidegree(g), d) << "n=" << n << " seed=" << seed;
  }
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { random_min_semidegree(6, 3, 0); }));
}

}  // namespace
}  // namespace semideg
