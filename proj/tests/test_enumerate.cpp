#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "error_matchers.hpp"
#include "semideg/enumerate.hpp"
#include "semideg/generators.hpp"
#include "test_graphs.hpp"

namespace semideg {
namespace {

using testing::labelled_graph;
using testing::raises;
using testing::random_graph;
using testing::TestRng;

OrientedGraph relabel(const OrientedGraph& g, const std::vector<Vertex>& perm) {
  GraphBuilder b(g.order());
  for (const Arc& a : g.arcs()) b.add_arc(perm[a.tail], perm[a.head]);
  return b.build();
}

std::vector<Vertex> random_perm(TestRng& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

std::uint64_t power3(std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= 3;
  return r;
}

// Burnside: orbits = average number of labelled graphs fixed by a
// permutation, counted by brute force over every labelled graph.
std::uint64_t burnside_classes(std::size_t n) {
  std::vector<OrientedGraph> all;
  const std::uint64_t total = power3(n * (n - 1) / 2);
  for (std::uint64_t i = 0; i < total; ++i) all.push_back(labelled_graph(n, i));
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t fixed = 0, perms = 0;
  do {
    ++perms;
    for (const auto& g : all) {
      bool same = true;
      for (const Arc& a : g.arcs())
        if (!g.has_arc(perm[a.tail], perm[a.head])) {
          same = false;
          break;
        }
      fixed += same;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed / perms;
}

TEST(Enumerate, IsomorphismClassCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 7, 42, 582, 21480};
  for (std::size_t n = 0; n <= 6; ++n)
    EXPECT_EQ(enumerate_unlabelled(n).size(), expected[n]) << "n=" << n;
}

TEST(Enumerate, BurnsideAgreesWithClassCount) {
  for (std::size_t n = 1; n <= 5; ++n)
    EXPECT_EQ(burnside_classes(n), enumerate_unlabelled(n).size()) << "n=" << n;
}

TEST(Enumerate, LabelledCountAndOrder) {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::uint64_t index = 0;
    enumerate_labelled(n, [&](const OrientedGraph& g) {
      EXPECT_EQ(g, labelled_graph(n, index));
      ++index;
      return true;
    });
    EXPECT_EQ(index, power3(n * (n - 1) / 2));
  }
}

TEST(Enumerate, VisitorCanStopEarly) {
  std::size_t seen = 0;
  enumerate_labelled(5, [&](const OrientedGraph&) { return ++seen < 10; });
  EXPECT_EQ(seen, 10u);
}

TEST(Enumerate, BudgetIsCheckedUpFront) {
  std::size_t seen = 0;
  EXPECT_TRUE(raises(ErrorCode::kBudgetExceeded, [&] {
    enumerate_labelled(5, [&](const OrientedGraph&) { return ++seen > 0; }, {100});
  }));
  EXPECT_EQ(seen, 0u);
  EXPECT_TRUE(raises(ErrorCode::kBudgetExceeded, [] { enumerate_unlabelled(6, {1000}); }));
}

TEST(Enumerate, RepresentativesAreCanonicalAndSorted) {
  const auto reps = enumerate_unlabelled(5);
  std::vector<CanonicalCode> codes;
  for (const auto& g : reps) {
    const auto code = canonical_form(g).code;
    codes.push_back(code);
    EXPECT_EQ(canonical_graph(g), canonical_graph(canonical_graph(g)));
  }
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  EXPECT_EQ(std::set<CanonicalCode>(codes.begin(), codes.end()).size(), codes.size());
  EXPECT_EQ(enumerate_oriented(3, true).size(), 7u);
  EXPECT_EQ(enumerate_oriented(3, false).size(), 27u);
}

TEST(Canonical, InvariantUnderRelabelling) {
  TestRng rng(21);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng.below(kMaxCanonicalOrder);
    const auto g = random_graph(rng, n, 0.2 + 0.7 * rng.unit());
    const auto h = relabel(g, random_perm(rng, n));
    const auto fg = canonical_form(g);
    ASSERT_EQ(fg.code, canonical_form(h).code) << "n=" << n;
    ASSERT_EQ(canonical_graph(g), canonical_graph(h));
    // The labelling realises the code.
    ASSERT_EQ(relabel(g, fg.labelling), canonical_graph(g));
  }
}

TEST(Canonical, RegularTournamentsWithManyAutomorphisms) {
  TestRng rng(2);
  const auto t = rotational_tournament(9);
  for (int i = 0; i < 20; ++i)
    EXPECT_EQ(canonical_form(relabel(t, random_perm(rng, 9))).code, canonical_form(t).code);
  // Paley and non-Paley circulants on 7 vertices are not isomorphic.
  EXPECT_NE(canonical_form(rotational_tournament(7, {1, 2, 4})).code,
            canonical_form(rotational_tournament(7)).code);
}

TEST(Canonical, DistinguishesEveryLabelledClassAtFive) {
  std::set<CanonicalCode> codes;
  enumerate_labelled(5, [&](const OrientedGraph& g) {
    codes.insert(canonical_form(g).code);
    return true;
  });
  EXPECT_EQ(codes.size(), 582u);
}

TEST(Canonical, HexIsFixedWidthAndOrderTagged) {
  const auto code = canonical_form(directed_cycle(3)).code;
  const std::string hex = code.hex();
  EXPECT_EQ(hex.substr(0, 3), "03-");
  EXPECT_EQ(hex.size(), 3u + 32u);
}

TEST(Canonical, RejectsLargeGraphs) {
  EXPECT_TRUE(raises(ErrorCode::kTooLarge, [] { canonical_form(directed_cycle(11)); }));
}

}  // namespace
}  // namespace semideg
