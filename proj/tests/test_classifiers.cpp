#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>

#include "error_matchers.hpp"
#include "semideg/classifiers.hpp"
#include "semideg/constructions.hpp"
#include "semideg/generators.hpp"
#include "test_graphs.hpp"

namespace semideg {
namespace {

using testing::make_graph;
using testing::raises;
using testing::random_graph;
using testing::TestRng;

// ---------------------------------------------------------------------------
// Test-side oracles, written against plain has_arc loops.

std::size_t count_into(const OrientedGraph& g, const FourPartition& p, Vertex v, int cls) {
  std::size_t c = 0;
  for (Vertex w : p.members(cls)) c += g.has_arc(v, w);
  return c;
}

std::size_t count_from(const OrientedGraph& g, const FourPartition& p, Vertex v, int cls) {
  std::size_t c = 0;
  for (Vertex w : p.members(cls)) c += g.has_arc(w, v);
  return c;
}

struct ParsedCondition {
  int cls;
  bool out;
};

// Reads a label such as "D2:(D3)^a(D4)_a" or "D1:(D1)^a_a" into its home
// class and two conditions, without looking at the library's table.
std::pair<int, std::vector<ParsedCondition>> parse_label(std::string_view label) {
  const std::string s(label);
  std::vector<ParsedCondition> conds;
  static const std::regex term(R"(\(D(\d)\)((?:[\^_]a)+))");
  for (auto it = std::sregex_iterator(s.begin() + 3, s.end(), term); it != std::sregex_iterator(); ++it) {
    const int cls = (*it)[1].str()[0] - '1';
    const std::string marks = (*it)[2];
    for (std::size_t i = 0; i < marks.size(); i += 2) conds.push_back({cls, marks[i] == '^'});
  }
  return {s[1] - '1', conds};
}

bool oracle_acceptable(const OrientedGraph& g, const FourPartition& p, Vertex v, double alpha) {
  for (const auto& pat : acceptance_patterns()) {
    const auto [home, conds] = parse_label(pat.label);
    if (home != p.class_of(v)) continue;
    bool ok = true;
    for (const auto& c : conds) {
      const std::size_t d = c.out ? count_into(g, p, v, c.cls) : count_from(g, p, v, c.cls);
      ok = ok && static_cast<double>(d) >= alpha;
    }
    if (ok) return true;
  }
  return false;
}

bool oracle_circular(const OrientedGraph& g, const FourPartition& p, Vertex v, double slack) {
  const int i = p.class_of(v);
  const int succ = (i + 1) % 4;
  const int pred = (i + 3) % 4;
  const double miss_out = static_cast<double>(p.size(succ) - count_into(g, p, v, succ));
  const double miss_in = static_cast<double>(p.size(pred) - count_from(g, p, v, pred));
  return miss_out <= slack * static_cast<double>(p.size(succ)) + 1e-9 &&
         miss_in <= slack * static_cast<double>(p.size(pred)) + 1e-9;
}

// Every S in the window checked by direct union of out-neighbourhoods.
bool oracle_expander(const OrientedGraph& g, double mu, double tau) {
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (static_cast<double>(size) < tau * static_cast<double>(n) - 1e-9 ||
        static_cast<double>(size) > (1.0 - tau) * static_cast<double>(n) + 1e-9)
      continue;
    std::set<Vertex> nbrs;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1u)
        for (Vertex w = 0; w < n; ++w)
          if (g.has_arc(v, w)) nbrs.insert(w);
    if (static_cast<double>(nbrs.size()) < static_cast<double>(size) + mu * static_cast<double>(n) - 1e-9)
      return false;
  }
  return true;
}

bool oracle_regular(const OrientedGraph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                    double eps) {
  auto density = [&](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    std::size_t e = 0;
    for (Vertex u : x)
      for (Vertex v : y) e += g.has_arc(u, v);
    return static_cast<double>(e) / static_cast<double>(x.size() * y.size());
  };
  const double dab = density(a, b);
  for (std::uint32_t xm = 1; xm < (1u << a.size()); ++xm) {
    std::vector<Vertex> x;
    for (std::size_t i = 0; i < a.size(); ++i)
      if ((xm >> i) & 1u) x.push_back(a[i]);
    if (!(static_cast<double>(x.size()) > eps * static_cast<double>(a.size()))) continue;
    for (std::uint32_t ym = 1; ym < (1u << b.size()); ++ym) {
      std::vector<Vertex> y;
      for (std::size_t j = 0; j < b.size(); ++j)
        if ((ym >> j) & 1u) y.push_back(b[j]);
      if (!(static_cast<double>(y.size()) > eps * static_cast<double>(b.size()))) continue;
      if (!(std::abs(density(x, y) - dab) < eps - 1e-12)) return false;
    }
  }
  return true;
}

std::size_t oracle_matching_size(const std::vector<Arc>& arcs, std::size_t n, std::size_t from = 0,
                                 std::uint64_t used = 0) {
  if (from == arcs.size()) return 0;
  std::size_t best = oracle_matching_size(arcs, n, from + 1, used);
  const Arc a = arcs[from];
  const std::uint64_t m = (std::uint64_t{1} << a.tail) | (std::uint64_t{1} << a.head);
  if ((used & m) == 0) best = std::max(best, 1 + oracle_matching_size(arcs, n, from + 1, used | m));
  return best;
}

FourPartition random_partition(TestRng& rng, std::size_t n) {
  std::vector<int> cls(n);
  for (auto& c : cls) c = static_cast<int>(rng.below(4));
  return FourPartition::from_assignment(cls, 0.001);
}

// ---------------------------------------------------------------------------

TEST(ClassifierParams, AlphaBetaAndValidation) {
  const auto p = ClassifierParams::make(0.1, 0.0001, 400);
  EXPECT_NEAR(p.circular_slack(), 0.001, 1e-12);
  EXPECT_NEAR(p.alpha(), (0.01 - 0.001) * 100, 1e-9);
  EXPECT_NEAR(p.beta(), (0.01 + 0.001) * 100, 1e-9);
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { ClassifierParams::make(0, 0.1, 4); }));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { ClassifierParams::make(1, -1, 4); }));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { ClassifierParams::make(1, 0.01, 4); }));
}

TEST(AcceptancePatterns, FourPerClassAndLabelsMatchConditions) {
  std::array<int, 4> per_class{};
  for (const auto& pat : acceptance_patterns()) {
    ++per_class[static_cast<std::size_t>(pat.home)];
    const auto [home, conds] = parse_label(pat.label);
    ASSERT_EQ(home, pat.home) << pat.label;
    ASSERT_EQ(conds.size(), 2u) << pat.label;
    std::multiset<std::pair<int, bool>> from_label, from_table;
    for (const auto& c : conds) from_label.insert({c.cls, c.out});
    for (const auto& c : pat.conditions) from_table.insert({c.cls, c.dir == Direction::kOut});
    EXPECT_EQ(from_label, from_table) << pat.label;
  }
  EXPECT_EQ(per_class, (std::array<int, 4>{4, 4, 4, 4}));
}

TEST(ClassifyVertex, AgreesWithOracleOnRandomInstances) {
  TestRng rng(31);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 400;
    const auto g = random_graph(rng, n, 0.02 + 0.1 * rng.unit());
    const auto p = random_partition(rng, n);
    const auto params = ClassifierParams::make(0.1, 0.001, n);
    for (Vertex v = 0; v < n; v += 7) {
      const auto cls = classify_vertex(g, p, v, params);
      ASSERT_EQ(cls.acceptable, oracle_acceptable(g, p, v, params.alpha())) << "v=" << v;
      ASSERT_EQ(cls.circular, oracle_circular(g, p, v, params.circular_slack()));
      ASSERT_EQ(is_circular(g, p, v, params), cls.circular);
      if (cls.acceptable) {
        const auto& pat = acceptance_patterns()[static_cast<std::size_t>(cls.pattern)];
        EXPECT_EQ(pat.home, p.class_of(v));
      }
    }
  }
}

TEST(ClassifyVertex, MemberOfTheFamilyIsAcceptableAndCircular) {
  const auto m = build_extremal_member(40, 0.001, 1);
  const auto params = ClassifierParams::make(0.1, 0.001, 40);
  for (Vertex v = 0; v < 40; ++v) {
    const auto c = classify_vertex(m.graph, m.partition, v, params);
    EXPECT_TRUE(c.acceptable);
    EXPECT_TRUE(c.circular);
  }
}

TEST(ClassifyVertex, MissingOneSuccessorBreaksCircularity) {
  const auto m = build_extremal_member(40, 0.001, 1);
  GraphBuilder b(m.graph);
  b.remove_arc(0, 10);
  const auto g = b.build();
  const auto params = ClassifierParams::make(0.1, 0.001, 40);
  EXPECT_FALSE(is_circular(g, m.partition, 0, params));
  EXPECT_FALSE(is_circular(g, m.partition, 10, params));
  EXPECT_TRUE(is_circular(g, m.partition, 1, params));
  EXPECT_TRUE(raises(ErrorCode::kVertexNotInPartition, [&] { is_circular(g, m.partition, 40, params); }));
}

TEST(ClassifyGood, RequiresImbalanceAndFollowsTheSign) {
  const auto m = build_extremal_member(40, 0.001, 1);
  const auto params = ClassifierParams::make(0.1, 0.001, 40);
  EXPECT_TRUE(raises(ErrorCode::kBalancedPartition,
                     [&] { classify_good(m.graph, m.partition, 0, params); }));
  // |D2| > |D4|: D4 members are good. 35 now sits in D2 and still sends
  // arcs into D1, so D1 vertices are not.
  const auto plus = m.partition.with_move(35, 1);
  EXPECT_EQ(plus.imbalance(), 2);
  EXPECT_TRUE(classify_good(m.graph, plus, 30, params).good);
  EXPECT_FALSE(classify_good(m.graph, plus, 0, params).good);
  // |D2| < |D4|: D2 members are good. 30 is joined to 15, now in D4.
  const auto minus = m.partition.with_move(15, 3);
  EXPECT_TRUE(classify_good(m.graph, minus, 12, params).good);
  const auto v30 = classify_good(m.graph, minus, 30, params);
  EXPECT_FALSE(v30.good);
  EXPECT_FALSE(v30.reason.empty());
}

// ---------------------------------------------------------------------------

TEST(Expander, ExhaustiveAgreesWithOracle) {
  TestRng rng(12);
  int expanders = 0, non = 0;
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 4 + rng.below(8);
    const auto g = random_graph(rng, n, 0.5 + 0.5 * rng.unit());
    const double tau = 0.1 + 0.3 * rng.unit();
    const double mu = 0.02 + (tau - 0.02) * rng.unit();
    const auto r = is_robust_outexpander(g, ExpanderParams::make(mu, tau));
    ASSERT_TRUE(r.exhaustive);
    const bool truth = oracle_expander(g, mu, tau);
    ASSERT_EQ(r.verdict == ExpansionVerdict::kExpander, truth);
    if (!truth) {
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_FALSE(expands(g, *r.witness, mu));
      ++non;
    } else {
      ++expanders;
    }
  }
  EXPECT_GT(expanders, 5);
  EXPECT_GT(non, 5);
}

TEST(Expander, WindowBounds) {
  EXPECT_EQ(expansion_window(10, 0.25), (std::pair<std::size_t, std::size_t>{3, 7}));
  EXPECT_EQ(expansion_window(12, 1.0 / 3.0), (std::pair<std::size_t, std::size_t>{4, 8}));
}

TEST(Expander, SamplingRefutesButNeverConfirms) {
  // Two disjoint tournaments: a half never reaches the other half.
  GraphBuilder b(40);
  const auto t = rotational_tournament(19);
  for (const Arc& a : t.arcs()) {
    b.add_arc(a.tail, a.head);
    b.add_arc(20 + a.tail, 20 + a.head);
  }
  const auto g = b.build();
  ExpanderOptions opts;
  opts.allow_sampling = true;
  opts.samples = 50'000;
  const auto r = is_robust_outexpander(g, ExpanderParams::make(0.05, 0.3), opts);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_NE(r.verdict, ExpansionVerdict::kExpander);

  const auto full = is_robust_outexpander(rotational_tournament(41), ExpanderParams::make(0.01, 0.3), opts);
  EXPECT_EQ(full.verdict, ExpansionVerdict::kNotRefuted);
  EXPECT_TRUE(raises(ErrorCode::kBudgetExceeded,
                     [] { is_robust_outexpander(directed_cycle(25), ExpanderParams::make(0.1, 0.2)); }));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [] { ExpanderParams::make(0.3, 0.2); }));
}

TEST(ExpansionUpgrade, HypothesisAndConclusionAreIndependentChecks) {
  TestRng rng(4);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 6 + rng.below(7);
    const auto g = random_graph(rng, n, 0.7 + 0.3 * rng.unit());
    const auto r = check_expansion_upgrade(g, 0.001, 0.01, 0.05);
    const bool degree = static_cast<double>(min_semidegree(g)) >= (3.0 / 8.0 - 0.003) * static_cast<double>(n) - 1e-9;
    EXPECT_EQ(r.degree_condition, degree);
    EXPECT_EQ(r.third_expander, oracle_expander(g, 0.01, 1.0 / 3.0));
    EXPECT_EQ(r.conclusion, oracle_expander(g, 0.01, 0.05));
    EXPECT_EQ(r.hypothesis, r.degree_condition && r.third_expander);
  }
}

// ---------------------------------------------------------------------------

TEST(RegularPair, AgreesWithOracle) {
  TestRng rng(9);
  for (int round = 0; round < 80; ++round) {
    const std::size_t na = 2 + rng.below(5);
    const std::size_t nb = 2 + rng.below(5);
    const auto g = random_graph(rng, na + nb, rng.unit());
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < na; ++v) a.push_back(v);
    for (Vertex v = na; v < na + nb; ++v) b.push_back(v);
    const double eps = 0.1 + 0.5 * rng.unit();
    const auto r = is_regular_pair(g, a, b, {eps, 0.0}, false);
    ASSERT_EQ(r.regular, oracle_regular(g, a, b, eps)) << "round " << round;
    EXPECT_DOUBLE_EQ(r.density, bipartite_density(g, a, b));
  }
}

TEST(RegularPair, CompletePairIsSuperRegular) {
  GraphBuilder bld(8);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 4; v < 8; ++v) bld.add_arc(u, v);
  const auto g = bld.build();
  const std::vector<Vertex> a{0, 1, 2, 3}, b{4, 5, 6, 7};
  const auto r = is_regular_pair(g, a, b, {0.2, 0.9}, true);
  EXPECT_TRUE(r.verdict);
  EXPECT_DOUBLE_EQ(r.density, 1.0);
  // Reversed direction has density 0 and fails the degree floor.
  const auto rev = is_regular_pair(g, b, a, {0.2, 0.5}, true);
  EXPECT_TRUE(rev.regular);
  EXPECT_FALSE(rev.super_regular);
  EXPECT_TRUE(rev.degree_witness.has_value());
}

TEST(RegularPair, Errors) {
  const auto g = directed_cycle(6);
  const std::vector<Vertex> a{0, 1}, b{1, 2}, none{}, big{0, 1, 2, 3, 4};
  EXPECT_TRUE(raises(ErrorCode::kEmptySide, [&] { is_regular_pair(g, none, a, {0.1, 0}, false); }));
  EXPECT_TRUE(raises(ErrorCode::kBadParameter, [&] { is_regular_pair(g, a, b, {0.1, 0}, false); }));
  EXPECT_TRUE(raises(ErrorCode::kBudgetExceeded,
                     [&] { is_regular_pair(g, big, std::vector<Vertex>{5}, {0.1, 0}, false, 4); }));
  EXPECT_TRUE(raises(ErrorCode::kEmptySide, [&] { bipartite_density(g, a, none); }));
}

// ---------------------------------------------------------------------------

TEST(Matching, MaximumSizeMatchesBruteForce) {
  TestRng rng(17);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng.below(10);
    const auto g = random_graph(rng, n, rng.unit());
    const auto p = random_partition(rng, n);
    const auto filter = class_pair_filter(p, {{0, 1}, {1, 2}, {3, 0}});
    std::vector<Arc> allowed;
    for (const Arc& a : g.arcs())
      if (filter(a.tail, a.head)) allowed.push_back(a);
    const auto m = max_matching(g, filter);
    ASSERT_TRUE(is_matching(g, m));
    for (const Arc& a : m) ASSERT_TRUE(filter(a.tail, a.head));
    ASSERT_TRUE(std::is_sorted(m.begin(), m.end()));
    ASSERT_EQ(m.size(), oracle_matching_size(allowed, n));
  }
}

TEST(Matching, IsMatchingRejectsSharedEndpointsAndMissingArcs) {
  const auto g = directed_cycle(4);
  EXPECT_TRUE(is_matching(g, std::vector<Arc>{{0, 1}, {2, 3}}));
  EXPECT_FALSE(is_matching(g, std::vector<Arc>{{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_matching(g, std::vector<Arc>{{1, 0}}));
  EXPECT_FALSE(is_matching(g, std::vector<Arc>{{0, 9}}));
}

}  // namespace
}  // namespace semideg
