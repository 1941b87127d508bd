#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semideg/graph.hpp"
#include "semideg/partition.hpp"

namespace semideg {

// Constants of the acceptable / circular / good vertex classification.
//   alpha = (1/100 - c√μ) n/4,  beta = (1/100 + c√μ) n/4.
struct ClassifierParams {
  double c = 1.0;
  double mu = 0.0;
  std::size_t n = 0;

  // Throws Error{kBadParameter} unless c > 0, μ > 0 and alpha > 0.
  static ClassifierParams make(double c, double mu, std::size_t n);

  double root_mu() const;
  double alpha() const;
  double beta() const;
  // c√μ: the fraction of a neighbouring class a circular vertex may miss.
  double circular_slack() const { return c * root_mu(); }
};

enum class Direction { kOut, kIn };

struct NeighbourCondition {
  int cls = 0;  // class index 0..3
  Direction dir = Direction::kOut;
};

// One of the 16 acceptable patterns, e.g. D₁:(D₂)^{>α}(D₄)_{>α} is
// {home 0, {out into class 1, in from class 3}}. Superscripts count
// out-neighbours, subscripts in-neighbours.
struct AcceptancePattern {
  int home = 0;
  std::array<NeighbourCondition, 2> conditions{};
  std::string_view label;
};

const std::array<AcceptancePattern, 16>& acceptance_patterns();

// |N^dir(v) ∩ D_cls|
std::size_t class_degree(const OrientedGraph& g, const FourPartition& p, Vertex v, int cls,
                         Direction dir);

struct VertexClassification {
  bool acceptable = false;
  int pattern = -1;  // index into acceptance_patterns() of the first match
  bool circular = false;
};

// Throws Error{kVertexNotInPartition}.
VertexClassification classify_vertex(const OrientedGraph& g, const FourPartition& p, Vertex v,
                                     const ClassifierParams& params);
bool is_circular(const OrientedGraph& g, const FourPartition& p, Vertex v,
                 const ClassifierParams& params);

struct GoodVerdict {
  bool good = false;
  std::string reason;
};

// Good/bad split used while |D₂| != |D₄|. Throws Error{kBalancedPartition}
// when |D₂| == |D₄|.
GoodVerdict classify_good(const OrientedGraph& g, const FourPartition& p, Vertex v,
                          const ClassifierParams& params);

// ---------------------------------------------------------------------------
// Robust outexpansion

struct ExpanderParams {
  double mu = 0.0;
  double tau = 0.0;
  // Throws Error{kBadParameter} unless 0 < μ <= τ < 1.
  static ExpanderParams make(double mu, double tau);
};

enum class ExpansionVerdict { kExpander, kNotExpander, kNotRefuted };

struct ExpanderOptions {
  std::size_t exhaustive_limit = 20;
  // Above exhaustive_limit: sample random subsets instead of throwing. A
  // sampled run can only refute, never confirm.
  bool allow_sampling = false;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
};

struct ExpanderResult {
  ExpansionVerdict verdict = ExpansionVerdict::kNotRefuted;
  bool exhaustive = false;
  std::optional<std::vector<Vertex>> witness;  // violating S, smallest bitmask first
  std::uint64_t subsets_checked = 0;
};

// Size window [ceil(τn), floor((1-τ)n)] of the sets S that must expand.
std::pair<std::size_t, std::size_t> expansion_window(std::size_t n, double tau);
std::size_t out_neighbourhood_size(const OrientedGraph& g, std::span<const Vertex> s);
// |N⁺(S)| >= |S| + μ|R|
bool expands(const OrientedGraph& g, std::span<const Vertex> s, double mu);

ExpanderResult is_robust_outexpander(const OrientedGraph& g, const ExpanderParams& params,
                                     const ExpanderOptions& options = {});

// Evaluates both sides of "δ⁰(R) >= (3/8 - 3d)|R| and robust (μ,1/3)-outexpander
// => robust (μ,τ)-outexpander" independently, without assuming the
// implication.
struct ExpansionUpgradeResult {
  bool degree_condition = false;
  bool third_expander = false;
  bool hypothesis = false;
  bool conclusion = false;
  std::optional<std::vector<Vertex>> conclusion_witness;
  bool implication_holds() const { return !hypothesis || conclusion; }
};

ExpansionUpgradeResult check_expansion_upgrade(const OrientedGraph& r, double d, double mu, double tau,
                           std::size_t exhaustive_limit = 20);

// ---------------------------------------------------------------------------
// Densities and regular pairs

// a(A, B) / (|A||B|), arcs counted from A to B only.
double bipartite_density(const OrientedGraph& g, std::span<const Vertex> a,
                         std::span<const Vertex> b);

struct RegularityParams {
  double eps = 0.0;
  double d = 0.0;
};

struct RegularityResult {
  double density = 0.0;
  bool regular = false;
  bool super_regular = false;  // only meaningful when requested
  bool verdict = false;        // regular, and super_regular when requested
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> witness;
  std::optional<Vertex> degree_witness;
};

// Exhaustive over all X ⊆ A, Y ⊆ B with |X| > ε|A|, |Y| > ε|B|.
// Throws EmptySide, BadParameter (A, B overlap) or BudgetExceeded (a side
// larger than side_limit).
RegularityResult is_regular_pair(const OrientedGraph& g, std::span<const Vertex> a,
                                 std::span<const Vertex> b, const RegularityParams& params,
                                 bool super, std::size_t side_limit = 12);

// ---------------------------------------------------------------------------
// Matchings

using ArcFilter = std::function<bool(Vertex tail, Vertex head)>;

// Maximum set of filtered arcs with pairwise distinct endpoints, computed on
// the underlying undirected graph of the filtered arcs. Arcs are returned in
// lexicographic order.
std::vector<Arc> max_matching(const OrientedGraph& g, const ArcFilter& filter);

// Accepts arc (u, v) iff (class(u), class(v)) is one of `allowed`.
ArcFilter class_pair_filter(const FourPartition& p, std::vector<std::pair<int, int>> allowed);

bool is_matching(const OrientedGraph& g, std::span<const Arc> arcs);

}  // namespace semideg
