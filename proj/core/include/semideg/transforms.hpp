#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semideg/certificate.hpp"
#include "semideg/classifiers.hpp"
#include "semideg/graph.hpp"
#include "semideg/partition.hpp"
#include "semideg/solvers.hpp"

namespace semideg {

using Path = std::vector<Vertex>;
using PathSystem = std::vector<Path>;

// expansion[w] lists, in path order, the input vertices that output vertex w
// stands for (a single vertex unless w was contracted).
struct Contraction {
  OrientedGraph graph;
  FourPartition partition;
  std::vector<std::vector<Vertex>> expansion;
};

// Each path j1..jr with both ends in D_l becomes one vertex in
// D_l with in-neighbours N⁻(j1) ∩ D_{l-1} and out-neighbours N⁺(jr) ∩ D_{l+1};
// every other arc at a path vertex is dropped. Paths are contracted one
// after another; the outcome does not depend on their
// order. Output vertices keep the relative order of the input vertices, a
// contracted path taking the place of its first vertex.
// Throws EndpointClassMismatch, PathsIntersect, ArcMissing, OutOfRange, or
// BadParameter (empty path).
Contraction contract_paths(const OrientedGraph& g, const FourPartition& p,
                           const PathSystem& paths);

// Composes two contraction steps: the result maps `outer` vertices straight
// to vertices of the graph `inner` was applied to.
std::vector<std::vector<Vertex>> compose_expansions(
    const std::vector<std::vector<Vertex>>& inner, const std::vector<std::vector<Vertex>>& outer);

// Replaces every vertex of `cycle` by its expansion.
std::vector<Vertex> expand_sequence(const std::vector<std::vector<Vertex>>& expansion,
                                    std::span<const Vertex> seq);

struct MergeResult {
  OrientedGraph graph;
  Vertex w = 0;                    // always the last vertex
  std::vector<Vertex> original;    // original[i] for i < w
  std::vector<Vertex> n_u, n_v;    // the split of N⁺(u) ∩ N⁻(v)
};

// Removes u and v and adds w with N⁺(w) = N⁺(u) \ N_v \ {v} and
// N⁻(w) = N⁻(v) \ N_u \ {u}, where N⁺(u) ∩ N⁻(v) is shuffled with the seed
// and N_u takes the first ceil(half). Throws SameVertex or OutOfRange.
MergeResult merge_endpoints(const OrientedGraph& g, Vertex u, Vertex v, std::uint64_t split_seed);

enum class RelocationOutcome { kAllGood, kBalanced, kStuck };
const char* to_string(RelocationOutcome o) noexcept;

struct RelocationMove {
  Vertex vertex = 0;
  int from = 0;
  int to = 0;
  std::string trigger;
};

struct RelocationResult {
  FourPartition partition;
  std::vector<RelocationMove> moves;
  RelocationOutcome outcome = RelocationOutcome::kAllGood;
  std::optional<Vertex> stuck_vertex;  // bad vertex with no applicable rule
};

// Moves the least bad vertex, re-classifies, and repeats. With |D₂| > |D₄|:
// bad D₁/D₃ vertices go to D₄; bad D₂ vertices go to D₁ if they have >= β
// out-neighbours in D₁ or D₂, else to D₃ if they have >= β in-neighbours in
// D₂ or D₃. The mirror rules apply when |D₂| < |D₄|. Stops when all vertices
// are good, when a move makes |D₂| = |D₄| (kBalanced, move applied), or when
// a bad vertex has no rule (kStuck). Throws BalancedPartition at entry.
RelocationResult relocate_bad_vertices(const OrientedGraph& g, const FourPartition& p,
                                       const ClassifierParams& params);

struct PatternOptions {
  bool require_circular = true;
  bool closed = false;  // also require an arc from the last vertex to the first
  std::uint64_t max_nodes = 2'000'000;
};

// Path whose i-th vertex lies in class pattern[i], avoiding `avoid`, by
// depth-first search taking the least candidate first. Throws EmptyClass,
// BadParameter (empty pattern or class index outside 0..3) or
// PatternUnsatisfied.
Path find_pattern_path(const OrientedGraph& g, const FourPartition& p, std::span<const int> pattern,
                       const ClassifierParams& params, const VertexSet& avoid,
                       const PatternOptions& options = {});

struct BalanceResult {
  Contraction contraction;             // balanced graph, partition and expansion to the input
  std::vector<Arc> m0;                 // maximum D₂ <-> D₄ matching of the input
  // In input vertices. A later path may pass through an earlier one.
  std::vector<Path> absorbing_paths;
  std::optional<Path> r13;             // evens out D₁ and D₃
  std::optional<Path> r21;             // evens out D₂ and D₁
};

// Contracts an absorbing path through the worst non-circular vertex until
// every vertex is circular (re-evaluated after each step), then one path
// shaped (D₃D₃D₄D₁D₂)^s D₃ (or (D₁D₁D₂D₃D₄)^s D₁) and one shaped
// (D₂D₄D₁D₂D₃D₄D₂D₃D₄D₁)^s D₂ (or (D₁D₁D₂D₃D₃D₄)^s D₁) so that all four
// classes end up equal. Throws Unbalanced (|D₂| != |D₄|), ImbalanceTooLarge
// (some ||D_i| - |D_j|| > 300√μ n) or SupplyExhausted.
BalanceResult balance_classes(const OrientedGraph& g, const FourPartition& p,
                              const ClassifierParams& params);

// Cycle factor of a balanced-by-D₂/D₄ member with the requested lengths:
// every cycle except the longest is a circular pattern cycle (length-3
// cycles are D₂D₃D₄ triangles, other lengths use a D₁D₁, D₃D₃D₃ or
// D₂D₄D₁D₂ piece by residue mod 4), and the longest comes from
// balance_classes and dense_4partite_hamiltonian on what remains.
// Returns a kCycleSet certificate.
Certificate extremal_cycle_factor(const OrientedGraph& g, const FourPartition& p,
                                  const LengthPartition& lengths, const ClassifierParams& params,
                                  double eta = 0.1);

struct ClusterSplit {
  std::vector<std::size_t> targets;  // n_1..n_j
  std::vector<double> ratios;        // ξ_1..ξ_j
  double eta = 0.0;
  std::uint64_t seed = 0;
};

struct SplitViolation {
  Vertex vertex = 0;
  std::size_t part = 0;
  bool out = true;  // σ = + when true
};

struct SplitPart {
  std::vector<Vertex> members;
  bool retention_ok = true;
  double worst_margin = 0.0;  // min over v, σ of d^σ_S(v) - (ξ d^σ(v) - n^{2/3})
  std::size_t min_semidegree = 0;
  bool semidegree_ok = true;  // δ⁰(D[S]) >= 2η|S|
};

struct SplitReport {
  std::vector<SplitPart> parts;
  std::vector<SplitViolation> violations;  // at most the first 64
  std::size_t violation_count = 0;
  bool retention_ok() const { return violation_count == 0; }
};

// Each vertex joins part i with probability ξ_i (else the reserve); parts
// over target shed random members to the reserve, then parts under target
// draw random reserve vertices. Retention d^σ_{S_i}(v) >= ξ_i d^σ(v) - n^{2/3}
// is checked for every vertex v and part i. Throws BadSpec.
SplitReport random_split(const OrientedGraph& g, const ClusterSplit& spec);

}  // namespace semideg
