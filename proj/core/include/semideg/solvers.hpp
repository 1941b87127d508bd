#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semideg/budget.hpp"
#include "semideg/certificate.hpp"
#include "semideg/graph.hpp"
#include "semideg/partition.hpp"

namespace semideg {

// The exact solvers work on 64-bit vertex masks and throw Error{kTooLarge}
// for graphs with more than kMaxExactOrder vertices.
inline constexpr std::size_t kMaxExactOrder = 64;

struct SolveResult {
  Outcome outcome = Outcome::kFalse;
  std::optional<Certificate> certificate;  // present iff outcome == kTrue
  std::uint64_t nodes = 0;
};

// Certificate starts at vertex 0 and is the lexicographically least
// Hamiltonian cycle with that start.
SolveResult hamiltonian_cycle(const OrientedGraph& g, const Budget& budget = {});

// Throws Error{kSameVertex} when from == to.
SolveResult hamiltonian_path(const OrientedGraph& g, Vertex from, Vertex to,
                             const Budget& budget = {});

struct ConnectivityResult {
  Outcome outcome = Outcome::kFalse;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;  // first failing ordered pair
  std::size_t pairs_checked = 0;
};

// Hamiltonian path from x to y for every ordered pair x != y. The budget
// applies to the whole loop.
ConnectivityResult strongly_hamiltonian_connected(const OrientedGraph& g,
                                                  const Budget& budget = {});

struct LengthPartition {
  std::vector<std::size_t> lengths;  // non-increasing

  // Sorts the lengths. Throws Error{kBadPartition} unless they sum to n and
  // each is at least 3.
  static LengthPartition make(std::vector<std::size_t> lengths, std::size_t n);
};

// Disjoint cycles with exactly the requested lengths covering V.
SolveResult cycle_factor(const OrientedGraph& g, const LengthPartition& lengths,
                         const Budget& budget = {});

// A cycle of length l (3 <= l <= n) whose least vertex is as small as
// possible.
SolveResult cycle_of_length(const OrientedGraph& g, std::size_t length, const Budget& budget = {});

struct PancyclicResult {
  std::vector<std::pair<std::size_t, SolveResult>> per_length;
  bool all_true() const;
};

// Throws Error{kBadParameter} unless 3 <= l_min <= l_max <= n. The budget is
// applied per length.
PancyclicResult pancyclic_range(const OrientedGraph& g, std::size_t l_min, std::size_t l_max,
                                const Budget& budget = {});

// Hamiltonian cycle meeting seq in cyclic order (start free, direction that
// of the cycle). The certificate starts at seq[0]. Throws
// Error{kDuplicateVertices} or Error{kOutOfRange}.
SolveResult k_ordered_hamiltonian(const OrientedGraph& g, std::span<const Vertex> seq,
                                  const Budget& budget = {});

using TerminalPair = std::pair<Vertex, Vertex>;

// Disjoint paths x_i -> y_i, each with at least one arc; with `spanning` the
// paths must cover V. Throws Error{kTerminalClash} unless the 2k terminals
// are distinct.
SolveResult k_linkage(const OrientedGraph& g, std::span<const TerminalPair> pairs, bool spanning,
                      const Budget& budget = {});

struct LinkednessResult {
  Outcome outcome = Outcome::kFalse;
  std::optional<std::vector<TerminalPair>> failing_pairs;
  std::size_t systems_checked = 0;
};

// Quantifies k_linkage over every terminal system, with pairs listed in
// increasing order of x_i. n < 2k is vacuously true.
LinkednessResult is_k_linked(const OrientedGraph& g, std::size_t k, bool spanning,
                             const Budget& budget = {});

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

// Longest shortest-path distance over ordered pairs; kInfiniteDistance
// unless g is strongly connected. Graphs with fewer than 2 vertices have
// diameter 0.
std::size_t diameter(const OrientedGraph& g);
// BFS distances from source, kInfiniteDistance for unreachable vertices.
std::vector<std::size_t> distances_from(const OrientedGraph& g, Vertex source);

struct LinkerResult {
  bool success = false;
  std::vector<std::vector<Vertex>> legs;  // legs built so far
  std::size_t failed_leg = 0;             // meaningful when !success
  std::size_t total_length() const;       // arcs over all legs
};

// Shortest legs seq[0] -> seq[1] -> ... -> seq[k-1] found one at a time by
// BFS, each leg avoiding earlier legs and the other sequence vertices and
// using at most max_leg arcs. A failure is not a refutation.
LinkerResult greedy_ordered_linker(const OrientedGraph& g, std::span<const Vertex> seq,
                                   std::size_t max_leg = 5);
// Same for the pairs x_i -> y_i, each avoiding earlier legs and every other
// terminal.
LinkerResult greedy_pair_linker(const OrientedGraph& g, std::span<const TerminalPair> pairs,
                                std::size_t max_leg = 5);

// Hamiltonian cycle through D₁ -> D₂ -> D₃ -> D₄ -> D₁ ... built from perfect
// matchings between consecutive classes, merged by partner swaps. Throws
// Error{kUnbalanced}, Error{kDegreeFloorViolated}, Error{kBadParameter}
// (η outside [0, 1/8)), or Error{kMergeFailed}.
std::vector<Vertex> dense_4partite_hamiltonian(const OrientedGraph& g, const FourPartition& p,
                                               double eta);

}  // namespace semideg
