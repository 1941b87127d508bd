#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semideg/graph.hpp"

namespace semideg {

// Maximum order for which canonical codes are defined: 45 vertex pairs at
// two bits each fit in 128 bits.
inline constexpr std::size_t kMaxCanonicalOrder = 10;

// Isomorphism-invariant fingerprint. Pair (q, p), q < p, of the canonical
// labelling contributes two bits (0 = no arc, 1 = q->p, 2 = p->q); pairs are
// ordered by p then q with earlier pairs more significant.
struct CanonicalCode {
  std::uint8_t order = 0;
  std::array<std::uint64_t, 2> bits{};  // bits[0] holds the most significant half
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits[0] * 0x9e3779b97f4a7c15ULL ^ c.bits[1] ^ c.order);
  }
};

struct CanonicalForm {
  CanonicalCode code;
  // labelling[v] = canonical position of vertex v.
  std::vector<Vertex> labelling;
};

// Exact canonical labelling for n <= kMaxCanonicalOrder: colour refinement by
// (out, in) neighbourhood counts, then individualisation of the first
// non-singleton cell with lexicographic branch-and-bound on the code.
CanonicalForm canonical_form(const OrientedGraph& g);

// The graph relabelled by its canonical labelling.
OrientedGraph canonical_graph(const OrientedGraph& g);

struct EnumerationBudget {
  std::uint64_t max_graphs = 50'000'000;
};

// Calls `visit` for every labelled oriented graph on n vertices (3^(n(n-1)/2)
// of them). Pair states are counted like base-3 digits over pairs in
// ascending (u, v) order, the last pair varying fastest. Throws
// BudgetExceeded before visiting anything when the total exceeds the budget.
// `visit` may return false to stop early.
void enumerate_labelled(std::size_t n, const std::function<bool(const OrientedGraph&)>& visit,
                        EnumerationBudget budget = {});

// One canonical representative per isomorphism class, in ascending
// CanonicalCode order. Built by extending each class on n-1 vertices with a
// new vertex in every possible way and deduplicating by canonical code.
// Throws BudgetExceeded when more than budget.max_graphs candidate
// extensions would be examined.
std::vector<OrientedGraph> enumerate_unlabelled(std::size_t n, EnumerationBudget budget = {});

// Convenience wrapper over both modes.
std::vector<OrientedGraph> enumerate_oriented(std::size_t n, bool up_to_isomorphism,
                                              EnumerationBudget budget = {});

}  // namespace semideg
