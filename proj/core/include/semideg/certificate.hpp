#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semideg/graph.hpp"

namespace semideg {

enum class CertificateKind { kCycle, kPath, kCycleSet, kPathSet };

const char* to_string(CertificateKind k) noexcept;

struct Certificate {
  CertificateKind kind = CertificateKind::kCycle;
  std::vector<std::vector<Vertex>> sequences;
};

struct Validation {
  bool valid = true;
  std::string reason;
  explicit operator bool() const noexcept { return valid; }
};

// The validators below only use has_arc() and order(); they share nothing
// with the search code whose output they check.

// seq[0] -> seq[1] -> ... -> seq.back() -> seq[0], all distinct, length >= 3.
Validation validate_cycle(const OrientedGraph& g, std::span<const Vertex> seq, bool spanning);
Validation validate_path(const OrientedGraph& g, std::span<const Vertex> seq, Vertex from, Vertex to,
                         bool spanning);
// Disjoint cycles whose lengths, in any order, are `lengths`, covering V.
Validation validate_cycle_factor(const OrientedGraph& g,
                                 const std::vector<std::vector<Vertex>>& cycles,
                                 std::span<const std::size_t> lengths);
// paths[i] runs from pairs[i].first to pairs[i].second; paths disjoint.
Validation validate_linkage(const OrientedGraph& g, const std::vector<std::vector<Vertex>>& paths,
                            std::span<const std::pair<Vertex, Vertex>> pairs, bool spanning);
// Hamiltonian cycle meeting seq in cyclic order.
Validation validate_ordered_cycle(const OrientedGraph& g, std::span<const Vertex> cycle,
                                  std::span<const Vertex> seq);

}  // namespace semideg
