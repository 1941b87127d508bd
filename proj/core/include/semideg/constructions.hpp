#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semideg/classifiers.hpp"
#include "semideg/graph.hpp"
#include "semideg/partition.hpp"

namespace semideg {

struct ExtremalMember {
  OrientedGraph graph;
  FourPartition partition;
};

// Classes D_{i+1} = {i n/4, ..., (i+1) n/4 - 1}. Every arc D_i -> D_{i+1};
// near-regular tournaments inside D₁ and D₃; each pair {u in D₂, w in D₄}
// (ascending u, then ascending w) oriented u -> w on a seeded coin, w -> u
// otherwise. Throws Error{kBadParameter} unless 4 | n, n > 0 and μ > 0.
ExtremalMember build_extremal_member(std::size_t n, double mu, std::uint64_t seed);

struct ArcInequality {
  std::string label;    // e.g. "a(D1,D2)"
  std::size_t value = 0;
  double bound = 0.0;   // strict lower bound
  bool pass = false;
};

struct ExtremalReport {
  bool sizes_ok = false;
  std::vector<int> bad_size_classes;

  bool arcs_ok = false;
  std::vector<ArcInequality> arc_checks;  // 4 consecutive, a(D1), a(D3), a(D2,D4), a(D4,D2)

  bool vertices_ok = false;
  bool all_acceptable = false;
  std::optional<Vertex> unacceptable_witness;
  std::size_t non_circular = 0;
  double non_circular_bound = 0.0;  // 100√μ n
  std::optional<Vertex> non_circular_witness;

  int rotation = 0;  // shift applied to the partition that was checked
  bool passed() const { return sizes_ok && arcs_ok && vertices_ok; }
};

// Checks the given partition only. With try_rotations, the four cyclic
// rotations are checked in order and the first passing one (or, failing
// that, the unrotated report) is returned.
ExtremalReport verify_extremal_member(const OrientedGraph& g, const FourPartition& p,
                                      const ClassifierParams& params, bool try_rotations = false);

// Heuristic only: local search that moves each vertex to the class
// maximising |N⁺(v) ∩ D_{i+1}| + |N⁻(v) ∩ D_{i-1}|, from several seeded
// random starts. Returns the best partition found by total consecutive arcs;
// carries no guarantee of membership.
FourPartition guess_extremal_partition(const OrientedGraph& g, double mu, std::uint64_t seed,
                                       std::size_t restarts = 8);

struct LinkageGadget {
  std::size_t k = 0;
  std::vector<Vertex> b, c, x, y;
};

struct LinkageCounterexample {
  OrientedGraph graph;
  LinkageGadget gadget;
};

// Layout: B = 0..m-1, C = m..2m-1, x_i = 2m+i-1, y_i = 2m+k+i-1 where
// m = (n-2k)/2. Arcs inside X and inside Y go from lower to higher index;
// B and C carry rotational tournaments. Throws Error{kBadParameter} unless
// k >= 1 and (n-2k)/2 is a positive odd integer.
LinkageCounterexample build_linkage_counterexample(std::size_t n, std::size_t k);

}  // namespace semideg
