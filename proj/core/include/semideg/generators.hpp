#pragma once

#include <cstdint>
#include <vector>

#include "semideg/graph.hpp"

namespace semideg {

// i -> i+1 (mod n).
OrientedGraph directed_cycle(std::size_t n);

// i -> j for every i < j.
OrientedGraph transitive_tournament(std::size_t n);

// Circulant tournament on Z_n: i -> i+s for every s in `symbols`.
// `symbols` must contain exactly one of s, n-s for each s in 1..n-1; when
// empty, {1, ..., (n-1)/2} is used. Requires n odd.
OrientedGraph rotational_tournament(std::size_t n, std::vector<std::size_t> symbols = {});

// Tournament with every out-degree in {floor((n-1)/2), ceil((n-1)/2)}.
// Odd n gives the rotational tournament; even n extends the rotational
// tournament on n-1 vertices by a vertex beating 0..n/2-1.
OrientedGraph near_regular_tournament(std::size_t n);

// Each unordered pair {u < v}, in ascending (u, v) order, consumes one draw r
// of Rng::uniform01(): u->v if r < p/2, v->u if p/2 <= r < p, no arc
// otherwise.
OrientedGraph random_oriented(std::size_t n, double p, std::uint64_t seed);

// Oriented graph with δ⁰ >= min_semidegree, sampled by scrambling a
// near-regular tournament (random relabelling plus directed-triangle
// reversals, which preserve every degree) and then deleting random arcs
// while the bound allows. Requires min_semidegree <= floor((n-1)/2).
OrientedGraph random_min_semidegree(std::size_t n, std::size_t min_semidegree,
                                    std::uint64_t seed, double deletion_rate = 0.5);

}  // namespace semideg
