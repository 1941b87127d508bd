#pragma once

#include <cstdint>
#include <vector>

#include "semideg/graph.hpp"

namespace semideg::testing {

OrientedGraph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> arcs);

// Independent xorshift stream for test-side generators, so test inputs do
// not depend on the library's own RNG.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ull + 1) {}
  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  std::size_t below(std::size_t b) { return static_cast<std::size_t>(next() % b); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Each pair gets no arc, u->v or v->u with probabilities (1-p, p/2, p/2).
OrientedGraph random_graph(TestRng& rng, std::size_t n, double p);

// The i-th labelled oriented graph on n vertices in base-3 pair order
// (pair (u,v) with u<v in lexicographic order, first pair most significant).
OrientedGraph labelled_graph(std::size_t n, std::uint64_t index);

}  // namespace semideg::testing
