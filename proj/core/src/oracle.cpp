#include "semideg/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "semideg/error.hpp"

namespace semideg {

namespace {

void require_small(const OrientedGraph& g) {
  if (g.order() > kOracleMaxOrder)
    throw Error(ErrorCode::kBudgetExceeded,
                "brute-force oracle limited to n <= " + std::to_string(kOracleMaxOrder));
}

bool closed_walk(const OrientedGraph& g, const std::vector<Vertex>& perm, std::size_t begin,
                 std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = perm[begin + i];
    const Vertex b = perm[begin + (i + 1) % len];
    if (!g.has_arc(a, b)) return false;
  }
  return true;
}

}  // namespace

bool oracle_hamiltonian_cycle(const OrientedGraph& g) {
  require_small(g);
  const std::size_t n = g.order();
  if (n < 3) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    if (closed_walk(g, perm, 0, n)) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

bool oracle_hamiltonian_path(const OrientedGraph& g, Vertex from, Vertex to) {
  require_small(g);
  const std::size_t n = g.order();
  if (from >= n || to >= n || from == to) return false;
  std::vector<Vertex> middle;
  for (Vertex v = 0; v < n; ++v)
    if (v != from && v != to) middle.push_back(v);
  do {
    Vertex prev = from;
    bool ok = true;
    for (Vertex v : middle) {
      if (!g.has_arc(prev, v)) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok && g.has_arc(prev, to)) return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

bool oracle_cycle_factor(const OrientedGraph& g, std::span<const std::size_t> lengths) {
  require_small(g);
  const std::size_t n = g.order();
  if (std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}) != n) return false;
  for (std::size_t l : lengths)
    if (l < 3) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    std::size_t begin = 0;
    bool ok = true;
    for (std::size_t l : lengths) {
      if (!closed_walk(g, perm, begin, l)) {
        ok = false;
        break;
      }
      begin += l;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<Vertex>> oracle_hamiltonian_cycles(const OrientedGraph& g) {
  require_small(g);
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> cycles;
  if (n < 3) return cycles;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    if (closed_walk(g, perm, 0, n)) cycles.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return cycles;
}

bool oracle_k_ordered(const OrientedGraph& g, std::span<const Vertex> seq) {
  for (const auto& cycle : oracle_hamiltonian_cycles(g)) {
    // Try every rotation; accept if seq appears as a subsequence.
    const std::size_t n = cycle.size();
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t matched = 0;
      for (std::size_t i = 0; i < n && matched < seq.size(); ++i)
        if (cycle[(r + i) % n] == seq[matched]) ++matched;
      if (matched == seq.size()) return true;
    }
  }
  return false;
}

}  // namespace semideg
