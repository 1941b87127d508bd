#include "semideg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semideg/error.hpp"
#include "semideg/random.hpp"

namespace semideg {

OrientedGraph directed_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kBadParameter, "directed cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_arc(i, (i + 1) % n);
  return b.build();
}

OrientedGraph transitive_tournament(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_arc(i, j);
  return b.build();
}

OrientedGraph rotational_tournament(std::size_t n, std::vector<std::size_t> symbols) {
  if (n % 2 == 0)
    throw Error(ErrorCode::kBadParameter,
                "rotational tournament needs odd n, got " + std::to_string(n));
  if (symbols.empty()) {
    symbols.resize((n - 1) / 2);
    std::iota(symbols.begin(), symbols.end(), std::size_t{1});
  }
  std::vector<bool> seen(n, false);
  for (std::size_t s : symbols) {
    if (s == 0 || s >= n || seen[s] || seen[n - s])
      throw Error(ErrorCode::kBadParameter, "invalid rotational symbol set");
    seen[s] = true;
  }
  if (symbols.size() != (n - 1) / 2)
    throw Error(ErrorCode::kBadParameter, "rotational symbol set must have (n-1)/2 entries");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t s : symbols) b.add_arc(i, (i + s) % n);
  return b.build();
}

OrientedGraph near_regular_tournament(std::size_t n) {
  if (n == 0) return OrientedGraph::from_arcs(0, {});
  if (n % 2 == 1) return rotational_tournament(n);
  const std::size_t m = n - 1;
  GraphBuilder b(n);
  for (Vertex i = 0; i < m; ++i)
    for (std::size_t s = 1; s <= (m - 1) / 2; ++s) b.add_arc(i, (i + s) % m);
  const Vertex extra = m;
  for (Vertex i = 0; i < m; ++i) {
    if (i < n / 2)
      b.add_arc(extra, i);
    else
      b.add_arc(i, extra);
  }
  return b.build();
}

OrientedGraph random_oriented(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::kBadParameter, "arc probability must lie in [0,1]");
  Rng rng(seed);
  GraphBuilder b(n);
  const double half = p / 2.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double r = rng.uniform01();
      if (r < half)
        b.add_arc(u, v);
      else if (r < p)
        b.add_arc(v, u);
    }
  }
  return b.build();
}

OrientedGraph random_min_semidegree(std::size_t n, std::size_t min_semidegree,
                                    std::uint64_t seed, double deletion_rate) {
  if (n > 0 && min_semidegree > (n - 1) / 2)
    throw Error(ErrorCode::kBadParameter, "no oriented graph on " + std::to_string(n) +
                                              " vertices has semidegree " +
                                              std::to_string(min_semidegree));
  Rng rng(seed);
  const OrientedGraph base = near_regular_tournament(n);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  rng.shuffle(std::span<Vertex>(label));

  GraphBuilder b(n);
  for (const Arc& a : base.arcs()) b.add_arc(label[a.tail], label[a.head]);
  if (n < 3) return b.build();

  // Reversing a directed triangle keeps every in- and out-degree.
  const std::size_t reversals = 4 * n * n;
  for (std::size_t r = 0; r < reversals; ++r) {
    const Vertex u = static_cast<Vertex>(rng.below(n));
    const std::vector<Vertex> succ = b.out(u).to_vector();
    if (succ.empty()) continue;
    const Vertex v = succ[rng.below(succ.size())];
    const VertexSet closing = b.out(v) & b.in(u);
    if (closing.empty()) continue;
    const std::vector<Vertex> ws = closing.to_vector();
    const Vertex w = ws[rng.below(ws.size())];
    b.reverse_arc(u, v);
    b.reverse_arc(v, w);
    b.reverse_arc(w, u);
  }

  std::vector<std::size_t> outd(n), ind(n);
  for (Vertex v = 0; v < n; ++v) {
    outd[v] = b.out(v).count();
    ind[v] = b.in(v).count();
  }
  std::vector<Arc> arcs = b.build().arcs();
  rng.shuffle(std::span<Arc>(arcs));
  for (const Arc& a : arcs) {
    if (rng.uniform01() >= deletion_rate) continue;
    if (outd[a.tail] > min_semidegree && ind[a.head] > min_semidegree) {
      b.remove_arc(a.tail, a.head);
      --outd[a.tail];
      --ind[a.head];
    }
  }
  return b.build();
}

}  // namespace semideg
