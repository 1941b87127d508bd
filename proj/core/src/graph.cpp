#include "semideg/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "semideg/error.hpp"

namespace semideg {

namespace {

std::string arc_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

OrientedGraph OrientedGraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  GraphBuilder b(n);
  for (const Arc& a : arcs) b.add_arc(a.tail, a.head);
  return b.build();
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_total_);
  for (Vertex u = 0; u < order(); ++u) out_[u].for_each([&](Vertex v) { result.push_back({u, v}); });
  return result;
}

GraphBuilder::GraphBuilder(std::size_t n) : out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(const OrientedGraph& g)
    : out_(g.out_), in_(g.in_), arc_total_(g.arc_total_) {}

void GraphBuilder::add_arc(Vertex u, Vertex v) {
  const std::size_t n = order();
  if (u >= n || v >= n)
    throw Error(ErrorCode::kOutOfRange, "arc " + arc_text(u, v) + " with n=" + std::to_string(n));
  if (u == v) throw Error(ErrorCode::kLoop, "arc " + arc_text(u, v));
  if (out_[u].contains(v)) throw Error(ErrorCode::kDuplicateArc, "arc " + arc_text(u, v));
  if (out_[v].contains(u))
    throw Error(ErrorCode::kDigon, "arcs " + arc_text(u, v) + " and " + arc_text(v, u));
  out_[u].insert(v);
  in_[v].insert(u);
  ++arc_total_;
}

bool GraphBuilder::try_add_arc(Vertex u, Vertex v) noexcept {
  const std::size_t n = order();
  if (u >= n || v >= n || u == v || out_[u].contains(v) || out_[v].contains(u)) return false;
  out_[u].insert(v);
  in_[v].insert(u);
  ++arc_total_;
  return true;
}

void GraphBuilder::remove_arc(Vertex u, Vertex v) noexcept {
  if (u >= order() || v >= order() || !out_[u].contains(v)) return;
  out_[u].erase(v);
  in_[v].erase(u);
  --arc_total_;
}

void GraphBuilder::reverse_arc(Vertex u, Vertex v) noexcept {
  if (u >= order() || v >= order() || !out_[u].contains(v)) return;
  out_[u].erase(v);
  in_[v].erase(u);
  out_[v].insert(u);
  in_[u].insert(v);
}

OrientedGraph GraphBuilder::build() const {
  OrientedGraph g;
  g.out_ = out_;
  g.in_ = in_;
  g.arc_total_ = arc_total_;
  return g;
}

DegreeProfile degree_profile(const OrientedGraph& g) {
  DegreeProfile p;
  const std::size_t n = g.order();
  p.out.resize(n);
  p.in.resize(n);
  if (n == 0) return p;
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  p.min_out = p.min_in = p.min_degree = kMax;
  for (Vertex v = 0; v < n; ++v) {
    p.out[v] = g.out_degree(v);
    p.in[v] = g.in_degree(v);
    p.min_out = std::min(p.min_out, p.out[v]);
    p.min_in = std::min(p.min_in, p.in[v]);
    p.min_degree = std::min(p.min_degree, p.out[v] + p.in[v]);
  }
  p.min_semidegree = std::min(p.min_out, p.min_in);
  p.star = p.min_degree + p.min_out + p.min_in;
  return p;
}

std::size_t min_semidegree(const OrientedGraph& g) {
  if (g.order() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::min({best, g.out_degree(v), g.in_degree(v)});
  return best;
}

std::size_t arc_count(const OrientedGraph& g, const VertexSet& from, const VertexSet& to) {
  if (from.universe() != g.order() || to.universe() != g.order())
    throw Error(ErrorCode::kOutOfRange, "vertex set universe does not match graph order");
  std::size_t total = 0;
  from.for_each([&](Vertex u) { total += g.out(u).count_common(to); });
  return total;
}

std::size_t arc_count(const OrientedGraph& g, std::span<const Vertex> from,
                      std::span<const Vertex> to) {
  return arc_count(g, to_set(g, from), to_set(g, to));
}

std::size_t common_out_in(const OrientedGraph& g, Vertex y, Vertex x, const VertexSet& within) {
  if (y >= g.order() || x >= g.order() || within.universe() != g.order())
    throw Error(ErrorCode::kOutOfRange, "common_out_in arguments out of range");
  VertexSet s = g.out(y) & g.in(x);
  return s.count_common(within);
}

void require_vertices(const OrientedGraph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs)
    if (v >= g.order())
      throw Error(ErrorCode::kOutOfRange,
                  "vertex " + std::to_string(v) + " with n=" + std::to_string(g.order()));
}

VertexSet to_set(const OrientedGraph& g, std::span<const Vertex> vs) {
  require_vertices(g, vs);
  return VertexSet::of(g.order(), vs);
}

InducedGraph induce(const OrientedGraph& g, const VertexSet& keep) {
  if (keep.universe() != g.order())
    throw Error(ErrorCode::kOutOfRange, "vertex set universe does not match graph order");
  InducedGraph result;
  result.original = keep.to_vector();
  const std::size_t m = result.original.size();
  std::vector<Vertex> index(g.order(), VertexSet::kNone);
  for (std::size_t i = 0; i < m; ++i) index[result.original[i]] = i;
  GraphBuilder b(m);
  for (std::size_t i = 0; i < m; ++i) {
    (g.out(result.original[i]) & keep).for_each([&](Vertex w) { b.add_arc(i, index[w]); });
  }
  result.graph = b.build();
  return result;
}

InducedGraph remove_vertices(const OrientedGraph& g, const VertexSet& drop) {
  if (drop.universe() != g.order())
    throw Error(ErrorCode::kOutOfRange, "vertex set universe does not match graph order");
  return induce(g, drop.complement());
}

}  // namespace semideg
