#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "semideg/vertex_set.hpp"

namespace semideg {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class GraphBuilder;

// An orientation of a simple graph on vertices 0..n-1: no loops, and at most
// one of (u,v), (v,u) present. Values are immutable once built; every
// constructor path goes through the validation in GraphBuilder.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  // Throws Error{kLoop | kDigon | kOutOfRange | kDuplicateArc}.
  static OrientedGraph from_arcs(std::size_t n, std::span<const Arc> arcs);

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_total() const noexcept { return arc_total_; }

  bool has_arc(Vertex u, Vertex v) const noexcept { return out_[u].contains(v); }
  // True when u and v are joined in either direction.
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return out_[u].contains(v) || in_[u].contains(v);
  }

  const VertexSet& out(Vertex v) const noexcept { return out_[v]; }
  const VertexSet& in(Vertex v) const noexcept { return in_[v]; }
  std::size_t out_degree(Vertex v) const noexcept { return out_[v].count(); }
  std::size_t in_degree(Vertex v) const noexcept { return in_[v].count(); }

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  // Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.out_ == b.out_;
  }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t arc_total_ = 0;
};

// Mutable staging area for OrientedGraph. add_arc validates eagerly so a
// finished builder always yields a valid oriented graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const OrientedGraph& g);

  std::size_t order() const noexcept { return out_.size(); }

  // Throws on loop, digon, out-of-range endpoint or duplicate.
  void add_arc(Vertex u, Vertex v);
  // Returns false instead of throwing when the arc cannot be added.
  bool try_add_arc(Vertex u, Vertex v) noexcept;
  void remove_arc(Vertex u, Vertex v) noexcept;
  // Replaces u->v by v->u (no-op unless u->v is present).
  void reverse_arc(Vertex u, Vertex v) noexcept;

  bool has_arc(Vertex u, Vertex v) const noexcept { return out_[u].contains(v); }
  const VertexSet& out(Vertex v) const noexcept { return out_[v]; }
  const VertexSet& in(Vertex v) const noexcept { return in_[v]; }

  OrientedGraph build() const;

 private:
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t arc_total_ = 0;
};

struct DegreeProfile {
  std::vector<std::size_t> out;
  std::vector<std::size_t> in;
  std::size_t min_out = 0;         // δ⁺
  std::size_t min_in = 0;          // δ⁻
  std::size_t min_semidegree = 0;  // δ⁰ = min(δ⁺, δ⁻)
  std::size_t min_degree = 0;      // δ  = min_v d⁺(v) + d⁻(v)
  std::size_t star = 0;            // δ* = δ + δ⁺ + δ⁻
};

DegreeProfile degree_profile(const OrientedGraph& g);
std::size_t min_semidegree(const OrientedGraph& g);

// a(X, Y): arcs with tail in X and head in Y. With X == Y this is a(X).
std::size_t arc_count(const OrientedGraph& g, const VertexSet& from, const VertexSet& to);
std::size_t arc_count(const OrientedGraph& g, std::span<const Vertex> from,
                      std::span<const Vertex> to);

// |N⁺(y) ∩ N⁻(x) ∩ within|.
std::size_t common_out_in(const OrientedGraph& g, Vertex y, Vertex x, const VertexSet& within);

// D[X] relabelled 0..|X|-1 in ascending order of the original index.
// original[i] is the vertex of the parent graph that became i.
struct InducedGraph {
  OrientedGraph graph;
  std::vector<Vertex> original;
};

InducedGraph induce(const OrientedGraph& g, const VertexSet& keep);
InducedGraph remove_vertices(const OrientedGraph& g, const VertexSet& drop);

// Bounds check shared by the set-taking entry points.
void require_vertices(const OrientedGraph& g, std::span<const Vertex> vs);
VertexSet to_set(const OrientedGraph& g, std::span<const Vertex> vs);

}  // namespace semideg
