#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "semideg/classifiers.hpp"
#include "semideg/error.hpp"

namespace semideg {

std::vector<Arc> max_matching(const OrientedGraph& g, const ArcFilter& filter) {
  using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using UVertex = boost::graph_traits<UGraph>::vertex_descriptor;
  const std::size_t n = g.order();
  UGraph ug(n);
  for (const Arc& a : g.arcs())
    if (filter(a.tail, a.head)) boost::add_edge(a.tail, a.head, ug);

  std::vector<UVertex> mate(n);
  boost::edmonds_maximum_cardinality_matching(ug, mate.data());
  const UVertex none = boost::graph_traits<UGraph>::null_vertex();

  std::vector<Arc> result;
  for (Vertex u = 0; u < n; ++u) {
    const UVertex w = mate[u];
    if (w == none || w < u) continue;
    // Either orientation may be the filtered arc.
    if (g.has_arc(u, w) && filter(u, w))
      result.push_back({u, w});
    else
      result.push_back({w, u});
  }
  std::sort(result.begin(), result.end());
  return result;
}

ArcFilter class_pair_filter(const FourPartition& p, std::vector<std::pair<int, int>> allowed) {
  return [&p, allowed = std::move(allowed)](Vertex tail, Vertex head) {
    const std::pair<int, int> key{p.class_of(tail), p.class_of(head)};
    return std::find(allowed.begin(), allowed.end(), key) != allowed.end();
  };
}

bool is_matching(const OrientedGraph& g, std::span<const Arc> arcs) {
  VertexSet used(g.order());
  for (const Arc& a : arcs) {
    if (a.tail >= g.order() || a.head >= g.order() || !g.has_arc(a.tail, a.head)) return false;
    if (used.contains(a.tail) || used.contains(a.head)) return false;
    used.insert(a.tail);
    used.insert(a.head);
  }
  return true;
}

}  // namespace semideg
