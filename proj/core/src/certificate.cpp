#include "semideg/certificate.hpp"

#include <algorithm>

namespace semideg {

namespace {

Validation fail(std::string reason) { return {false, std::move(reason)}; }

std::string arc_text(Vertex u, Vertex v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

// Marks seq in `seen`; fails on out-of-range or repeated vertices.
Validation mark(const OrientedGraph& g, std::span<const Vertex> seq, std::vector<bool>& seen) {
  for (Vertex v : seq) {
    if (v >= g.order()) return fail("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) return fail("vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  return {};
}

Validation arcs_along(const OrientedGraph& g, std::span<const Vertex> seq, bool closed) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.has_arc(seq[i], seq[i + 1])) return fail("missing arc " + arc_text(seq[i], seq[i + 1]));
  if (closed && !seq.empty() && !g.has_arc(seq.back(), seq.front()))
    return fail("missing arc " + arc_text(seq.back(), seq.front()));
  return {};
}

Validation covers(const std::vector<bool>& seen) {
  const auto it = std::find(seen.begin(), seen.end(), false);
  if (it != seen.end())
    return fail("vertex " + std::to_string(it - seen.begin()) + " not covered");
  return {};
}

}  // namespace

const char* to_string(CertificateKind k) noexcept {
  switch (k) {
    case CertificateKind::kCycle: return "cycle";
    case CertificateKind::kPath: return "path";
    case CertificateKind::kCycleSet: return "cycle-set";
    case CertificateKind::kPathSet: return "path-set";
  }
  return "?";
}

Validation validate_cycle(const OrientedGraph& g, std::span<const Vertex> seq, bool spanning) {
  if (seq.size() < 3) return fail("cycle shorter than 3");
  std::vector<bool> seen(g.order(), false);
  if (auto r = mark(g, seq, seen); !r) return r;
  if (auto r = arcs_along(g, seq, true); !r) return r;
  if (spanning) return covers(seen);
  return {};
}

Validation validate_path(const OrientedGraph& g, std::span<const Vertex> seq, Vertex from, Vertex to,
                         bool spanning) {
  if (seq.empty()) return fail("empty path");
  if (seq.front() != from || seq.back() != to) return fail("path has wrong endpoints");
  std::vector<bool> seen(g.order(), false);
  if (auto r = mark(g, seq, seen); !r) return r;
  if (auto r = arcs_along(g, seq, false); !r) return r;
  if (spanning) return covers(seen);
  return {};
}

Validation validate_cycle_factor(const OrientedGraph& g,
                                 const std::vector<std::vector<Vertex>>& cycles,
                                 std::span<const std::size_t> lengths) {
  std::vector<std::size_t> want(lengths.begin(), lengths.end());
  std::vector<std::size_t> got;
  std::vector<bool> seen(g.order(), false);
  for (const auto& c : cycles) {
    if (c.size() < 3) return fail("cycle shorter than 3");
    if (auto r = mark(g, c, seen); !r) return r;
    if (auto r = arcs_along(g, c, true); !r) return r;
    got.push_back(c.size());
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) return fail("cycle lengths do not match the requested partition");
  return covers(seen);
}

Validation validate_linkage(const OrientedGraph& g, const std::vector<std::vector<Vertex>>& paths,
                            std::span<const std::pair<Vertex, Vertex>> pairs, bool spanning) {
  if (paths.size() != pairs.size()) return fail("path count differs from pair count");
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    if (p.size() < 2) return fail("path " + std::to_string(i) + " has no arc");
    if (p.front() != pairs[i].first || p.back() != pairs[i].second)
      return fail("path " + std::to_string(i) + " has wrong endpoints");
    if (auto r = mark(g, p, seen); !r) return r;
    if (auto r = arcs_along(g, p, false); !r) return r;
  }
  if (spanning) return covers(seen);
  return {};
}

Validation validate_ordered_cycle(const OrientedGraph& g, std::span<const Vertex> cycle,
                                  std::span<const Vertex> seq) {
  if (auto r = validate_cycle(g, cycle, true); !r) return r;
  std::vector<std::size_t> pos(g.order(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = i;
  if (seq.empty()) return {};
  const std::size_t n = cycle.size();
  const std::size_t origin = pos[seq[0]];
  std::size_t last = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const std::size_t offset = (pos[seq[i]] + n - origin) % n;
    if (offset <= last) return fail("sequence not met in cyclic order");
    last = offset;
  }
  return {};
}

}  // namespace semideg
