#include "semideg/solvers.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "semideg/classifiers.hpp"
#include "semideg/error.hpp"

namespace semideg {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }
Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

template <typename F>
void for_bits(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

struct Masks {
  std::size_t n = 0;
  std::vector<Mask> out, in;
  Mask all = 0;
};

Masks to_masks(const OrientedGraph& g) {
  if (g.order() > kMaxExactOrder)
    throw Error(ErrorCode::kTooLarge, "exact solvers limited to n <= 64, got " +
                                          std::to_string(g.order()));
  Masks m;
  m.n = g.order();
  m.out.assign(m.n, 0);
  m.in.assign(m.n, 0);
  for (const Arc& a : g.arcs()) {
    m.out[a.tail] |= bit(a.head);
    m.in[a.head] |= bit(a.tail);
  }
  m.all = m.n == 64 ? ~Mask{0} : (Mask{1} << m.n) - 1;
  return m;
}

void require_vertex(const OrientedGraph& g, Vertex v) {
  if (v >= g.order())
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " with n=" +
                                            std::to_string(g.order()));
}

Outcome finish(bool found, const BudgetGuard& guard) {
  if (found) return Outcome::kTrue;
  return guard.exhausted() ? Outcome::kBudget : Outcome::kFalse;
}

// Hamiltonian path/cycle search over a vertex subset `cover`.
//   cycle mode: starts at seq[0], visits seq in order, last vertex -> seq[0]
//   path mode:  starts at `from`, ends at `to`
class HamSearch {
 public:
  HamSearch(const Masks& m, BudgetGuard& guard) : m_(m), guard_(guard) {}

  bool cycle(Mask cover, std::span<const Vertex> seq, std::vector<Vertex>& out) {
    cycle_mode_ = true;
    start_ = seq[0];
    seq_.assign(seq.begin(), seq.end());
    seq_mask_ = 0;
    for (Vertex v : seq) seq_mask_ |= bit(v);
    return begin(cover, out);
  }

  bool path(Mask cover, Vertex from, Vertex to, std::vector<Vertex>& out) {
    cycle_mode_ = false;
    start_ = from;
    end_ = to;
    seq_ = {from};
    seq_mask_ = bit(from);
    return begin(cover, out);
  }

 private:
  bool begin(Mask cover, std::vector<Vertex>& out) {
    path_.clear();
    path_.push_back(start_);
    next_seq_ = 1;
    if (!dfs(start_, cover & ~bit(start_))) return false;
    out = path_;
    return true;
  }

  bool dfs(Vertex cur, Mask unvisited) {
    if (!guard_.tick()) return false;
    if (unvisited == 0) {
      if (cycle_mode_) return (m_.out[cur] & bit(start_)) != 0 && path_.size() >= 3;
      return cur == end_;
    }
    const Mask end_bit = cycle_mode_ ? 0 : bit(end_);
    const Mask preds_pool = (unvisited & ~end_bit) | bit(cur);
    const Mask succ_pool = cycle_mode_ ? (unvisited | bit(start_)) : unvisited;
    Mask forced = 0;
    for (Mask rest = unvisited; rest != 0; rest &= rest - 1) {
      const Vertex w = lowest(rest);
      const Mask preds = m_.in[w] & preds_pool;
      if (preds == 0) return false;
      if (preds == bit(cur)) {
        if (forced != 0) return false;
        forced = bit(w);
      }
      if (w != end_ || cycle_mode_) {
        if ((m_.out[w] & succ_pool) == 0) return false;
      }
    }
    // Every unvisited vertex must be reachable from cur without passing the
    // path end.
    Mask reached = 0;
    Mask frontier = m_.out[cur] & unvisited;
    while (frontier != 0) {
      reached |= frontier;
      Mask next = 0;
      for_bits(frontier & ~end_bit, [&](Vertex v) { next |= m_.out[v]; });
      frontier = next & unvisited & ~reached;
    }
    if (reached != unvisited) return false;
    if (cycle_mode_ && (m_.in[start_] & unvisited) == 0) return false;

    Mask cand = m_.out[cur] & unvisited;
    if (!cycle_mode_ && unvisited != end_bit) cand &= ~end_bit;
    if (next_seq_ < seq_.size())
      cand &= ~seq_mask_ | bit(seq_[next_seq_]);
    if (forced != 0) cand &= forced;
    for (; cand != 0; cand &= cand - 1) {
      const Vertex w = lowest(cand);
      const bool advances = next_seq_ < seq_.size() && seq_[next_seq_] == w;
      if (advances) ++next_seq_;
      path_.push_back(w);
      if (dfs(w, unvisited & ~bit(w))) return true;
      path_.pop_back();
      if (advances) --next_seq_;
      if (guard_.exhausted()) return false;
    }
    return false;
  }

  const Masks& m_;
  BudgetGuard& guard_;
  bool cycle_mode_ = true;
  Vertex start_ = 0;
  Vertex end_ = 0;
  std::vector<Vertex> seq_;
  Mask seq_mask_ = 0;
  std::size_t next_seq_ = 1;
  std::vector<Vertex> path_;
};

// Shortest distance from every vertex of `within` to `target`, walking only
// through `within`; entries outside stay kInfiniteDistance.
void distances_to(const Masks& m, Vertex target, Mask within, std::vector<std::size_t>& dist) {
  std::fill(dist.begin(), dist.end(), kInfiniteDistance);
  dist[target] = 0;
  Mask seen = bit(target);
  Mask frontier = bit(target);
  std::size_t d = 0;
  while (frontier != 0) {
    ++d;
    Mask next = 0;
    for_bits(frontier, [&](Vertex v) { next |= m.in[v]; });
    next &= within & ~seen;
    for_bits(next, [&](Vertex v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
}

// Enumerates cycles of a fixed length through `anchor` inside `allowed`.
// `on_cycle` returns true to stop the enumeration.
class CycleEnumerator {
 public:
  CycleEnumerator(const Masks& m, BudgetGuard& guard) : m_(m), guard_(guard), dist_(m.n) {}

  template <typename F>
  bool run(Vertex anchor, std::size_t length, Mask allowed, F&& on_cycle) {
    anchor_ = anchor;
    length_ = length;
    allowed_ = allowed;
    path_.assign(1, anchor);
    std::function<bool(const std::vector<Vertex>&)> cb = std::forward<F>(on_cycle);
    return dfs(anchor, allowed & ~bit(anchor), cb);
  }

 private:
  bool dfs(Vertex cur, Mask free, const std::function<bool(const std::vector<Vertex>&)>& cb) {
    if (!guard_.tick()) return false;
    if (path_.size() == length_) {
      if ((m_.out[cur] & bit(anchor_)) != 0) return cb(path_);
      return false;
    }
    const std::size_t steps_left = length_ - path_.size();  // arcs still to place, minus the close
    distances_to(m_, anchor_, free | bit(anchor_), dist_);
    for (Mask cand = m_.out[cur] & free; cand != 0; cand &= cand - 1) {
      const Vertex w = lowest(cand);
      if (dist_[w] == kInfiniteDistance || dist_[w] > steps_left) continue;
      path_.push_back(w);
      const bool stop = dfs(w, free & ~bit(w), cb);
      path_.pop_back();
      if (stop || guard_.exhausted()) return stop;
      // dist_ was overwritten by the recursion.
      distances_to(m_, anchor_, free | bit(anchor_), dist_);
    }
    return false;
  }

  const Masks& m_;
  BudgetGuard& guard_;
  std::vector<std::size_t> dist_;
  Vertex anchor_ = 0;
  std::size_t length_ = 0;
  Mask allowed_ = 0;
  std::vector<Vertex> path_;
};

// Each vertex of `rest` keeps an in- and an out-neighbour inside `rest`.
bool closed_under_cycles(const Masks& m, Mask rest) {
  for (Mask r = rest; r != 0; r &= r - 1) {
    const Vertex v = lowest(r);
    if ((m.out[v] & rest) == 0 || (m.in[v] & rest) == 0) return false;
  }
  return true;
}

class FactorSearch {
 public:
  FactorSearch(const Masks& m, BudgetGuard& guard) : m_(m), guard_(guard) {}

  bool run(std::map<std::size_t, std::size_t> counts, std::vector<std::vector<Vertex>>& out) {
    counts_ = std::move(counts);
    cycles_.clear();
    if (!solve(m_.all)) return false;
    out = cycles_;
    return true;
  }

 private:
  bool solve(Mask rest) {
    if (rest == 0) return true;
    if (!guard_.tick()) return false;
    if (!closed_under_cycles(m_, rest)) return false;
    const Vertex v = lowest(rest);
    std::size_t remaining_cycles = 0;
    for (const auto& [len, c] : counts_) remaining_cycles += c;
    if (remaining_cycles == 1) {
      std::vector<Vertex> cyc;
      const Vertex start[] = {v};
      HamSearch hs(m_, guard_);
      if (!hs.cycle(rest, start, cyc)) return false;
      cycles_.push_back(std::move(cyc));
      return true;
    }
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
      if (it->second == 0) continue;
      const std::size_t len = it->first;
      --it->second;
      CycleEnumerator en(m_, guard_);
      const bool found = en.run(v, len, rest, [&](const std::vector<Vertex>& cyc) {
        Mask used = 0;
        for (Vertex w : cyc) used |= bit(w);
        cycles_.push_back(cyc);
        if (solve(rest & ~used)) return true;
        cycles_.pop_back();
        return guard_.exhausted();
      });
      ++it->second;
      if (found) return !guard_.exhausted();
      if (guard_.exhausted()) return false;
    }
    return false;
  }

  const Masks& m_;
  BudgetGuard& guard_;
  std::map<std::size_t, std::size_t> counts_;
  std::vector<std::vector<Vertex>> cycles_;
};

SolveResult solve_cycle_factor(const Masks& m, const LengthPartition& lp, BudgetGuard& guard) {
  SolveResult r;
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t l : lp.lengths) ++counts[l];
  std::vector<std::vector<Vertex>> cycles;
  FactorSearch fs(m, guard);
  const bool found = fs.run(counts, cycles) && !guard.exhausted();
  r.outcome = finish(found, guard);
  if (found) r.certificate = Certificate{CertificateKind::kCycleSet, std::move(cycles)};
  r.nodes = guard.nodes();
  return r;
}

class LinkageSearch {
 public:
  LinkageSearch(const Masks& m, BudgetGuard& guard, std::span<const TerminalPair> pairs,
                bool spanning)
      : m_(m), guard_(guard), pairs_(pairs.begin(), pairs.end()), spanning_(spanning) {
    for (const auto& [x, y] : pairs_) terminals_ |= bit(x) | bit(y);
  }

  bool run(std::vector<std::vector<Vertex>>& out) {
    paths_.clear();
    if (!solve(0, 0)) return false;
    out = paths_;
    return true;
  }

 private:
  Mask reach_from(Vertex x, Mask within) const {
    Mask reached = bit(x);
    Mask frontier = bit(x);
    while (frontier != 0) {
      Mask next = 0;
      for_bits(frontier, [&](Vertex v) { next |= m_.out[v]; });
      frontier = next & within & ~reached;
      reached |= frontier;
    }
    return reached;
  }

  // Remaining pairs from index i are each still connected.
  bool pairs_reachable(std::size_t i, Mask used) const {
    for (std::size_t j = i; j < pairs_.size(); ++j) {
      const auto [x, y] = pairs_[j];
      const Mask within = m_.all & ~used & ~(terminals_ & ~(bit(x) | bit(y)));
      if ((reach_from(x, within & ~bit(y)) & m_.in[y]) == 0) return false;
    }
    return true;
  }

  bool solve(std::size_t i, Mask used) {
    if (i == pairs_.size()) return !spanning_ || used == m_.all;
    if (!guard_.tick()) return false;
    if (!pairs_reachable(i, used)) return false;
    const auto [x, y] = pairs_[i];
    if (spanning_ && i + 1 == pairs_.size()) {
      std::vector<Vertex> p;
      HamSearch hs(m_, guard_);
      if (!hs.path(m_.all & ~used, x, y, p)) return false;
      paths_.push_back(std::move(p));
      return true;
    }
    path_.assign(1, x);
    const Mask avoid = used | (terminals_ & ~(bit(x) | bit(y)));
    return extend(i, x, y, used, avoid, bit(x));
  }

  bool extend(std::size_t i, Vertex cur, Vertex y, Mask used, Mask avoid, Mask on_path) {
    if (!guard_.tick()) return false;
    if (cur == y) {
      const std::vector<Vertex> saved = path_;
      paths_.push_back(path_);
      if (solve(i + 1, used | on_path)) return true;
      paths_.pop_back();
      path_ = saved;
      return false;
    }
    Mask cand = m_.out[cur] & ~avoid & ~on_path;
    // Outside spanning mode a path with a forward chord can always be
    // shortcut, so only chordless paths are explored.
    if (!spanning_ && (cand & bit(y)) != 0) cand = bit(y);
    for (; cand != 0; cand &= cand - 1) {
      const Vertex w = lowest(cand);
      if (!spanning_ && (m_.in[w] & on_path) != bit(cur)) continue;
      if (w != y && !spanning_) {
        // y must stay reachable from w.
        const Mask within = m_.all & ~avoid & ~on_path;
        if ((reach_from(w, within & ~bit(y)) & m_.in[y]) == 0) continue;
      }
      path_.push_back(w);
      if (extend(i, w, y, used, avoid, on_path | bit(w))) return true;
      path_.pop_back();
      if (guard_.exhausted()) return false;
    }
    return false;
  }

  const Masks& m_;
  BudgetGuard& guard_;
  std::vector<TerminalPair> pairs_;
  bool spanning_;
  Mask terminals_ = 0;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> paths_;
};

void check_terminals(const OrientedGraph& g, std::span<const TerminalPair> pairs) {
  std::vector<bool> seen(g.order(), false);
  for (const auto& [x, y] : pairs) {
    for (Vertex v : {x, y}) {
      require_vertex(g, v);
      if (seen[v]) throw Error(ErrorCode::kTerminalClash, "terminal " + std::to_string(v) +
                                                              " used twice");
      seen[v] = true;
    }
  }
}

SolveResult solve_linkage(const Masks& m, std::span<const TerminalPair> pairs, bool spanning,
                          BudgetGuard& guard) {
  SolveResult r;
  std::vector<std::vector<Vertex>> paths;
  LinkageSearch ls(m, guard, pairs, spanning);
  const bool found = ls.run(paths) && !guard.exhausted();
  r.outcome = finish(found, guard);
  if (found) r.certificate = Certificate{CertificateKind::kPathSet, std::move(paths)};
  r.nodes = guard.nodes();
  return r;
}

std::optional<std::vector<Vertex>> bfs_path(const OrientedGraph& g, Vertex from, Vertex to,
                                            const VertexSet& blocked) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n, VertexSet::kNone);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    g.out(v).for_each([&](Vertex w) {
      if (parent[w] == VertexSet::kNone && (w == to || !blocked.contains(w))) {
        parent[w] = v;
        queue.push_back(w);
      }
    });
  }
  if (parent[to] == VertexSet::kNone) return std::nullopt;
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::kTrue: return "true";
    case Outcome::kFalse: return "false";
    case Outcome::kBudget: return "budget";
  }
  return "?";
}

SolveResult hamiltonian_cycle(const OrientedGraph& g, const Budget& budget) {
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  SolveResult r;
  std::vector<Vertex> cyc;
  bool found = false;
  if (m.n >= 3) {
    const Vertex start[] = {0};
    HamSearch hs(m, guard);
    found = hs.cycle(m.all, start, cyc);
  }
  r.outcome = finish(found, guard);
  if (found) r.certificate = Certificate{CertificateKind::kCycle, {std::move(cyc)}};
  r.nodes = guard.nodes();
  return r;
}

SolveResult hamiltonian_path(const OrientedGraph& g, Vertex from, Vertex to, const Budget& budget) {
  require_vertex(g, from);
  require_vertex(g, to);
  if (from == to) throw Error(ErrorCode::kSameVertex, "path endpoints must differ");
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  SolveResult r;
  std::vector<Vertex> p;
  HamSearch hs(m, guard);
  const bool found = hs.path(m.all, from, to, p);
  r.outcome = finish(found, guard);
  if (found) r.certificate = Certificate{CertificateKind::kPath, {std::move(p)}};
  r.nodes = guard.nodes();
  return r;
}

ConnectivityResult strongly_hamiltonian_connected(const OrientedGraph& g, const Budget& budget) {
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  ConnectivityResult r;
  r.outcome = Outcome::kTrue;
  for (Vertex x = 0; x < m.n; ++x)
    for (Vertex y = 0; y < m.n; ++y) {
      if (x == y) continue;
      std::vector<Vertex> p;
      HamSearch hs(m, guard);
      const bool found = hs.path(m.all, x, y, p);
      if (guard.exhausted()) {
        r.outcome = Outcome::kBudget;
        return r;
      }
      ++r.pairs_checked;
      if (!found) {
        r.outcome = Outcome::kFalse;
        r.failing_pair = std::make_pair(x, y);
        return r;
      }
    }
  return r;
}

LengthPartition LengthPartition::make(std::vector<std::size_t> lengths, std::size_t n) {
  if (lengths.empty()) throw Error(ErrorCode::kBadPartition, "no cycle lengths given");
  for (std::size_t l : lengths)
    if (l < 3) throw Error(ErrorCode::kBadPartition, "cycle length " + std::to_string(l) + " < 3");
  const std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (total != n)
    throw Error(ErrorCode::kBadPartition, "lengths sum to " + std::to_string(total) +
                                              ", graph has " + std::to_string(n) + " vertices");
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return {std::move(lengths)};
}

SolveResult cycle_factor(const OrientedGraph& g, const LengthPartition& lengths,
                         const Budget& budget) {
  const LengthPartition lp = LengthPartition::make(lengths.lengths, g.order());
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  return solve_cycle_factor(m, lp, guard);
}

SolveResult cycle_of_length(const OrientedGraph& g, std::size_t length, const Budget& budget) {
  if (length < 3 || length > g.order())
    throw Error(ErrorCode::kBadParameter, "cycle length must lie in [3, n]");
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  SolveResult r;
  std::vector<Vertex> found_cycle;
  bool found = false;
  if (length == m.n) {
    const Vertex start[] = {0};
    HamSearch hs(m, guard);
    found = hs.cycle(m.all, start, found_cycle);
  } else {
    for (Vertex v = 0; v + length <= m.n && !found && !guard.exhausted(); ++v) {
      const Mask allowed = m.all & ~(bit(v) - 1);
      CycleEnumerator en(m, guard);
      found = en.run(v, length, allowed, [&](const std::vector<Vertex>& cyc) {
        found_cycle = cyc;
        return true;
      });
    }
  }
  found = found && !found_cycle.empty();
  r.outcome = finish(found, guard);
  if (found) r.certificate = Certificate{CertificateKind::kCycle, {std::move(found_cycle)}};
  r.nodes = guard.nodes();
  return r;
}

bool PancyclicResult::all_true() const {
  return std::all_of(per_length.begin(), per_length.end(),
                     [](const auto& e) { return e.second.outcome == Outcome::kTrue; });
}

PancyclicResult pancyclic_range(const OrientedGraph& g, std::size_t l_min, std::size_t l_max,
                                const Budget& budget) {
  if (l_min < 3 || l_min > l_max || l_max > g.order())
    throw Error(ErrorCode::kBadParameter, "need 3 <= l_min <= l_max <= n");
  PancyclicResult r;
  for (std::size_t l = l_min; l <= l_max; ++l) r.per_length.emplace_back(l, cycle_of_length(g, l, budget));
  return r;
}

SolveResult k_ordered_hamiltonian(const OrientedGraph& g, std::span<const Vertex> seq,
                                  const Budget& budget) {
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : seq) {
    require_vertex(g, v);
    if (seen[v]) throw Error(ErrorCode::kDuplicateVertices, "vertex " + std::to_string(v) +
                                                                " repeated in sequence");
    seen[v] = true;
  }
  if (seq.empty()) return hamiltonian_cycle(g, budget);
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  SolveResult r;
  std::vector<Vertex> cyc;
  bool found = false;
  if (m.n >= 3) {
    HamSearch hs(m, guard);
    found = hs.cycle(m.all, seq, cyc);
  }
  r.outcome = finish(found, guard);
  if (found) r.certificate = Certificate{CertificateKind::kCycle, {std::move(cyc)}};
  r.nodes = guard.nodes();
  return r;
}

SolveResult k_linkage(const OrientedGraph& g, std::span<const TerminalPair> pairs, bool spanning,
                      const Budget& budget) {
  check_terminals(g, pairs);
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  if (pairs.empty()) {
    SolveResult r;
    r.outcome = spanning && m.n > 0 ? Outcome::kFalse : Outcome::kTrue;
    if (r.outcome == Outcome::kTrue) r.certificate = Certificate{CertificateKind::kPathSet, {}};
    return r;
  }
  return solve_linkage(m, pairs, spanning, guard);
}

LinkednessResult is_k_linked(const OrientedGraph& g, std::size_t k, bool spanning,
                             const Budget& budget) {
  const Masks m = to_masks(g);
  BudgetGuard guard(budget);
  LinkednessResult r;
  r.outcome = Outcome::kTrue;
  if (k == 0 || m.n < 2 * k) return r;
  std::vector<TerminalPair> pairs(k);
  Mask used = 0;
  // Returns false to stop.
  std::function<bool(std::size_t)> choose = [&](std::size_t i) -> bool {
    if (i == k) {
      const SolveResult s = solve_linkage(m, pairs, spanning, guard);
      ++r.systems_checked;
      if (s.outcome == Outcome::kBudget) {
        r.outcome = Outcome::kBudget;
        return false;
      }
      if (s.outcome == Outcome::kFalse) {
        r.outcome = Outcome::kFalse;
        r.failing_pairs = pairs;
        return false;
      }
      return true;
    }
    const Vertex min_x = i == 0 ? 0 : pairs[i - 1].first + 1;
    for (Vertex x = min_x; x < m.n; ++x) {
      if ((used & bit(x)) != 0) continue;
      for (Vertex y = 0; y < m.n; ++y) {
        if (y == x || (used & bit(y)) != 0) continue;
        pairs[i] = {x, y};
        used |= bit(x) | bit(y);
        const bool go_on = choose(i + 1);
        used &= ~(bit(x) | bit(y));
        if (!go_on) return false;
      }
    }
    return true;
  };
  choose(0);
  return r;
}

std::vector<std::size_t> distances_from(const OrientedGraph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<std::size_t> dist(g.order(), kInfiniteDistance);
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    g.out(v).for_each([&](Vertex w) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

std::size_t diameter(const OrientedGraph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::size_t d : distances_from(g, v)) {
      if (d == kInfiniteDistance) return kInfiniteDistance;
      best = std::max(best, d);
    }
  }
  return best;
}

std::size_t LinkerResult::total_length() const {
  std::size_t total = 0;
  for (const auto& leg : legs) total += leg.empty() ? 0 : leg.size() - 1;
  return total;
}

LinkerResult greedy_ordered_linker(const OrientedGraph& g, std::span<const Vertex> seq,
                                   std::size_t max_leg) {
  std::vector<TerminalPair> as_pairs;
  VertexSet seen(g.order());
  for (Vertex v : seq) {
    require_vertex(g, v);
    if (seen.contains(v)) throw Error(ErrorCode::kTerminalClash, "vertex " + std::to_string(v) +
                                                                     " repeated in sequence");
    seen.insert(v);
  }
  LinkerResult r;
  VertexSet used(g.order());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    VertexSet blocked = used | seen;
    blocked.erase(seq[i]);
    const auto leg = bfs_path(g, seq[i], seq[i + 1], blocked);
    if (!leg || leg->size() - 1 > max_leg) {
      r.failed_leg = i;
      return r;
    }
    for (Vertex v : *leg) used.insert(v);
    r.legs.push_back(*leg);
  }
  r.success = true;
  return r;
}

LinkerResult greedy_pair_linker(const OrientedGraph& g, std::span<const TerminalPair> pairs,
                                std::size_t max_leg) {
  check_terminals(g, pairs);
  VertexSet terminals(g.order());
  for (const auto& [x, y] : pairs) {
    terminals.insert(x);
    terminals.insert(y);
  }
  LinkerResult r;
  VertexSet used(g.order());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, y] = pairs[i];
    VertexSet blocked = used | terminals;
    blocked.erase(x);
    const auto leg = bfs_path(g, x, y, blocked);
    if (!leg || leg->size() - 1 > max_leg) {
      r.failed_leg = i;
      return r;
    }
    for (Vertex v : *leg) used.insert(v);
    r.legs.push_back(*leg);
  }
  r.success = true;
  return r;
}

std::vector<Vertex> dense_4partite_hamiltonian(const OrientedGraph& g, const FourPartition& p,
                                               double eta) {
  if (!(eta >= 0.0 && eta < 0.125))
    throw Error(ErrorCode::kBadParameter, "eta must lie in [0, 1/8)");
  if (p.order() != g.order())
    throw Error(ErrorCode::kBadPartition, "partition order differs from graph order");
  const std::size_t m = p.size(0);
  for (int i = 1; i < 4; ++i)
    if (p.size(i) != m)
      throw Error(ErrorCode::kUnbalanced, "class sizes " + std::to_string(p.size(0)) + "," +
                                              std::to_string(p.size(1)) + "," +
                                              std::to_string(p.size(2)) + "," +
                                              std::to_string(p.size(3)));
  if (m == 0) throw Error(ErrorCode::kEmptyClass, "classes are empty");
  const double floor = (1.0 - eta) * static_cast<double>(m) - 1e-9;
  for (int i = 0; i < 4; ++i)
    for (Vertex v : p.members(i)) {
      const auto out = g.out(v).count_common(p.set(next_class(i)));
      const auto in = g.in(v).count_common(p.set(prev_class(i)));
      if (static_cast<double>(out) < floor || static_cast<double>(in) < floor)
        throw Error(ErrorCode::kDegreeFloorViolated,
                    "vertex " + std::to_string(v) + " of D" + std::to_string(i + 1) + " has " +
                        std::to_string(out) + " out / " + std::to_string(in) +
                        " in neighbours across, floor " + std::to_string(floor));
    }

  const std::size_t n = g.order();
  std::vector<Vertex> succ(n, VertexSet::kNone);
  for (int i = 0; i < 4; ++i) {
    const auto matching = max_matching(g, class_pair_filter(p, {{i, next_class(i)}}));
    if (matching.size() != m)
      throw Error(ErrorCode::kMergeFailed, "no perfect matching from D" + std::to_string(i + 1));
    for (const Arc& a : matching) succ[a.tail] = a.head;
  }

  std::vector<std::size_t> cycle_id(n);
  auto label_cycles = [&] {
    std::fill(cycle_id.begin(), cycle_id.end(), VertexSet::kNone);
    std::size_t count = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (cycle_id[s] != VertexSet::kNone) continue;
      for (Vertex v = s; cycle_id[v] == VertexSet::kNone; v = succ[v]) cycle_id[v] = count;
      ++count;
    }
    return count;
  };

  // Each successful round merges two cycles; a round without any valid
  // swap reports the stuck configuration.
  for (std::size_t cycles = label_cycles(); cycles > 1; cycles = label_cycles()) {
    bool merged = false;
    for (int i = 0; i < 4 && !merged; ++i) {
      const auto& cls = p.members(i);
      for (std::size_t x = 0; x < cls.size() && !merged; ++x)
        for (std::size_t y = x + 1; y < cls.size() && !merged; ++y) {
          const Vertex a = cls[x];
          const Vertex b = cls[y];
          if (cycle_id[a] == cycle_id[b]) continue;
          if (g.has_arc(a, succ[b]) && g.has_arc(b, succ[a])) {
            std::swap(succ[a], succ[b]);
            merged = true;
          }
        }
    }
    if (!merged)
      throw Error(ErrorCode::kMergeFailed,
                  "no partner swap joins any two of " + std::to_string(cycles) + " cycles");
  }
  std::vector<Vertex> cycle;
  cycle.reserve(n);
  Vertex v = 0;
  do {
    cycle.push_back(v);
    v = succ[v];
  } while (v != 0);
  return cycle;
}

}  // namespace semideg
