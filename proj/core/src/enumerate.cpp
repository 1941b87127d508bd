#include "semideg/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <unordered_map>

#include "semideg/error.hpp"

namespace semideg {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Pair state as seen from the canonical side: 0 none, 1 a->b, 2 b->a.
std::uint8_t pair_state(const OrientedGraph& g, Vertex a, Vertex b) {
  if (g.has_arc(a, b)) return 1;
  if (g.has_arc(b, a)) return 2;
  return 0;
}

class Canonicaliser {
 public:
  explicit Canonicaliser(const OrientedGraph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back();
      for (Vertex v = 0; v < n_; ++v) cells.back().push_back(v);
    }
    search(std::move(cells));
    CanonicalForm form;
    form.code.order = static_cast<std::uint8_t>(n_);
    const std::size_t digits = best_digits_.size();
    for (std::size_t i = 0; i < digits; ++i) {
      const std::size_t shift = 2 * (digits - 1 - i);
      const std::uint64_t d = best_digits_[i];
      if (shift >= 64)
        form.code.bits[0] |= d << (shift - 64);
      else
        form.code.bits[1] |= d << shift;
    }
    form.labelling.assign(n_, 0);
    for (std::size_t pos = 0; pos < n_; ++pos) form.labelling[best_order_[pos]] = pos;
    return form;
  }

 private:
  void refine(Cells& cells) const {
    std::vector<std::size_t> colour(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) colour[v] = c;
      const std::size_t k = cells.size();
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::size_t> sig(2 * k, 0);
          g_.out(v).for_each([&](Vertex w) { ++sig[colour[w]]; });
          g_.in(v).for_each([&](Vertex w) { ++sig[k + colour[w]]; });
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  // Digits of the code restricted to the first `prefix` positions.
  void digits_for(const Cells& cells, std::size_t prefix, std::vector<std::uint8_t>& out) const {
    out.clear();
    for (std::size_t p = 1; p < prefix; ++p)
      for (std::size_t q = 0; q < p; ++q) out.push_back(pair_state(g_, cells[q][0], cells[p][0]));
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t singletons = 0;
    while (singletons < cells.size() && cells[singletons].size() == 1) ++singletons;

    std::vector<std::uint8_t> partial;
    digits_for(cells, singletons, partial);
    if (have_best_) {
      const auto cmp = std::lexicographical_compare_three_way(
          partial.begin(), partial.end(), best_digits_.begin(),
          best_digits_.begin() + static_cast<std::ptrdiff_t>(partial.size()));
      if (cmp > 0) return;
    }
    if (singletons == cells.size()) {
      if (!have_best_ || partial < best_digits_) {
        have_best_ = true;
        best_digits_ = partial;
        best_order_.clear();
        for (const auto& c : cells) best_order_.push_back(c[0]);
      }
      return;
    }
    const std::size_t target = singletons;
    for (Vertex v : cells[target]) {
      Cells branch;
      branch.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          branch.push_back(cells[i]);
          continue;
        }
        branch.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[i])
          if (w != v) rest.push_back(w);
        branch.push_back(std::move(rest));
      }
      search(std::move(branch));
    }
  }

  const OrientedGraph& g_;
  std::size_t n_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_digits_;
  std::vector<Vertex> best_order_;
};

OrientedGraph relabel(const OrientedGraph& g, const std::vector<Vertex>& labelling) {
  GraphBuilder b(g.order());
  for (const Arc& a : g.arcs()) b.add_arc(labelling[a.tail], labelling[a.head]);
  return b.build();
}

std::uint64_t checked_pow3(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / 3) return UINT64_MAX;
    r *= 3;
  }
  return r;
}

}  // namespace

std::string CanonicalCode::hex() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%02x-%016llx%016llx", static_cast<unsigned>(order),
                static_cast<unsigned long long>(bits[0]), static_cast<unsigned long long>(bits[1]));
  return buf;
}

CanonicalForm canonical_form(const OrientedGraph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw Error(ErrorCode::kTooLarge, "canonical form supports n <= 10");
  return Canonicaliser(g).run();
}

OrientedGraph canonical_graph(const OrientedGraph& g) {
  return relabel(g, canonical_form(g).labelling);
}

void enumerate_labelled(std::size_t n, const std::function<bool(const OrientedGraph&)>& visit,
                        EnumerationBudget budget) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t total = checked_pow3(pairs);
  if (total > budget.max_graphs)
    throw Error(ErrorCode::kBudgetExceeded,
                "labelled enumeration at n=" + std::to_string(n) + " exceeds graph budget");
  std::vector<Arc> pair_list;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pair_list.push_back({u, v});
  std::vector<std::uint8_t> state(pairs, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < pairs; ++i) {
      if (state[i] == 1)
        b.add_arc(pair_list[i].tail, pair_list[i].head);
      else if (state[i] == 2)
        b.add_arc(pair_list[i].head, pair_list[i].tail);
    }
    if (!visit(b.build())) return;
    for (std::size_t i = pairs; i-- > 0;) {
      if (++state[i] < 3) break;
      state[i] = 0;
    }
  }
}

std::vector<OrientedGraph> enumerate_unlabelled(std::size_t n, EnumerationBudget budget) {
  if (n > kMaxCanonicalOrder)
    throw Error(ErrorCode::kTooLarge, "unlabelled enumeration supports n <= 10");
  std::vector<OrientedGraph> reps{OrientedGraph::from_arcs(0, {})};
  std::uint64_t examined = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    const std::uint64_t patterns = checked_pow3(m - 1);
    if (patterns == UINT64_MAX || reps.size() > (budget.max_graphs - examined) / patterns)
      throw Error(ErrorCode::kBudgetExceeded,
                  "unlabelled enumeration at n=" + std::to_string(n) + " exceeds graph budget");
    examined += reps.size() * patterns;
    std::unordered_map<CanonicalCode, OrientedGraph, CanonicalCodeHash> seen;
    std::vector<std::uint8_t> state(m - 1);
    for (const OrientedGraph& base : reps) {
      std::fill(state.begin(), state.end(), 0);
      for (std::uint64_t index = 0; index < patterns; ++index) {
        GraphBuilder b(m);
        for (const Arc& a : base.arcs()) b.add_arc(a.tail, a.head);
        const Vertex fresh = m - 1;
        for (Vertex u = 0; u + 1 < m; ++u) {
          if (state[u] == 1)
            b.add_arc(u, fresh);
          else if (state[u] == 2)
            b.add_arc(fresh, u);
        }
        const OrientedGraph g = b.build();
        CanonicalForm form = canonical_form(g);
        if (!seen.contains(form.code)) seen.emplace(form.code, relabel(g, form.labelling));
        for (std::size_t i = state.size(); i-- > 0;) {
          if (++state[i] < 3) break;
          state[i] = 0;
        }
      }
    }
    std::map<CanonicalCode, OrientedGraph> ordered(seen.begin(), seen.end());
    reps.clear();
    for (auto& [code, g] : ordered) reps.push_back(std::move(g));
  }
  return reps;
}

std::vector<OrientedGraph> enumerate_oriented(std::size_t n, bool up_to_isomorphism,
                                              EnumerationBudget budget) {
  if (up_to_isomorphism) return enumerate_unlabelled(n, budget);
  std::vector<OrientedGraph> all;
  enumerate_labelled(
      n,
      [&](const OrientedGraph& g) {
        all.push_back(g);
        return true;
      },
      budget);
  return all;
}

}  // namespace semideg
