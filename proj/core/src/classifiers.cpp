#include "semideg/classifiers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "semideg/error.hpp"
#include "semideg/random.hpp"

namespace semideg {

namespace {

constexpr double kTol = 1e-9;

constexpr NeighbourCondition out_of(int c) { return {c, Direction::kOut}; }
constexpr NeighbourCondition in_of(int c) { return {c, Direction::kIn}; }

void require_member(const FourPartition& p, Vertex v) {
  if (p.class_of(v) < 0)
    throw Error(ErrorCode::kVertexNotInPartition, "vertex " + std::to_string(v));
}

std::vector<Vertex> mask_members(std::uint64_t mask, std::span<const Vertex> universe) {
  std::vector<Vertex> out;
  while (mask != 0) {
    out.push_back(universe[static_cast<std::size_t>(std::countr_zero(mask))]);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

ClassifierParams ClassifierParams::make(double c, double mu, std::size_t n) {
  if (!(c > 0.0)) throw Error(ErrorCode::kBadParameter, "c must be positive");
  if (!(mu > 0.0)) throw Error(ErrorCode::kBadParameter, "mu must be positive");
  ClassifierParams p{c, mu, n};
  if (!(c * std::sqrt(mu) < 0.01))
    throw Error(ErrorCode::kBadParameter,
                "alpha = (1/100 - c*sqrt(mu)) n/4 must be positive; got c*sqrt(mu) = " +
                    std::to_string(c * std::sqrt(mu)));
  return p;
}

double ClassifierParams::root_mu() const { return std::sqrt(mu); }
double ClassifierParams::alpha() const {
  return (0.01 - circular_slack()) * static_cast<double>(n) / 4.0;
}
double ClassifierParams::beta() const {
  return (0.01 + circular_slack()) * static_cast<double>(n) / 4.0;
}

const std::array<AcceptancePattern, 16>& acceptance_patterns() {
  static const std::array<AcceptancePattern, 16> table{{
      {0, {out_of(1), in_of(3)}, "D1:(D2)^a(D4)_a"},
      {0, {out_of(0), in_of(3)}, "D1:(D1)^a(D4)_a"},
      {0, {in_of(0), out_of(1)}, "D1:(D1)_a(D2)^a"},
      {0, {out_of(0), in_of(0)}, "D1:(D1)^a_a"},
      {1, {in_of(0), out_of(2)}, "D2:(D1)_a(D3)^a"},
      {1, {in_of(0), out_of(3)}, "D2:(D1)_a(D4)^a"},
      {1, {out_of(2), in_of(3)}, "D2:(D3)^a(D4)_a"},
      {1, {out_of(3), in_of(3)}, "D2:(D4)^a_a"},
      {2, {in_of(1), out_of(3)}, "D3:(D2)_a(D4)^a"},
      {2, {in_of(1), out_of(2)}, "D3:(D2)_a(D3)^a"},
      {2, {in_of(2), out_of(3)}, "D3:(D3)_a(D4)^a"},
      {2, {out_of(2), in_of(2)}, "D3:(D3)^a_a"},
      {3, {out_of(0), in_of(2)}, "D4:(D1)^a(D3)_a"},
      {3, {out_of(0), in_of(1)}, "D4:(D1)^a(D2)_a"},
      {3, {out_of(1), in_of(2)}, "D4:(D2)^a(D3)_a"},
      {3, {out_of(1), in_of(1)}, "D4:(D2)^a_a"},
  }};
  return table;
}

std::size_t class_degree(const OrientedGraph& g, const FourPartition& p, Vertex v, int cls,
                         Direction dir) {
  const VertexSet& nbrs = dir == Direction::kOut ? g.out(v) : g.in(v);
  return nbrs.count_common(p.set(cls));
}

bool is_circular(const OrientedGraph& g, const FourPartition& p, Vertex v,
                 const ClassifierParams& params) {
  require_member(p, v);
  const int home = p.class_of(v);
  const int succ = next_class(home);
  const int pred = prev_class(home);
  const double slack = params.circular_slack();
  const auto missing_out =
      static_cast<double>(p.size(succ) - class_degree(g, p, v, succ, Direction::kOut));
  const auto missing_in =
      static_cast<double>(p.size(pred) - class_degree(g, p, v, pred, Direction::kIn));
  return missing_out <= slack * static_cast<double>(p.size(succ)) + kTol &&
         missing_in <= slack * static_cast<double>(p.size(pred)) + kTol;
}

VertexClassification classify_vertex(const OrientedGraph& g, const FourPartition& p, Vertex v,
                                     const ClassifierParams& params) {
  require_member(p, v);
  VertexClassification result;
  const int home = p.class_of(v);
  const double alpha = params.alpha();
  const auto& table = acceptance_patterns();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const AcceptancePattern& pat = table[i];
    if (pat.home != home) continue;
    const bool ok = std::all_of(pat.conditions.begin(), pat.conditions.end(), [&](const auto& c) {
      return static_cast<double>(class_degree(g, p, v, c.cls, c.dir)) >= alpha - kTol;
    });
    if (ok) {
      result.acceptable = true;
      result.pattern = static_cast<int>(i);
      break;
    }
  }
  result.circular = is_circular(g, p, v, params);
  return result;
}

GoodVerdict classify_good(const OrientedGraph& g, const FourPartition& p, Vertex v,
                          const ClassifierParams& params) {
  require_member(p, v);
  const std::ptrdiff_t s = p.imbalance();
  if (s == 0) throw Error(ErrorCode::kBalancedPartition, "good vertices need |D2| != |D4|");
  if (!classify_vertex(g, p, v, params).acceptable) return {false, "not acceptable"};

  const double beta = params.beta();
  auto below = [&](int cls, Direction dir) {
    return static_cast<double>(class_degree(g, p, v, cls, dir)) < beta - kTol;
  };
  const int home = p.class_of(v);
  if (s > 0) {
    switch (home) {
      case 3: return {true, "member of D4"};
      case 0:
        if (below(1, Direction::kIn) && below(2, Direction::kIn)) return {true, "D1:(D2)_b(D3)_b"};
        return {false, "D1 vertex with >= beta in-neighbours in D2 or D3"};
      case 1:
        if (below(0, Direction::kOut) && below(1, Direction::kOut) && below(1, Direction::kIn) &&
            below(2, Direction::kIn))
          return {true, "D2:(D1)^b(D2)^b_b(D3)_b"};
        return {false, "D2 vertex with >= beta neighbours in D1, D2 or D3"};
      default:
        if (below(0, Direction::kOut) && below(1, Direction::kOut)) return {true, "D3:(D1)^b(D2)^b"};
        return {false, "D3 vertex with >= beta out-neighbours in D1 or D2"};
    }
  }
  switch (home) {
    case 1: return {true, "member of D2"};
    case 0:
      if (below(1, Direction::kIn) && below(2, Direction::kIn)) return {true, "D1:(D2)_b(D3)_b"};
      return {false, "D1 vertex with >= beta in-neighbours in D2 or D3"};
    case 2:
      if (below(0, Direction::kOut) && below(1, Direction::kOut)) return {true, "D3:(D1)^b(D2)^b"};
      return {false, "D3 vertex with >= beta out-neighbours in D1 or D2"};
    default:
      if (below(0, Direction::kIn) && below(3, Direction::kOut) && below(3, Direction::kIn) &&
          below(2, Direction::kOut))
        return {true, "D4:(D1)_b(D4)^b_b(D3)^b"};
      return {false, "D4 vertex with >= beta neighbours in D1, D3 or D4"};
  }
}

// ---------------------------------------------------------------------------

ExpanderParams ExpanderParams::make(double mu, double tau) {
  if (!(mu > 0.0 && mu <= tau && tau < 1.0))
    throw Error(ErrorCode::kBadParameter, "expander parameters need 0 < mu <= tau < 1");
  return {mu, tau};
}

std::pair<std::size_t, std::size_t> expansion_window(std::size_t n, double tau) {
  const double nn = static_cast<double>(n);
  const auto lo = static_cast<std::size_t>(std::max(0.0, std::ceil(tau * nn - kTol)));
  const auto hi = static_cast<std::size_t>(std::max(0.0, std::floor((1.0 - tau) * nn + kTol)));
  return {lo, hi};
}

std::size_t out_neighbourhood_size(const OrientedGraph& g, std::span<const Vertex> s) {
  VertexSet nbr(g.order());
  for (Vertex v : s) nbr |= g.out(v);
  return nbr.count();
}

bool expands(const OrientedGraph& g, std::span<const Vertex> s, double mu) {
  return static_cast<double>(out_neighbourhood_size(g, s)) >=
         static_cast<double>(s.size()) + mu * static_cast<double>(g.order()) - kTol;
}

ExpanderResult is_robust_outexpander(const OrientedGraph& g, const ExpanderParams& params,
                                     const ExpanderOptions& options) {
  const std::size_t n = g.order();
  const auto [lo, hi] = expansion_window(n, params.tau);
  const double need_extra = params.mu * static_cast<double>(n) - kTol;
  ExpanderResult result;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});

  if (n <= options.exhaustive_limit && n < 32) {
    result.exhaustive = true;
    std::vector<std::uint32_t> out(n);
    for (Vertex v = 0; v < n; ++v)
      g.out(v).for_each([&](Vertex w) { out[v] |= std::uint32_t{1} << w; });
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint32_t> nbr(total, 0);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      nbr[mask] = nbr[mask & (mask - 1)] | out[low];
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < lo || size > hi) continue;
      ++result.subsets_checked;
      const auto reach = static_cast<double>(std::popcount(nbr[mask]));
      if (reach < static_cast<double>(size) + need_extra) {
        result.verdict = ExpansionVerdict::kNotExpander;
        result.witness = mask_members(mask, all);
        return result;
      }
    }
    result.verdict = ExpansionVerdict::kExpander;
    return result;
  }
  if (!options.allow_sampling)
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive expander check limited to " + std::to_string(options.exhaustive_limit) +
                    " vertices, got " + std::to_string(n));
  if (lo > hi || n == 0) {
    result.verdict = ExpansionVerdict::kNotRefuted;
    return result;
  }
  Rng rng(options.seed);
  std::vector<Vertex> order = all;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const std::size_t size = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
    rng.shuffle(std::span<Vertex>(order));
    std::vector<Vertex> s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
    ++result.subsets_checked;
    if (!expands(g, s, params.mu)) {
      std::sort(s.begin(), s.end());
      result.verdict = ExpansionVerdict::kNotExpander;
      result.witness = std::move(s);
      return result;
    }
  }
  result.verdict = ExpansionVerdict::kNotRefuted;
  return result;
}

ExpansionUpgradeResult check_expansion_upgrade(const OrientedGraph& r, double d, double mu, double tau,
                           std::size_t exhaustive_limit) {
  ExpansionUpgradeResult result;
  const double floor_needed = (3.0 / 8.0 - 3.0 * d) * static_cast<double>(r.order());
  result.degree_condition = static_cast<double>(min_semidegree(r)) >= floor_needed - kTol;
  ExpanderOptions opts;
  opts.exhaustive_limit = exhaustive_limit;
  result.third_expander = is_robust_outexpander(r, ExpanderParams::make(mu, 1.0 / 3.0), opts)
                              .verdict == ExpansionVerdict::kExpander;
  result.hypothesis = result.degree_condition && result.third_expander;
  const ExpanderResult concl = is_robust_outexpander(r, ExpanderParams::make(mu, tau), opts);
  result.conclusion = concl.verdict == ExpansionVerdict::kExpander;
  result.conclusion_witness = concl.witness;
  return result;
}

// ---------------------------------------------------------------------------

double bipartite_density(const OrientedGraph& g, std::span<const Vertex> a,
                         std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kEmptySide, "density needs nonempty sides");
  const std::size_t arcs = arc_count(g, a, b);
  return static_cast<double>(arcs) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

RegularityResult is_regular_pair(const OrientedGraph& g, std::span<const Vertex> a,
                                 std::span<const Vertex> b, const RegularityParams& params,
                                 bool super, std::size_t side_limit) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kEmptySide, "regular pair needs nonempty sides");
  if (!(params.eps > 0.0)) throw Error(ErrorCode::kBadParameter, "eps must be positive");
  const VertexSet as = to_set(g, a);
  const VertexSet bs = to_set(g, b);
  if (as.intersects(bs)) throw Error(ErrorCode::kBadParameter, "regular pair sides must be disjoint");
  if (as.count() != a.size() || bs.count() != b.size())
    throw Error(ErrorCode::kBadParameter, "regular pair sides contain repeated vertices");
  if (a.size() > side_limit || b.size() > side_limit || a.size() > 30 || b.size() > 30)
    throw Error(ErrorCode::kBudgetExceeded, "regular pair exhaustive check limited to " +
                                                std::to_string(side_limit) + " vertices per side");
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<std::uint32_t> out_mask(na, 0);
  std::size_t total_arcs = 0;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (g.has_arc(a[i], b[j])) {
        out_mask[i] |= std::uint32_t{1} << j;
        ++total_arcs;
      }

  RegularityResult result;
  const double ab = static_cast<double>(na * nb);
  result.density = static_cast<double>(total_arcs) / ab;
  result.regular = true;

  const double min_x = params.eps * static_cast<double>(na) + kTol;
  const double min_y = params.eps * static_cast<double>(nb) + kTol;
  std::vector<std::size_t> per_vertex(na);
  std::vector<std::size_t> sums(std::size_t{1} << na, 0);
  for (std::uint32_t ymask = 1; ymask < (std::uint32_t{1} << nb) && result.regular; ++ymask) {
    const auto ysize = static_cast<std::size_t>(std::popcount(ymask));
    if (static_cast<double>(ysize) <= min_y) continue;
    for (std::size_t i = 0; i < na; ++i)
      per_vertex[i] = static_cast<std::size_t>(std::popcount(out_mask[i] & ymask));
    for (std::uint32_t xmask = 1; xmask < (std::uint32_t{1} << na); ++xmask) {
      sums[xmask] = sums[xmask & (xmask - 1)] + per_vertex[static_cast<std::size_t>(std::countr_zero(xmask))];
      const auto xsize = static_cast<std::size_t>(std::popcount(xmask));
      if (static_cast<double>(xsize) <= min_x) continue;
      // |e(X,Y)|A||B| - e(A,B)|X||Y|| < eps |X||Y||A||B|
      const double lhs = std::abs(static_cast<double>(sums[xmask]) * ab -
                                  static_cast<double>(total_arcs * xsize * ysize));
      const double rhs = params.eps * static_cast<double>(xsize * ysize) * ab;
      if (!(lhs < rhs)) {
        result.regular = false;
        result.witness = std::make_pair(mask_members(xmask, a), mask_members(ymask, b));
        break;
      }
    }
  }

  result.super_regular = result.regular;
  if (super) {
    const double floor_a = (params.d - params.eps) * static_cast<double>(nb) - kTol;
    const double floor_b = (params.d - params.eps) * static_cast<double>(na) - kTol;
    for (std::size_t i = 0; i < na && result.super_regular; ++i)
      if (static_cast<double>(std::popcount(out_mask[i])) < floor_a) {
        result.super_regular = false;
        result.degree_witness = a[i];
      }
    for (std::size_t j = 0; j < nb && result.super_regular; ++j) {
      std::size_t deg = 0;
      for (std::size_t i = 0; i < na; ++i) deg += (out_mask[i] >> j) & 1u;
      if (static_cast<double>(deg) < floor_b) {
        result.super_regular = false;
        result.degree_witness = b[j];
      }
    }
  }
  result.verdict = super ? result.super_regular : result.regular;
  return result;
}

}  // namespace semideg
