#include "semideg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "semideg/error.hpp"
#include "semideg/generators.hpp"
#include "semideg/random.hpp"

namespace semideg {

namespace {

constexpr double kTol = 1e-9;

void embed_tournament(GraphBuilder& b, const OrientedGraph& t, Vertex offset) {
  for (const Arc& a : t.arcs()) b.add_arc(offset + a.tail, offset + a.head);
}

std::string class_label(int i) { return "D" + std::to_string(i + 1); }

ExtremalReport verify_fixed(const OrientedGraph& g, const FourPartition& p,
                            const ClassifierParams& params) {
  ExtremalReport r;
  const double n = static_cast<double>(g.order());
  const double mu = params.mu;

  for (int i = 0; i < 4; ++i) {
    const double size = static_cast<double>(p.size(i));
    if (size < (0.25 - 16 * mu) * n - kTol || size > (0.25 + 16 * mu) * n + kTol)
      r.bad_size_classes.push_back(i);
  }
  r.sizes_ok = r.bad_size_classes.empty();

  const double quarter_sq = n * n / 16.0;
  auto check = [&](int from, int to, double bound) {
    ArcInequality c;
    c.label = from == to ? "a(" + class_label(from) + ")"
                         : "a(" + class_label(from) + "," + class_label(to) + ")";
    c.value = arc_count(g, p.set(from), p.set(to));
    c.bound = bound;
    c.pass = static_cast<double>(c.value) > bound;
    r.arc_checks.push_back(std::move(c));
  };
  for (int i = 0; i < 4; ++i) check(i, next_class(i), (1 - 800 * mu) * quarter_sq);
  check(0, 0, (0.5 - 250 * mu) * quarter_sq);
  check(2, 2, (0.5 - 250 * mu) * quarter_sq);
  check(1, 3, (0.5 - 300 * mu) * quarter_sq);
  check(3, 1, (0.5 - 300 * mu) * quarter_sq);
  r.arcs_ok = std::all_of(r.arc_checks.begin(), r.arc_checks.end(),
                          [](const ArcInequality& c) { return c.pass; });

  r.all_acceptable = true;
  r.non_circular_bound = 100 * std::sqrt(mu) * n;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexClassification cls = classify_vertex(g, p, v, params);
    if (!cls.acceptable && r.all_acceptable) {
      r.all_acceptable = false;
      r.unacceptable_witness = v;
    }
    if (!cls.circular) {
      if (r.non_circular == 0) r.non_circular_witness = v;
      ++r.non_circular;
    }
  }
  r.vertices_ok =
      r.all_acceptable && static_cast<double>(r.non_circular) <= r.non_circular_bound + kTol;
  return r;
}

}  // namespace

ExtremalMember build_extremal_member(std::size_t n, double mu, std::uint64_t seed) {
  if (n == 0 || n % 4 != 0)
    throw Error(ErrorCode::kBadParameter, "extremal member needs n divisible by 4, got " +
                                              std::to_string(n));
  if (!(mu > 0.0)) throw Error(ErrorCode::kBadParameter, "mu must be positive");
  const std::size_t m = n / 4;
  GraphBuilder b(n);
  for (int i = 0; i < 4; ++i) {
    const Vertex from = static_cast<Vertex>(i) * m;
    const Vertex to = static_cast<Vertex>(next_class(i)) * m;
    for (Vertex u = 0; u < m; ++u)
      for (Vertex w = 0; w < m; ++w) b.add_arc(from + u, to + w);
  }
  const OrientedGraph t = near_regular_tournament(m);
  embed_tournament(b, t, 0);
  embed_tournament(b, t, 2 * m);
  Rng rng(seed);
  for (Vertex u = m; u < 2 * m; ++u)
    for (Vertex w = 3 * m; w < 4 * m; ++w) {
      if (rng.coin())
        b.add_arc(u, w);
      else
        b.add_arc(w, u);
    }
  std::vector<int> assignment(n);
  for (Vertex v = 0; v < n; ++v) assignment[v] = static_cast<int>(v / m);
  return {b.build(), FourPartition::from_assignment(assignment, mu)};
}

ExtremalReport verify_extremal_member(const OrientedGraph& g, const FourPartition& p,
                                      const ClassifierParams& params, bool try_rotations) {
  if (p.order() != g.order())
    throw Error(ErrorCode::kBadPartition, "partition order differs from graph order");
  ExtremalReport first = verify_fixed(g, p, params);
  if (!try_rotations || first.passed()) return first;
  for (int shift = 1; shift < 4; ++shift) {
    ExtremalReport r = verify_fixed(g, p.rotated(shift), params);
    r.rotation = shift;
    if (r.passed()) return r;
  }
  return first;
}

FourPartition guess_extremal_partition(const OrientedGraph& g, double mu, std::uint64_t seed,
                                       std::size_t restarts) {
  const std::size_t n = g.order();
  Rng rng(seed);
  std::vector<int> best;
  std::size_t best_score = 0;
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(restarts, 1); ++attempt) {
    std::vector<int> cls(n);
    for (auto& c : cls) c = static_cast<int>(rng.below(4));
    for (std::size_t round = 0; round < 4 * n + 4; ++round) {
      bool changed = false;
      for (Vertex v = 0; v < n; ++v) {
        std::array<std::size_t, 4> score{};
        g.out(v).for_each([&](Vertex w) {
          if (w != v) ++score[static_cast<std::size_t>(prev_class(cls[w]))];
        });
        g.in(v).for_each([&](Vertex w) {
          if (w != v) ++score[static_cast<std::size_t>(next_class(cls[w]))];
        });
        int pick = cls[v];
        for (int i = 0; i < 4; ++i)
          if (score[static_cast<std::size_t>(i)] > score[static_cast<std::size_t>(pick)]) pick = i;
        if (pick != cls[v]) {
          cls[v] = pick;
          changed = true;
        }
      }
      if (!changed) break;
    }
    std::size_t total = 0;
    for (const Arc& a : g.arcs())
      if (cls[a.head] == next_class(cls[a.tail])) ++total;
    if (best.empty() || total > best_score) {
      best = cls;
      best_score = total;
    }
  }
  return FourPartition::from_assignment(best, mu);
}

LinkageCounterexample build_linkage_counterexample(std::size_t n, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kBadParameter, "k must be at least 1");
  if (n < 2 * k || (n - 2 * k) % 2 != 0 || (n - 2 * k) / 2 % 2 == 0)
    throw Error(ErrorCode::kBadParameter,
                "(n-2k)/2 must be a positive odd integer; n=" + std::to_string(n) +
                    ", k=" + std::to_string(k));
  const std::size_t m = (n - 2 * k) / 2;
  LinkageGadget gad;
  gad.k = k;
  for (Vertex i = 0; i < m; ++i) {
    gad.b.push_back(i);
    gad.c.push_back(m + i);
  }
  for (Vertex i = 0; i < k; ++i) {
    gad.x.push_back(2 * m + i);
    gad.y.push_back(2 * m + k + i);
  }
  GraphBuilder b(n);
  // X and Y transitive
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      b.add_arc(gad.x[i], gad.x[j]);
      b.add_arc(gad.y[i], gad.y[j]);
    }
  // B and C rotational
  const OrientedGraph t = rotational_tournament(m);
  embed_tournament(b, t, 0);
  embed_tournament(b, t, m);
  // C -> B, with x_k and y_k feeding B and fed by C
  const Vertex xk = gad.x.back();
  const Vertex yk = gad.y.back();
  std::vector<Vertex> outer;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    outer.push_back(gad.x[i]);
    outer.push_back(gad.y[i]);
  }
  for (Vertex bv : gad.b) {
    b.add_arc(xk, bv);
    b.add_arc(yk, bv);
    for (Vertex cv : gad.c) b.add_arc(cv, bv);
    for (Vertex o : outer) b.add_arc(bv, o);
  }
  for (Vertex cv : gad.c) {
    b.add_arc(cv, xk);
    b.add_arc(cv, yk);
    for (Vertex o : outer) b.add_arc(o, cv);
  }
  // y_i -> x_i, otherwise x_i -> y_j
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        b.add_arc(gad.y[i], gad.x[i]);
      else
        b.add_arc(gad.x[i], gad.y[j]);
    }
  return {b.build(), std::move(gad)};
}

}  // namespace semideg
