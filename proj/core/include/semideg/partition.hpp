#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semideg/graph.hpp"

namespace semideg {

// Class indices are 0-based: index i denotes D_{i+1}. Arithmetic on class
// indices is modulo 4, so next_class(3) == 0 is D₄ -> D₁.
constexpr int next_class(int i) noexcept { return (i + 1) % 4; }
constexpr int prev_class(int i) noexcept { return (i + 3) % 4; }

// Ordered partition (D₁, D₂, D₃, D₄) of the vertex set together with the
// parameter μ it was built for. Members of each class are kept sorted.
class FourPartition {
 public:
  FourPartition() = default;

  // Throws Error{kBadPartition} unless the classes are disjoint and cover
  // 0..n-1, Error{kOutOfRange} for indices >= n.
  static FourPartition from_classes(std::size_t n, std::array<std::vector<Vertex>, 4> classes,
                                    double mu);

  // Class assignment per vertex (values 0..3).
  static FourPartition from_assignment(std::span<const int> class_of, double mu);

  std::size_t order() const noexcept { return class_of_.size(); }
  double mu() const noexcept { return mu_; }

  const std::vector<Vertex>& members(int i) const { return members_[static_cast<std::size_t>(i)]; }
  const VertexSet& set(int i) const { return sets_[static_cast<std::size_t>(i)]; }
  std::size_t size(int i) const { return members(i).size(); }
  // Class index of v, or -1 when v >= order().
  int class_of(Vertex v) const noexcept {
    return v < class_of_.size() ? class_of_[v] : -1;
  }
  const std::vector<int>& assignment() const noexcept { return class_of_; }

  // s = |D₂| - |D₄|.
  std::ptrdiff_t imbalance() const noexcept {
    return static_cast<std::ptrdiff_t>(size(1)) - static_cast<std::ptrdiff_t>(size(3));
  }

  FourPartition with_move(Vertex v, int to) const;
  // New D_{i+1} is old D_{((i + shift) mod 4) + 1}.
  FourPartition rotated(int shift) const;

 private:
  void rebuild_members();

  std::vector<int> class_of_;
  std::array<std::vector<Vertex>, 4> members_;
  std::array<VertexSet, 4> sets_;
  double mu_ = 0.0;
};

// {"classes":[[...],[...],[...],[...]],"mu":<real>}
std::string serialize_partition(const FourPartition& p);
FourPartition parse_partition(std::string_view text, std::size_t n);

}  // namespace semideg
