#pragma once

#include <chrono>
#include <cstdint>

namespace semideg {

// Search limits. Zero means unlimited.
struct Budget {
  std::uint64_t time_ms = 0;
  std::uint64_t max_nodes = 0;
};

// Three-valued search outcome. kBudget is never a refutation.
enum class Outcome { kTrue, kFalse, kBudget };

const char* to_string(Outcome o) noexcept;

class BudgetGuard {
 public:
  explicit BudgetGuard(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Counts one search node; returns false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.time_ms != 0 && (nodes_ & 1023u) == 0 && elapsed_ms() > budget_.time_ms)
      exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t elapsed_ms() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace semideg
