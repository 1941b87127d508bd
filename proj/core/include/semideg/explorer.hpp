#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semideg/budget.hpp"
#include "semideg/graph.hpp"
#include "semideg/solvers.hpp"

namespace semideg {

// ---------------------------------------------------------------------------
// Threshold expressions

// Exact rational with a positive denominator, always in lowest terms.
// Arithmetic that leaves the 64-bit range throws Error{kBadParameter}.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den = 1);
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return {-num, den}; }
  std::int64_t floor() const;
  std::int64_t ceil() const;
  std::string text() const;
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

struct ThresholdVars {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d0 = 0;     // δ⁰
  std::int64_t dstar = 0;  // δ*
};

// A conjunction of comparisons over n, k, δ⁰ and δ*, e.g.
//   d0 >= (3n-4)/8
//   δ* > (3n-3)/2 && d0 >= 1
// Variables: n, k, d0 | delta0 | δ⁰ | δ0, dstar | deltastar | δ*.
// Operators: + - * / with the usual precedence, juxtaposition as
// multiplication (3n, 5k/2, 2(n+1)), ceil(...) and floor(...), comparisons
// < <= > >= == != (also ≤ ≥), conjunction && or "and". Decimal constants
// are read exactly (0.375 = 3/8). Comparisons are exact, so an integer
// degree against a fractional bound behaves as against its ceiling. The
// empty string and "true" accept everything.
class Threshold {
 public:
  Threshold();
  // Throws Error{kParseError} with the column of the offending token.
  static Threshold parse(std::string_view text);

  bool holds(const ThresholdVars& vars) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

// ---------------------------------------------------------------------------
// Properties

enum class PropertyKind { kHamiltonian, kPancyclic, kStronglyHamConnected, kKOrdered, kKLinked,
                          kCycleFactor };

// Which length partitions a cycle-factor sweep must realise.
struct CycleFactorPolicy {
  enum class Kind { kAll, kParts, kExplicit } kind = Kind::kAll;
  std::size_t parts = 0;               // kParts: exactly this many cycles
  std::vector<std::size_t> lengths;    // kExplicit
};

struct PropertySpec {
  PropertyKind kind = PropertyKind::kHamiltonian;
  std::size_t k = 0;  // k-ordered, k-linked
  CycleFactorPolicy policy;

  // hamiltonian | pancyclic | shc | k-ordered(K) | k-linked(K) |
  // cycle-factor(all | t=T | L1+L2+...). Throws Error{kParseError}.
  static PropertySpec parse(std::string_view text);
  std::string text() const;
};

// Length partitions of n into parts >= 3 selected by the policy, each
// non-increasing, in lexicographically decreasing order.
std::vector<std::vector<std::size_t>> policy_partitions(const CycleFactorPolicy& policy,
                                                        std::size_t n);

struct PropertyVerdict {
  Outcome outcome = Outcome::kTrue;
  std::string note;  // the refuting witness for kFalse, e.g. "pair (0,3)"
};

// Quantified properties (k-ordered, shc, cycle-factor policies) are true
// iff every instance is; graphs too small to carry an instance are
// vacuously true. The budget applies to each solver call.
PropertyVerdict evaluate_property(const OrientedGraph& g, const PropertySpec& property,
                                  const Budget& budget = {});

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepMode { kExhaustive, kSampled };

inline constexpr std::size_t kMaxExhaustiveSweepOrder = 6;

struct SweepOptions {
  std::size_t n = 0;
  PropertySpec property;
  Threshold threshold;
  std::int64_t k = -1;  // value of k in the threshold; -1 takes the property's k
  SweepMode mode = SweepMode::kExhaustive;
  // sampled mode: keep drawing until `samples` graphs meet the threshold or
  // max_attempts graphs were drawn (0 means 1000 * samples)
  std::size_t samples = 100;
  std::size_t max_attempts = 0;
  double density = 0.8;  // arc probability of sampled graphs
  std::uint64_t seed = 0;
  Budget budget;                 // per graph
  std::uint64_t total_time_ms = 0;  // whole sweep, 0 = unlimited
  // Replaces evaluate_property, e.g. to stub a solver.
  std::function<PropertyVerdict(const OrientedGraph&)> evaluator;
};

struct SweepRecord {
  std::string id;  // canonical code (hex) for n <= 10, else "s<draw index>"
  std::size_t delta0 = 0;
  std::size_t delta_star = 0;
  Outcome verdict = Outcome::kTrue;
  std::string note;
  std::string graph;  // serialized JSON, kept for failures and budget hits
};

struct SweepReport {
  std::size_t n = 0;
  std::string property;
  std::string threshold;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t budget_ms = 0;

  std::size_t examined = 0;  // graphs enumerated or drawn
  std::size_t accepted = 0;  // graphs meeting the threshold
  std::size_t failures = 0;
  std::size_t budget_hits = 0;
  bool complete = true;      // false after a budget hit or the total time limit
  std::optional<std::size_t> max_delta0_failure;
  std::optional<double> acceptance_rate;  // sampled mode
  std::vector<SweepRecord> records;       // threshold-meeting graphs, sorted by id

  std::uint64_t runtime_ms = 0;  // not serialized

  std::vector<const SweepRecord*> failure_records() const;
};

// Throws Error{kTooLarge} for exhaustive sweeps above
// kMaxExhaustiveSweepOrder and Error{kBadParameter} for bad options.
SweepReport sweep(const SweepOptions& options);

enum class ReportFormat { kJson, kCsv };

// JSON embeds the serialized counterexamples. CSV has the fixed header
//   id,delta0,deltastar,verdict,note,counterexample
// where counterexample names "<dir>/<id>.json" for failures.
std::string render_report(const SweepReport& report, ReportFormat format,
                          std::string_view counterexample_dir = "counterexamples");
// Writes one "<id>.json" graph file per failure record into dir (created if
// missing). Throws Error{kIoError}.
void write_counterexamples(const SweepReport& report, const std::string& dir);

// ---------------------------------------------------------------------------
// Acceptance suite

struct SuiteHooks {
  std::function<SolveResult(const OrientedGraph&, const Budget&)> hamiltonian_cycle;
  std::function<SolveResult(const OrientedGraph&, const LengthPartition&, const Budget&)>
      cycle_factor;
  std::function<SolveResult(const OrientedGraph&, std::span<const Vertex>, const Budget&)>
      k_ordered;
  std::function<SolveResult(const OrientedGraph&, std::span<const TerminalPair>, bool,
                            const Budget&)>
      k_linkage;
  double builder_mu = 0.001;
};

// Library solvers everywhere.
SuiteHooks default_hooks();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string measured;
  std::string expected;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 = no limit
};

struct SuiteOptions {
  SuiteHooks hooks = default_hooks();
  std::vector<int> only;  // empty = all ten
  std::function<void(const CriterionResult&)> on_result;
};

// Runs the acceptance criteria in order. A criterion that throws is
// reported as failed with the error text. Exceeding a time limit fails the
// criterion.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});
std::string format_criterion(const CriterionResult& r);

}  // namespace semideg
