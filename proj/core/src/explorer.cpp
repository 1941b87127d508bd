#include "semideg/explorer.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include <json.hpp>

#include "semideg/enumerate.hpp"
#include "semideg/error.hpp"
#include "semideg/generators.hpp"
#include "semideg/random.hpp"
#include "semideg/serialize.hpp"

namespace semideg {

// ---------------------------------------------------------------------------
// Rational

__extension__ typedef __int128 wide;

namespace {

std::int64_t narrow(wide x) {
  if (x > INT64_MAX || x < INT64_MIN) throw Error(ErrorCode::kBadParameter, "rational overflow");
  return static_cast<std::int64_t>(x);
}

Rational reduce(wide num, wide den) {
  if (den == 0) throw Error(ErrorCode::kBadParameter, "division by zero in threshold");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide a = num < 0 ? -num : num;
  wide b = den;
  while (b != 0) {
    const wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return {narrow(num), narrow(den)};
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) { return reduce(num, den); }

Rational Rational::operator+(const Rational& o) const {
  return reduce(static_cast<wide>(num) * o.den + static_cast<wide>(o.num) * den,
                static_cast<wide>(den) * o.den);
}
Rational Rational::operator-(const Rational& o) const { return *this + (-o); }
Rational Rational::operator*(const Rational& o) const {
  return reduce(static_cast<wide>(num) * o.num, static_cast<wide>(den) * o.den);
}
Rational Rational::operator/(const Rational& o) const {
  return reduce(static_cast<wide>(num) * o.den, static_cast<wide>(den) * o.num);
}

std::int64_t Rational::floor() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}
std::int64_t Rational::ceil() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

std::string Rational::text() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<wide>(a.num) * b.den <=> static_cast<wide>(b.num) * a.den;
}

// ---------------------------------------------------------------------------
// Threshold grammar

struct Threshold::Node {
  enum class Kind { kConst, kVar, kAdd, kSub, kMul, kDiv, kNeg, kCeil, kFloor, kCmp, kAnd, kTrue };
  enum class Var { kN, kK, kD0, kDStar };
  enum class Cmp { kLt, kLe, kGt, kGe, kEq, kNe };
  Kind kind = Kind::kTrue;
  Rational value;
  Var var = Var::kN;
  Cmp cmp = Cmp::kEq;
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Threshold::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
  enum class Kind { kNum, kIdent, kOp, kEnd } kind = Kind::kEnd;
  std::string text;  // identifiers normalised, operators in ASCII spelling
  Rational num;
  std::size_t col = 0;
};

[[noreturn]] void parse_fail(std::size_t col, const std::string& what) {
  throw Error(ErrorCode::kParseError, "threshold column " + std::to_string(col + 1) + ": " + what);
}

std::vector<Token> lex(std::string_view s) {
  struct Alias {
    std::string_view spelling;
    Token::Kind kind;
    std::string_view text;
  };
  static constexpr Alias kAliases[] = {
      {"\xCE\xB4\xE2\x81\xB0", Token::Kind::kIdent, "d0"},  // δ⁰
      {"\xCE\xB4" "0", Token::Kind::kIdent, "d0"},
      {"\xCE\xB4*", Token::Kind::kIdent, "dstar"},
      {"\xE2\x89\xA5", Token::Kind::kOp, ">="},
      {"\xE2\x89\xA4", Token::Kind::kOp, "<="},
      {"\xE2\x88\x92", Token::Kind::kOp, "-"},  // minus sign
      {"\xE2\x8C\x88", Token::Kind::kOp, "lceil"},
      {"\xE2\x8C\x89", Token::Kind::kOp, "rceil"},
      {"\xE2\x8C\x8A", Token::Kind::kOp, "lfloor"},
      {"\xE2\x8C\x8B", Token::Kind::kOp, "rfloor"},
      {"&&", Token::Kind::kOp, "&&"},
      {">=", Token::Kind::kOp, ">="},
      {"<=", Token::Kind::kOp, "<="},
      {"==", Token::Kind::kOp, "=="},
      {"!=", Token::Kind::kOp, "!="},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const Alias& a : kAliases) {
      if (s.substr(i, a.spelling.size()) == a.spelling) {
        out.push_back({a.kind, std::string(a.text), {}, i});
        i += a.spelling.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      const std::size_t start = i;
      std::int64_t num = 0, den = 1;
      bool dot = false, digits = false;
      for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.' && !dot) {
          dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          digits = true;
          if (num > (INT64_MAX - 9) / 10 || (dot && den > INT64_MAX / 10))
            parse_fail(start, "constant too long");
          num = num * 10 + (c - '0');
          if (dot) den *= 10;
        } else {
          break;
        }
      }
      if (!digits) parse_fail(start, "malformed number");
      out.push_back({Token::Kind::kNum, std::string(s.substr(start, i - start)),
                     Rational::make(num, den), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      std::string word(s.substr(start, i - start));
      if (word == "delta0") word = "d0";
      if (word == "deltastar") word = "dstar";
      out.push_back({Token::Kind::kIdent, word, {}, start});
      continue;
    }
    if (std::string_view("+-*/()<>").find(ch) != std::string_view::npos) {
      out.push_back({Token::Kind::kOp, std::string(1, ch), {}, i});
      ++i;
      continue;
    }
    parse_fail(i, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Token::Kind::kEnd, "", {}, s.size()});
  return out;
}

NodePtr make_node(Node::Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  NodePtr parse() {
    NodePtr root = conjunction();
    if (peek().kind != Token::Kind::kEnd) parse_fail(peek().col, "unexpected '" + peek().text + "'");
    return root;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  bool is_op(std::string_view op) const {
    return peek().kind == Token::Kind::kOp && peek().text == op;
  }
  bool is_word(std::string_view w) const {
    return peek().kind == Token::Kind::kIdent && peek().text == w;
  }
  void expect_op(std::string_view op) {
    if (!is_op(op)) parse_fail(peek().col, "expected '" + std::string(op) + "'");
    ++pos_;
  }

  NodePtr conjunction() {
    NodePtr left = comparison();
    while (is_op("&&") || is_word("and")) {
      ++pos_;
      left = make_node(Node::Kind::kAnd, left, comparison());
    }
    return left;
  }

  NodePtr comparison() {
    if (is_word("true")) {
      ++pos_;
      return make_node(Node::Kind::kTrue);
    }
    NodePtr left = expr();
    static constexpr std::pair<std::string_view, Node::Cmp> kOps[] = {
        {"<=", Node::Cmp::kLe}, {">=", Node::Cmp::kGe}, {"<", Node::Cmp::kLt},
        {">", Node::Cmp::kGt},  {"==", Node::Cmp::kEq}, {"!=", Node::Cmp::kNe}};
    for (const auto& [spelling, cmp] : kOps) {
      if (!is_op(spelling)) continue;
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::kCmp;
      n->cmp = cmp;
      n->a = left;
      n->b = expr();
      return n;
    }
    parse_fail(peek().col, "expected a comparison");
  }

  NodePtr expr() {
    NodePtr left = term();
    while (is_op("+") || is_op("-")) {
      const auto kind = is_op("+") ? Node::Kind::kAdd : Node::Kind::kSub;
      ++pos_;
      left = make_node(kind, left, term());
    }
    return left;
  }

  bool starts_primary() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::kNum) return true;
    if (t.kind == Token::Kind::kIdent) return t.text != "and" && t.text != "true";
    return t.kind == Token::Kind::kOp && (t.text == "(" || t.text == "lceil" || t.text == "lfloor");
  }

  NodePtr term() {
    NodePtr left = unary();
    while (true) {
      if (is_op("*")) {
        ++pos_;
        left = make_node(Node::Kind::kMul, left, unary());
      } else if (is_op("/")) {
        ++pos_;
        left = make_node(Node::Kind::kDiv, left, unary());
      } else if (starts_primary()) {
        left = make_node(Node::Kind::kMul, left, unary());
      } else {
        return left;
      }
    }
  }

  NodePtr unary() {
    if (is_op("-")) {
      ++pos_;
      return make_node(Node::Kind::kNeg, unary());
    }
    if (is_op("+")) {
      ++pos_;
      return unary();
    }
    return primary();
  }

  NodePtr primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::kNum) {
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::kConst;
      n->value = t.num;
      return n;
    }
    if (is_op("(")) {
      ++pos_;
      NodePtr inner = expr();
      expect_op(")");
      return inner;
    }
    if (is_op("lceil") || is_op("lfloor")) {
      const bool ceil = is_op("lceil");
      ++pos_;
      NodePtr inner = expr();
      expect_op(ceil ? "rceil" : "rfloor");
      return make_node(ceil ? Node::Kind::kCeil : Node::Kind::kFloor, inner);
    }
    if (t.kind == Token::Kind::kIdent) {
      if (t.text == "ceil" || t.text == "floor") {
        const bool ceil = t.text == "ceil";
        ++pos_;
        expect_op("(");
        NodePtr inner = expr();
        expect_op(")");
        return make_node(ceil ? Node::Kind::kCeil : Node::Kind::kFloor, inner);
      }
      static constexpr std::pair<std::string_view, Node::Var> kVars[] = {
          {"n", Node::Var::kN}, {"k", Node::Var::kK}, {"d0", Node::Var::kD0},
          {"dstar", Node::Var::kDStar}};
      for (const auto& [name, var] : kVars) {
        if (t.text != name) continue;
        ++pos_;
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::kVar;
        n->var = var;
        return n;
      }
      parse_fail(t.col, "unknown name '" + t.text + "'");
    }
    parse_fail(t.col, t.kind == Token::Kind::kEnd ? "unexpected end" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

Rational value_of(const Node& n, const ThresholdVars& v) {
  switch (n.kind) {
    case Node::Kind::kConst: return n.value;
    case Node::Kind::kVar:
      switch (n.var) {
        case Node::Var::kN: return Rational::make(v.n);
        case Node::Var::kK: return Rational::make(v.k);
        case Node::Var::kD0: return Rational::make(v.d0);
        case Node::Var::kDStar: return Rational::make(v.dstar);
      }
      break;
    case Node::Kind::kAdd: return value_of(*n.a, v) + value_of(*n.b, v);
    case Node::Kind::kSub: return value_of(*n.a, v) - value_of(*n.b, v);
    case Node::Kind::kMul: return value_of(*n.a, v) * value_of(*n.b, v);
    case Node::Kind::kDiv: return value_of(*n.a, v) / value_of(*n.b, v);
    case Node::Kind::kNeg: return -value_of(*n.a, v);
    case Node::Kind::kCeil: return Rational::make(value_of(*n.a, v).ceil());
    case Node::Kind::kFloor: return Rational::make(value_of(*n.a, v).floor());
    default: break;
  }
  throw Error(ErrorCode::kBadParameter, "comparison used as a number");
}

bool truth_of(const Node& n, const ThresholdVars& v) {
  switch (n.kind) {
    case Node::Kind::kTrue: return true;
    case Node::Kind::kAnd: return truth_of(*n.a, v) && truth_of(*n.b, v);
    case Node::Kind::kCmp: {
      const auto order = value_of(*n.a, v) <=> value_of(*n.b, v);
      switch (n.cmp) {
        case Node::Cmp::kLt: return order < 0;
        case Node::Cmp::kLe: return order <= 0;
        case Node::Cmp::kGt: return order > 0;
        case Node::Cmp::kGe: return order >= 0;
        case Node::Cmp::kEq: return order == 0;
        case Node::Cmp::kNe: return order != 0;
      }
      break;
    }
    default: break;
  }
  throw Error(ErrorCode::kBadParameter, "number used as a condition");
}

}  // namespace

Threshold::Threshold() : text_("true"), root_(make_node(Node::Kind::kTrue)) {}

Threshold Threshold::parse(std::string_view text) {
  Threshold t;
  const bool blank = std::all_of(text.begin(), text.end(),
                                 [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (blank) return t;
  t.text_ = std::string(text);
  t.root_ = Parser(lex(text)).parse();
  return t;
}

bool Threshold::holds(const ThresholdVars& vars) const { return truth_of(*root_, vars); }

// ---------------------------------------------------------------------------
// Properties

namespace {

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  if (s.empty()) throw Error(ErrorCode::kParseError, std::string(what) + ": missing number");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1'000'000)
      throw Error(ErrorCode::kParseError, std::string(what) + ": bad number '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

std::string join(const std::vector<std::size_t>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string vertex_list(std::span<const Vertex> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

}  // namespace

PropertySpec PropertySpec::parse(std::string_view text) {
  PropertySpec p;
  std::string_view name = text;
  std::string_view arg;
  const auto open = text.find('(');
  if (open != std::string_view::npos) {
    if (text.back() != ')')
      throw Error(ErrorCode::kParseError, "property: missing ')' in '" + std::string(text) + "'");
    name = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
  }
  auto no_arg = [&] {
    if (open != std::string_view::npos)
      throw Error(ErrorCode::kParseError, "property " + std::string(name) + " takes no argument");
  };
  if (name == "hamiltonian") {
    no_arg();
    p.kind = PropertyKind::kHamiltonian;
  } else if (name == "pancyclic") {
    no_arg();
    p.kind = PropertyKind::kPancyclic;
  } else if (name == "shc") {
    no_arg();
    p.kind = PropertyKind::kStronglyHamConnected;
  } else if (name == "k-ordered" || name == "k-linked") {
    p.kind = name == "k-ordered" ? PropertyKind::kKOrdered : PropertyKind::kKLinked;
    p.k = parse_count(arg, name);
    if (p.k == 0) throw Error(ErrorCode::kParseError, std::string(name) + ": k must be positive");
  } else if (name == "cycle-factor") {
    p.kind = PropertyKind::kCycleFactor;
    if (arg.empty() || arg == "all") {
      p.policy.kind = CycleFactorPolicy::Kind::kAll;
    } else if (arg.substr(0, 2) == "t=") {
      p.policy.kind = CycleFactorPolicy::Kind::kParts;
      p.policy.parts = parse_count(arg.substr(2), "cycle-factor t");
      if (p.policy.parts == 0) throw Error(ErrorCode::kParseError, "cycle-factor: t must be positive");
    } else {
      p.policy.kind = CycleFactorPolicy::Kind::kExplicit;
      std::size_t start = 0;
      while (start <= arg.size()) {
        const auto plus = arg.find('+', start);
        const auto piece = arg.substr(start, plus == std::string_view::npos ? arg.npos : plus - start);
        p.policy.lengths.push_back(parse_count(piece, "cycle-factor length"));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
      }
      std::sort(p.policy.lengths.rbegin(), p.policy.lengths.rend());
    }
  } else {
    throw Error(ErrorCode::kParseError, "unknown property '" + std::string(text) + "'");
  }
  return p;
}

std::string PropertySpec::text() const {
  switch (kind) {
    case PropertyKind::kHamiltonian: return "hamiltonian";
    case PropertyKind::kPancyclic: return "pancyclic";
    case PropertyKind::kStronglyHamConnected: return "shc";
    case PropertyKind::kKOrdered: return "k-ordered(" + std::to_string(k) + ")";
    case PropertyKind::kKLinked: return "k-linked(" + std::to_string(k) + ")";
    case PropertyKind::kCycleFactor:
      switch (policy.kind) {
        case CycleFactorPolicy::Kind::kAll: return "cycle-factor(all)";
        case CycleFactorPolicy::Kind::kParts:
          return "cycle-factor(t=" + std::to_string(policy.parts) + ")";
        case CycleFactorPolicy::Kind::kExplicit: return "cycle-factor(" + join(policy.lengths, "+") + ")";
      }
  }
  return "?";
}

std::vector<std::vector<std::size_t>> policy_partitions(const CycleFactorPolicy& policy,
                                                        std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (policy.kind == CycleFactorPolicy::Kind::kExplicit) {
    if (std::accumulate(policy.lengths.begin(), policy.lengths.end(), std::size_t{0}) != n)
      throw Error(ErrorCode::kBadParameter,
                  "cycle lengths " + join(policy.lengths, "+") + " do not sum to n=" + std::to_string(n));
    out.push_back(policy.lengths);
    return out;
  }
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t cap) {
    if (rest == 0) {
      if (policy.kind == CycleFactorPolicy::Kind::kAll || current.size() == policy.parts)
        out.push_back(current);
      return;
    }
    if (policy.kind == CycleFactorPolicy::Kind::kParts && current.size() >= policy.parts) return;
    for (std::size_t part = std::min(rest, cap); part >= 3; --part) {
      if (rest - part != 0 && rest - part < 3) continue;
      current.push_back(part);
      rec(rest - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

PropertyVerdict evaluate_property(const OrientedGraph& g, const PropertySpec& property,
                                  const Budget& budget) {
  const std::size_t n = g.order();
  switch (property.kind) {
    case PropertyKind::kHamiltonian: {
      const auto r = hamiltonian_cycle(g, budget);
      return {r.outcome, r.outcome == Outcome::kFalse ? "no Hamiltonian cycle" : ""};
    }
    case PropertyKind::kPancyclic: {
      bool budget_hit = false;
      for (std::size_t len = 3; len <= n; ++len) {
        const auto r = cycle_of_length(g, len, budget);
        if (r.outcome == Outcome::kFalse) return {Outcome::kFalse, "no cycle of length " + std::to_string(len)};
        budget_hit |= r.outcome == Outcome::kBudget;
      }
      return {budget_hit ? Outcome::kBudget : Outcome::kTrue, ""};
    }
    case PropertyKind::kStronglyHamConnected: {
      const auto r = strongly_hamiltonian_connected(g, budget);
      std::string note;
      if (r.outcome == Outcome::kFalse && r.failing_pair)
        note = "no Hamiltonian path " + std::to_string(r.failing_pair->first) + "->" +
               std::to_string(r.failing_pair->second);
      return {r.outcome, note};
    }
    case PropertyKind::kKOrdered: {
      const std::size_t k = property.k;
      if (n < k || n == 0) return {Outcome::kTrue, "vacuous"};
      const auto ham = hamiltonian_cycle(g, budget);
      if (ham.outcome == Outcome::kFalse) return {Outcome::kFalse, "no Hamiltonian cycle"};
      bool budget_hit = ham.outcome == Outcome::kBudget;
      // Rotations of a sequence are equivalent, so the first entry is its minimum.
      std::vector<Vertex> seq(k);
      std::vector<bool> used(n, false);
      std::optional<PropertyVerdict> refuted;
      std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (refuted) return;
        if (pos == k) {
          const auto r = k_ordered_hamiltonian(g, seq, budget);
          if (r.outcome == Outcome::kFalse)
            refuted = PropertyVerdict{Outcome::kFalse, "sequence " + vertex_list(seq)};
          budget_hit |= r.outcome == Outcome::kBudget;
          return;
        }
        for (Vertex v = pos == 0 ? 0 : seq[0] + 1; v < n; ++v) {
          if (used[v]) continue;
          used[v] = true;
          seq[pos] = v;
          rec(pos + 1);
          used[v] = false;
        }
      };
      rec(0);
      if (refuted) return *refuted;
      return {budget_hit ? Outcome::kBudget : Outcome::kTrue, ""};
    }
    case PropertyKind::kKLinked: {
      const auto r = is_k_linked(g, property.k, false, budget);
      std::string note;
      if (r.outcome == Outcome::kFalse && r.failing_pairs) {
        note = "pairs";
        for (const auto& [x, y] : *r.failing_pairs)
          note += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
      }
      return {r.outcome, note};
    }
    case PropertyKind::kCycleFactor: {
      const auto parts = policy_partitions(property.policy, n);
      if (parts.empty()) return {Outcome::kTrue, "no length partition"};
      bool budget_hit = false;
      for (const auto& lengths : parts) {
        const auto r = cycle_factor(g, LengthPartition::make(lengths, n), budget);
        if (r.outcome == Outcome::kFalse)
          return {Outcome::kFalse, "no cycle factor " + join(lengths, "+")};
        budget_hit |= r.outcome == Outcome::kBudget;
      }
      return {budget_hit ? Outcome::kBudget : Outcome::kTrue, ""};
    }
  }
  return {Outcome::kTrue, ""};
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<const SweepRecord*> SweepReport::failure_records() const {
  std::vector<const SweepRecord*> out;
  for (const auto& r : records)
    if (r.verdict == Outcome::kFalse) out.push_back(&r);
  return out;
}

SweepReport sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = options.n;
  if (options.mode == SweepMode::kExhaustive && n > kMaxExhaustiveSweepOrder)
    throw Error(ErrorCode::kTooLarge, "exhaustive sweeps stop at n=" +
                                          std::to_string(kMaxExhaustiveSweepOrder));
  if (options.mode == SweepMode::kSampled &&
      (options.samples == 0 || !(options.density >= 0.0 && options.density <= 1.0)))
    throw Error(ErrorCode::kBadParameter, "sampled sweeps need samples > 0 and density in [0, 1]");
  if (options.property.kind == PropertyKind::kCycleFactor &&
      options.property.policy.kind == CycleFactorPolicy::Kind::kExplicit)
    policy_partitions(options.property.policy, n);  // validates the sum

  SweepReport report;
  report.n = n;
  report.property = options.property.text();
  report.threshold = options.threshold.text();
  report.mode = options.mode == SweepMode::kExhaustive ? "exhaustive" : "sampled";
  report.seed = options.seed;
  report.budget_ms = options.budget.time_ms;

  const auto evaluate = options.evaluator
                            ? options.evaluator
                            : std::function<PropertyVerdict(const OrientedGraph&)>(
                                  [&](const OrientedGraph& g) {
                                    return evaluate_property(g, options.property, options.budget);
                                  });
  const std::int64_t k = options.k >= 0 ? options.k : static_cast<std::int64_t>(options.property.k);
  auto elapsed_ms = [&] {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
  };
  auto out_of_time = [&] { return options.total_time_ms != 0 && elapsed_ms() > options.total_time_ms; };

  auto visit = [&](const OrientedGraph& g, std::string id) {
    ++report.examined;
    const DegreeProfile dp = degree_profile(g);
    const ThresholdVars vars{static_cast<std::int64_t>(n), k,
                             static_cast<std::int64_t>(dp.min_semidegree),
                             static_cast<std::int64_t>(dp.star)};
    if (!options.threshold.holds(vars)) return;
    ++report.accepted;
    const PropertyVerdict verdict = evaluate(g);
    SweepRecord rec{std::move(id), dp.min_semidegree, dp.star, verdict.outcome, verdict.note, ""};
    if (verdict.outcome != Outcome::kTrue) rec.graph = serialize(g);
    if (verdict.outcome == Outcome::kFalse) {
      ++report.failures;
      report.max_delta0_failure = std::max(report.max_delta0_failure.value_or(0), dp.min_semidegree);
    }
    if (verdict.outcome == Outcome::kBudget) {
      ++report.budget_hits;
      report.complete = false;
    }
    report.records.push_back(std::move(rec));
  };

  if (options.mode == SweepMode::kExhaustive) {
    for (const OrientedGraph& g : enumerate_unlabelled(n)) {
      visit(g, canonical_form(g).code.hex());
      if (out_of_time()) {
        report.complete = false;
        break;
      }
    }
  } else {
    const std::size_t max_attempts = options.max_attempts ? options.max_attempts : 1000 * options.samples;
    Rng rng(options.seed);
    const int width = static_cast<int>(std::to_string(max_attempts).size());
    for (std::size_t draw = 0; draw < max_attempts && report.accepted < options.samples; ++draw) {
      const OrientedGraph g = random_oriented(n, options.density, rng.next());
      std::string id;
      if (n <= kMaxCanonicalOrder) {
        id = canonical_form(g).code.hex();
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "s%0*zu", width, draw);
        id = buf;
      }
      visit(g, std::move(id));
      if (out_of_time()) {
        report.complete = false;
        break;
      }
    }
    report.acceptance_rate = report.examined == 0 ? 0.0
                                                  : static_cast<double>(report.accepted) /
                                                        static_cast<double>(report.examined);
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return a.id < b.id; });
  report.runtime_ms = elapsed_ms();
  return report;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_report(const SweepReport& report, ReportFormat format,
                          std::string_view counterexample_dir) {
  if (format == ReportFormat::kCsv) {
    std::string out = "id,delta0,deltastar,verdict,note,counterexample\n";
    for (const auto& r : report.records) {
      std::string file;
      if (r.verdict == Outcome::kFalse) file = std::string(counterexample_dir) + "/" + r.id + ".json";
      out += csv_field(r.id) + "," + std::to_string(r.delta0) + "," + std::to_string(r.delta_star) +
             "," + to_string(r.verdict) + "," + csv_field(r.note) + "," + csv_field(file) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["property"] = report.property;
  doc["threshold"] = report.threshold;
  doc["mode"] = report.mode;
  doc["seed"] = report.seed;
  doc["budget_ms"] = report.budget_ms;
  doc["complete"] = report.complete;
  nlohmann::ordered_json summary;
  summary["examined"] = report.examined;
  summary["accepted"] = report.accepted;
  summary["failures"] = report.failures;
  summary["budget_hits"] = report.budget_hits;
  summary["max_delta0_failure"] = report.max_delta0_failure
                                      ? nlohmann::ordered_json(*report.max_delta0_failure)
                                      : nlohmann::ordered_json(nullptr);
  summary["acceptance_rate"] = report.acceptance_rate
                                   ? nlohmann::ordered_json(*report.acceptance_rate)
                                   : nlohmann::ordered_json(nullptr);
  doc["summary"] = summary;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json rec;
    rec["id"] = r.id;
    rec["delta0"] = r.delta0;
    rec["deltastar"] = r.delta_star;
    rec["verdict"] = to_string(r.verdict);
    rec["note"] = r.note;
    rec["graph"] = r.graph.empty() ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json::parse(r.graph);
    doc["records"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

void write_counterexamples(const SweepReport& report, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir + ": " + ec.message());
  for (const SweepRecord* r : report.failure_records())
    write_text_file((std::filesystem::path(dir) / (r->id + ".json")).string(), r->graph + "\n");
}

}  // namespace semideg
