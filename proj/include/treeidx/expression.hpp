// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "treeidx/enumerate.hpp"
#include "treeidx/error.hpp"
#include "treeidx/indices.hpp"
#include "treeidx/numeric.hpp"
#include "treeidx/sexpr.hpp"
#include "treeidx/structure.hpp"
#include "treeidx/tree.hpp"

namespace treeidx {

// Invariant expressions over a single tree, written in prefix syntax:
//
//   (>= irr (- M1 (/ (+ (* 2 m n n (- Delta 1)) (- delta 1)) (+ n Delta))))
//
// Evaluation is exact rational arithmetic. (d i) is the i-th entry (1-based)
// of the degree sequence under the selected reading; out-of-range access is
// an error, as is division by zero.

enum class Var { N, M, MaxDegree, MinDegree, Irr, IrrTotal, M1, M2, F, Sigma, Lambda, Graphic };

inline constexpr std::array<std::pair<Var, std::string_view>, 12> kVarNames{{
    {Var::N, "n"},
    {Var::M, "m"},
    {Var::MaxDegree, "Delta"},
    {Var::MinDegree, "delta"},
    {Var::Irr, "irr"},
    {Var::IrrTotal, "irr_T"},
    {Var::M1, "M1"},
    {Var::M2, "M2"},
    {Var::F, "F"},
    {Var::Sigma, "sigma"},
    {Var::Lambda, "lambda"},
    {Var::Graphic, "graphic"},
}};

inline std::optional<Var> var_from_name(std::string_view name) {
  for (const auto& [v, s] : kVarNames)
    if (s == name) return v;
  return std::nullopt;
}

inline std::string_view var_name(Var v) {
  for (const auto& [var, s] : kVarNames)
    if (var == v) return s;
  return "?";
}

enum class Op { Add, Sub, Mul, Div, Pow, Abs, Binom, Max, Min, Mod };

inline constexpr std::array<std::pair<Op, std::string_view>, 10> kOpNames{{
    {Op::Add, "+"},
    {Op::Sub, "-"},
    {Op::Mul, "*"},
    {Op::Div, "/"},
    {Op::Pow, "^"},
    {Op::Abs, "abs"},
    {Op::Binom, "binom"},
    {Op::Max, "max"},
    {Op::Min, "min"},
    {Op::Mod, "mod"},
}};

/// Degree sequence reading: non-decreasing puts d_1 = delta, d_n = Delta.
enum class Reading { NonDecreasing, NonIncreasing };

inline std::string_view to_string(Reading r) {
  return r == Reading::NonDecreasing ? "nondecreasing" : "nonincreasing";
}

inline Reading parse_reading(std::string_view s) {
  if (s == "nondecreasing") return Reading::NonDecreasing;
  if (s == "nonincreasing") return Reading::NonIncreasing;
  throw Error(Errc::ParseError, "unknown reading '" + std::string(s) + "'");
}

/// Everything an expression or predicate may ask about one tree, computed once.
class TreeFacts {
 public:
  explicit TreeFacts(const Tree& t)
      : tree_(&t), degrees_(degree_sequence(t)), indices_(compute_indices(t)), graphic_(degrees_.is_graphic()) {}

  const Tree& tree() const noexcept { return *tree_; }
  std::size_t n() const noexcept { return tree_->order(); }
  std::size_t m() const noexcept { return tree_->edge_count(); }
  const DegreeSequence& degrees() const noexcept { return degrees_; }
  const IndexValues& indices() const noexcept { return indices_; }
  bool graphic() const noexcept { return graphic_; }

 private:
  const Tree* tree_;
  DegreeSequence degrees_;
  IndexValues indices_;
  bool graphic_;
};

class Expression;
class Predicate;

namespace ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Literal {
  Integer value;
};
struct VarRef {
  Var var;
};
struct Bound {
  std::string name;
};
struct DegreeAt {
  NodePtr index;
};
struct Apply {
  Op op;
  std::vector<NodePtr> args;
};
struct Sum {
  std::string index;
  NodePtr lo, hi, body;
};
/// Sum over edges with du, dv bound to the endpoint degrees.
struct EdgeSum {
  NodePtr body;
};

struct Node {
  std::variant<Literal, VarRef, Bound, DegreeAt, Apply, Sum, EdgeSum> v;
};

}  // namespace ast

enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

inline constexpr std::array<std::pair<Rel, std::string_view>, 6> kRelNames{{
    {Rel::Eq, "="},
    {Rel::Ne, "!="},
    {Rel::Lt, "<"},
    {Rel::Le, "<="},
    {Rel::Gt, ">"},
    {Rel::Ge, ">="},
}};

inline std::optional<Rel> rel_from_name(std::string_view s) {
  for (const auto& [r, name] : kRelNames)
    if (name == s) return r;
  return std::nullopt;
}

inline std::string_view rel_name(Rel r) {
  for (const auto& [rel, name] : kRelNames)
    if (rel == r) return name;
  return "?";
}

inline bool compare(const Rational& a, Rel r, const Rational& b) {
  switch (r) {
    case Rel::Eq: return a == b;
    case Rel::Ne: return a != b;
    case Rel::Lt: return a < b;
    case Rel::Le: return a <= b;
    case Rel::Gt: return a > b;
    case Rel::Ge: return a >= b;
  }
  return false;
}

namespace detail {

struct Binding {
  std::string_view name;
  Rational value;
};

class Scope {
 public:
  explicit Scope(const TreeFacts& facts, Reading reading) : facts_(facts), reading_(reading) {}

  const TreeFacts& facts() const noexcept { return facts_; }
  Reading reading() const noexcept { return reading_; }

  void push(std::string_view name, Rational value) { bindings_.push_back({name, std::move(value)}); }
  void pop() { bindings_.pop_back(); }
  void set_top(Rational value) { bindings_.back().value = std::move(value); }
  /// depth 0 is the most recent binding.
  void set_at(std::size_t depth, Rational value) { bindings_[bindings_.size() - 1 - depth].value = std::move(value); }

  const Rational& lookup(std::string_view name) const {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
      if (it->name == name) return it->value;
    throw Error(Errc::EvaluationError, "unbound name '" + std::string(name) + "'");
  }

 private:
  const TreeFacts& facts_;
  Reading reading_;
  std::vector<Binding> bindings_;
};

inline Integer require_integer(const Rational& r, std::string_view what) {
  if (!is_integral(r))
    throw Error(Errc::EvaluationError, std::string(what) + " must be an integer, got " + to_decimal(r));
  return boost::multiprecision::numerator(r);
}

constexpr long kMaxRangeLength = 1'000'000;
constexpr long kMaxExponent = 4096;

inline long small_integer(const Integer& v, std::string_view what) {
  if (v > kMaxRangeLength * 4L || v < -kMaxRangeLength * 4L)
    throw Error(Errc::EvaluationError, std::string(what) + " out of supported range");
  return v.convert_to<long>();
}

inline Rational eval(const ast::Node& node, Scope& scope);

inline Rational eval_var(Var v, const TreeFacts& f) {
  switch (v) {
    case Var::N: return Rational(f.n());
    case Var::M: return Rational(f.m());
    case Var::MaxDegree: return Rational(f.degrees().max());
    case Var::MinDegree: return Rational(f.degrees().min());
    case Var::Irr: return Rational(f.indices().irr);
    case Var::IrrTotal: return Rational(f.indices().irr_total);
    case Var::M1: return Rational(f.indices().m1);
    case Var::M2: return Rational(f.indices().m2);
    case Var::F: return Rational(f.indices().forgotten);
    case Var::Sigma: return Rational(f.indices().sigma);
    case Var::Lambda: return Rational(Integer(f.degrees().max() + f.degrees().min()), Integer(2));
    case Var::Graphic: return Rational(f.graphic() ? 1 : 0);
  }
  return Rational(0);
}

inline Rational eval_apply(const ast::Apply& a, Scope& scope) {
  std::vector<Rational> args;
  args.reserve(a.args.size());
  for (const auto& arg : a.args) args.push_back(eval(*arg, scope));
  switch (a.op) {
    case Op::Add: {
      Rational s = 0;
      for (const auto& x : args) s += x;
      return s;
    }
    case Op::Sub: {
      if (args.size() == 1) return -args[0];
      Rational s = args[0];
      for (std::size_t i = 1; i < args.size(); ++i) s -= args[i];
      return s;
    }
    case Op::Mul: {
      Rational p = 1;
      for (const auto& x : args) p *= x;
      return p;
    }
    case Op::Div:
      if (args[1] == 0) throw Error(Errc::EvaluationError, "division by zero");
      return args[0] / args[1];
    case Op::Pow: {
      const long e = small_integer(require_integer(args[1], "exponent"), "exponent");
      if (e > kMaxExponent || e < -kMaxExponent) throw Error(Errc::EvaluationError, "exponent too large");
      if (e < 0 && args[0] == 0) throw Error(Errc::EvaluationError, "zero raised to a negative power");
      Rational base = e < 0 ? Rational(1) / args[0] : args[0];
      Rational result = 1;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) result *= base;
      return result;
    }
    case Op::Abs: return args[0] < 0 ? Rational(-args[0]) : args[0];
    case Op::Binom: {
      const Integer top = require_integer(args[0], "binom argument");
      const Integer k = require_integer(args[1], "binom argument");
      if (top < 0) throw Error(Errc::EvaluationError, "binom of a negative integer");
      if (k < 0 || k > top) return Rational(0);
      const long kk = small_integer(std::min<Integer>(k, top - k), "binom argument");
      Integer c = 1;
      for (long i = 0; i < kk; ++i) c = c * (top - i) / (i + 1);
      return Rational(c);
    }
    case Op::Max: return *std::max_element(args.begin(), args.end());
    case Op::Min: return *std::min_element(args.begin(), args.end());
    case Op::Mod: {
      const Integer a_int = require_integer(args[0], "mod argument");
      const Integer b_int = require_integer(args[1], "mod argument");
      if (b_int == 0) throw Error(Errc::EvaluationError, "mod by zero");
      Integer r = a_int % b_int;
      if (r < 0) r += b_int < 0 ? Integer(-b_int) : b_int;
      return Rational(r);
    }
  }
  return Rational(0);
}

inline Rational eval(const ast::Node& node, Scope& scope) {
  struct Visitor {
    Scope& scope;
    Rational operator()(const ast::Literal& l) const { return Rational(l.value); }
    Rational operator()(const ast::VarRef& v) const { return eval_var(v.var, scope.facts()); }
    Rational operator()(const ast::Bound& b) const { return scope.lookup(b.name); }
    Rational operator()(const ast::DegreeAt& d) const {
      const Integer i = require_integer(eval(*d.index, scope), "degree index");
      const auto values = scope.facts().degrees().values();
      if (i < 1 || i > Integer(values.size()))
        throw Error(Errc::EvaluationError,
                    "degree index d[" + i.str() + "] outside [1, " + std::to_string(values.size()) + "]");
      const auto pos = i.convert_to<std::size_t>() - 1;
      return Rational(scope.reading() == Reading::NonDecreasing ? values[pos] : values[values.size() - 1 - pos]);
    }
    Rational operator()(const ast::Apply& a) const { return eval_apply(a, scope); }
    Rational operator()(const ast::Sum& s) const {
      const long lo = small_integer(require_integer(eval(*s.lo, scope), "sum bound"), "sum bound");
      const long hi = small_integer(require_integer(eval(*s.hi, scope), "sum bound"), "sum bound");
      if (hi - lo > kMaxRangeLength) throw Error(Errc::EvaluationError, "sum range too long");
      Rational total = 0;
      scope.push(s.index, Rational(0));
      for (long i = lo; i <= hi; ++i) {
        scope.set_top(Rational(i));
        total += eval(*s.body, scope);
      }
      scope.pop();
      return total;
    }
    Rational operator()(const ast::EdgeSum& e) const {
      const Tree& t = scope.facts().tree();
      Rational total = 0;
      scope.push("du", Rational(0));
      scope.push("dv", Rational(0));
      for (const auto& [u, v] : t.edges()) {
        scope.set_at(1, Rational(t.degree(u)));
        scope.set_at(0, Rational(t.degree(v)));
        total += eval(*e.body, scope);
      }
      scope.pop();
      scope.pop();
      return total;
    }
  };
  return std::visit(Visitor{scope}, node.v);
}

}  // namespace detail

/// Immutable, cheaply copyable expression handle.
class Expression {
 public:
  Expression() : root_(std::make_shared<ast::Node>(ast::Node{ast::Literal{0}})) {}
  explicit Expression(ast::NodePtr root) : root_(std::move(root)) {}

  const ast::Node& root() const noexcept { return *root_; }

  Rational evaluate(const TreeFacts& facts, Reading reading = Reading::NonDecreasing) const {
    detail::Scope scope(facts, reading);
    return detail::eval(*root_, scope);
  }

  Rational evaluate_in(detail::Scope& scope) const { return detail::eval(*root_, scope); }

 private:
  ast::NodePtr root_;
};

/// Structural predicates usable in scopes; all are isomorphism-invariant.
enum class BuiltinPredicate {
  Star,
  Path,
  Caterpillar,
  /// (support-other lo hi): some support vertex v with lo < deg v < hi and
  /// some maximum-degree vertex other than v.
  SupportOther,
  /// (strong-support-other k): some vertex with >= 2 pendants and degree >= k,
  /// and some maximum-degree vertex other than it.
  StrongSupportOther,
};

namespace past {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Always {};
struct Compare {
  Rel rel;
  Expression lhs, rhs;
};
struct And {
  std::vector<NodePtr> parts;
};
struct Or {
  std::vector<NodePtr> parts;
};
struct Not {
  NodePtr inner;
};
struct Forall {
  std::string index;
  Expression lo, hi;
  NodePtr body;
};
struct Builtin {
  BuiltinPredicate kind;
  std::vector<Integer> args;
};

struct Node {
  std::variant<Always, Compare, And, Or, Not, Forall, Builtin> v;
};

}  // namespace past

namespace detail {

inline bool other_max_degree_vertex(const Tree& t, Vertex v, std::size_t max_deg) {
  for (Vertex w = 0; w < t.order(); ++w)
    if (w != v && t.degree(w) == max_deg) return true;
  return false;
}

inline bool eval_builtin(const past::Builtin& b, const TreeFacts& f) {
  const Tree& t = f.tree();
  switch (b.kind) {
    case BuiltinPredicate::Star: return is_star(t);
    case BuiltinPredicate::Path: return is_path(t);
    case BuiltinPredicate::Caterpillar: return is_caterpillar(t);
    case BuiltinPredicate::SupportOther: {
      const std::size_t max_deg = f.degrees().max();
      for (const auto& s : support_vertices(t)) {
        const Integer d = t.degree(s.vertex);
        if (d > b.args[0] && d < b.args[1] && other_max_degree_vertex(t, s.vertex, max_deg)) return true;
      }
      return false;
    }
    case BuiltinPredicate::StrongSupportOther: {
      const std::size_t max_deg = f.degrees().max();
      for (const auto& s : support_vertices(t)) {
        if (!s.strong()) continue;
        const Integer d = t.degree(s.vertex);
        if (d >= b.args[0] && other_max_degree_vertex(t, s.vertex, max_deg)) return true;
      }
      return false;
    }
  }
  return false;
}

inline bool eval_pred(const past::Node& node, Scope& scope) {
  struct Visitor {
    Scope& scope;
    bool operator()(const past::Always&) const { return true; }
    bool operator()(const past::Compare& c) const {
      return compare(c.lhs.evaluate_in(scope), c.rel, c.rhs.evaluate_in(scope));
    }
    bool operator()(const past::And& a) const {
      for (const auto& p : a.parts)
        if (!eval_pred(*p, scope)) return false;
      return true;
    }
    bool operator()(const past::Or& o) const {
      for (const auto& p : o.parts)
        if (eval_pred(*p, scope)) return true;
      return false;
    }
    bool operator()(const past::Not& n) const { return !eval_pred(*n.inner, scope); }
    bool operator()(const past::Forall& f) const {
      const long lo = small_integer(require_integer(f.lo.evaluate_in(scope), "forall bound"), "forall bound");
      const long hi = small_integer(require_integer(f.hi.evaluate_in(scope), "forall bound"), "forall bound");
      if (hi - lo > kMaxRangeLength) throw Error(Errc::EvaluationError, "forall range too long");
      scope.push(f.index, Rational(0));
      bool ok = true;
      for (long i = lo; i <= hi && ok; ++i) {
        scope.set_top(Rational(i));
        ok = eval_pred(*f.body, scope);
      }
      scope.pop();
      return ok;
    }
    bool operator()(const past::Builtin& b) const { return eval_builtin(b, scope.facts()); }
  };
  return std::visit(Visitor{scope}, node.v);
}

}  // namespace detail

class Predicate {
 public:
  Predicate() : root_(std::make_shared<past::Node>(past::Node{past::Always{}})) {}
  explicit Predicate(past::NodePtr root) : root_(std::move(root)) {}

  const past::Node& root() const noexcept { return *root_; }

  bool evaluate(const TreeFacts& facts, Reading reading = Reading::NonDecreasing) const {
    detail::Scope scope(facts, reading);
    return detail::eval_pred(*root_, scope);
  }

 private:
  past::NodePtr root_;
};

// ---------------------------------------------------------------------------
// Parsing and printing.

namespace detail {

inline bool looks_numeric(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' && s.size() > 1) ? 1 : 0;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline bool reserved_name(std::string_view s) {
  return var_from_name(s).has_value() || s == "du" || s == "dv";
}

class ExprParser {
 public:
  ast::NodePtr parse(const SExpr& e) {
    if (e.is_string()) parse_fail(e.line, "unexpected string in expression");
    if (e.is_atom()) return atom(e);
    if (e.items.empty()) parse_fail(e.line, "empty list in expression");
    const auto head = e.head();
    if (head.empty()) parse_fail(e.line, "expression list must start with an operator");
    auto node = [](auto v) { return std::make_shared<const ast::Node>(ast::Node{std::move(v)}); };
    const std::size_t argc = e.items.size() - 1;

    if (head == "d") {
      if (argc != 1) parse_fail(e.line, "(d i) takes one argument");
      return node(ast::DegreeAt{parse(e.items[1])});
    }
    if (head == "sum") {
      if (argc != 4 || !e.items[1].is_atom()) parse_fail(e.line, "expected (sum i lo hi body)");
      const std::string& index = e.items[1].text;
      check_binder(index, e.line);
      auto lo = parse(e.items[2]);
      auto hi = parse(e.items[3]);
      bound_.push_back(index);
      auto body = parse(e.items[4]);
      bound_.pop_back();
      return node(ast::Sum{index, lo, hi, body});
    }
    if (head == "sum-edges") {
      if (argc != 1) parse_fail(e.line, "expected (sum-edges body)");
      bound_.push_back("du");
      bound_.push_back("dv");
      auto body = parse(e.items[1]);
      bound_.pop_back();
      bound_.pop_back();
      return node(ast::EdgeSum{body});
    }
    for (const auto& [op, name] : kOpNames) {
      if (head != name) continue;
      const bool ok = [&] {
        switch (op) {
          case Op::Add:
          case Op::Mul:
          case Op::Sub:
          case Op::Max:
          case Op::Min: return argc >= 1;
          case Op::Div:
          case Op::Pow:
          case Op::Binom:
          case Op::Mod: return argc == 2;
          case Op::Abs: return argc == 1;
        }
        return false;
      }();
      if (!ok) parse_fail(e.line, "wrong number of arguments for '" + std::string(name) + "'");
      ast::Apply apply{op, {}};
      for (std::size_t i = 1; i < e.items.size(); ++i) apply.args.push_back(parse(e.items[i]));
      return node(std::move(apply));
    }
    parse_fail(e.line, "unknown operator '" + std::string(head) + "'");
  }

  std::vector<std::string> bound_;

  void check_binder(const std::string& name, std::size_t line) const {
    if (reserved_name(name) || looks_numeric(name) || name == "d")
      parse_fail(line, "'" + name + "' cannot be used as an index name");
  }

 private:
  ast::NodePtr atom(const SExpr& e) {
    auto node = [](auto v) { return std::make_shared<const ast::Node>(ast::Node{std::move(v)}); };
    if (looks_numeric(e.text)) return node(ast::Literal{Integer(e.text)});
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == e.text) return node(ast::Bound{e.text});
    if (auto v = var_from_name(e.text)) return node(ast::VarRef{*v});
    parse_fail(e.line, "unknown symbol '" + e.text + "'");
  }
};

class PredParser {
 public:
  past::NodePtr parse(const SExpr& e) {
    auto node = [](auto v) { return std::make_shared<const past::Node>(past::Node{std::move(v)}); };
    if (e.is_atom()) {
      if (e.text == "all") return node(past::Always{});
      if (e.text == "star") return node(past::Builtin{BuiltinPredicate::Star, {}});
      if (e.text == "path") return node(past::Builtin{BuiltinPredicate::Path, {}});
      if (e.text == "caterpillar") return node(past::Builtin{BuiltinPredicate::Caterpillar, {}});
      parse_fail(e.line, "unknown predicate '" + e.text + "'");
    }
    if (!e.is_list() || e.head().empty()) parse_fail(e.line, "malformed predicate");
    const auto head = e.head();
    const std::size_t argc = e.items.size() - 1;
    if (auto rel = rel_from_name(head)) {
      if (argc != 2) parse_fail(e.line, "comparison takes two expressions");
      return node(past::Compare{*rel, Expression(exprs_.parse(e.items[1])), Expression(exprs_.parse(e.items[2]))});
    }
    if (head == "and" || head == "or") {
      if (argc < 1) parse_fail(e.line, "'" + std::string(head) + "' needs at least one operand");
      std::vector<past::NodePtr> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(parse(e.items[i]));
      if (head == "and") return node(past::And{std::move(parts)});
      return node(past::Or{std::move(parts)});
    }
    if (head == "not") {
      if (argc != 1) parse_fail(e.line, "'not' takes one operand");
      return node(past::Not{parse(e.items[1])});
    }
    if (head == "forall") {
      if (argc != 4 || !e.items[1].is_atom()) parse_fail(e.line, "expected (forall i lo hi predicate)");
      const std::string& index = e.items[1].text;
      exprs_.check_binder(index, e.line);
      Expression lo(exprs_.parse(e.items[2]));
      Expression hi(exprs_.parse(e.items[3]));
      exprs_.bound_.push_back(index);
      auto body = parse(e.items[4]);
      exprs_.bound_.pop_back();
      return node(past::Forall{index, lo, hi, body});
    }
    auto integer_args = [&](std::size_t expected) {
      if (argc != expected) parse_fail(e.line, "'" + std::string(head) + "' takes " + std::to_string(expected) +
                                                   " integer arguments");
      std::vector<Integer> args;
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        if (!e.items[i].is_atom() || !looks_numeric(e.items[i].text))
          parse_fail(e.line, "'" + std::string(head) + "' arguments must be integer literals");
        args.emplace_back(e.items[i].text);
      }
      return args;
    };
    if (head == "support-other") return node(past::Builtin{BuiltinPredicate::SupportOther, integer_args(2)});
    if (head == "strong-support-other")
      return node(past::Builtin{BuiltinPredicate::StrongSupportOther, integer_args(1)});
    parse_fail(e.line, "unknown predicate '" + std::string(head) + "'");
  }

 private:
  ExprParser exprs_;
};

inline const SExpr& single(const std::vector<SExpr>& all, std::string_view what) {
  if (all.size() != 1)
    throw Error(Errc::ParseError, "expected exactly one " + std::string(what) + ", got " + std::to_string(all.size()));
  return all.front();
}

}  // namespace detail

inline Expression parse_expression(const SExpr& e) { return Expression(detail::ExprParser{}.parse(e)); }
inline Expression parse_expression(std::string_view text) {
  return parse_expression(detail::single(read_sexprs(text), "expression"));
}
inline Predicate parse_predicate(const SExpr& e) { return Predicate(detail::PredParser{}.parse(e)); }
inline Predicate parse_predicate(std::string_view text) {
  return parse_predicate(detail::single(read_sexprs(text), "predicate"));
}

namespace detail {

inline std::string print(const ast::Node& node) {
  struct Visitor {
    std::string operator()(const ast::Literal& l) const { return l.value.str(); }
    std::string operator()(const ast::VarRef& v) const { return std::string(var_name(v.var)); }
    std::string operator()(const ast::Bound& b) const { return b.name; }
    std::string operator()(const ast::DegreeAt& d) const { return "(d " + print(*d.index) + ")"; }
    std::string operator()(const ast::Apply& a) const {
      std::string out = "(";
      for (const auto& [op, name] : kOpNames)
        if (op == a.op) out += name;
      for (const auto& arg : a.args) out += " " + print(*arg);
      return out + ")";
    }
    std::string operator()(const ast::Sum& s) const {
      return "(sum " + s.index + " " + print(*s.lo) + " " + print(*s.hi) + " " + print(*s.body) + ")";
    }
    std::string operator()(const ast::EdgeSum& e) const { return "(sum-edges " + print(*e.body) + ")"; }
  };
  return std::visit(Visitor{}, node.v);
}

inline std::string print(const past::Node& node) {
  struct Visitor {
    std::string operator()(const past::Always&) const { return "all"; }
    std::string operator()(const past::Compare& c) const {
      return "(" + std::string(rel_name(c.rel)) + " " + print(c.lhs.root()) + " " + print(c.rhs.root()) + ")";
    }
    std::string operator()(const past::And& a) const { return join("and", a.parts); }
    std::string operator()(const past::Or& o) const { return join("or", o.parts); }
    std::string operator()(const past::Not& n) const { return "(not " + print(*n.inner) + ")"; }
    std::string operator()(const past::Forall& f) const {
      return "(forall " + f.index + " " + print(f.lo.root()) + " " + print(f.hi.root()) + " " + print(*f.body) +
             ")";
    }
    std::string operator()(const past::Builtin& b) const {
      switch (b.kind) {
        case BuiltinPredicate::Star: return "star";
        case BuiltinPredicate::Path: return "path";
        case BuiltinPredicate::Caterpillar: return "caterpillar";
        case BuiltinPredicate::SupportOther: return "(support-other " + b.args[0].str() + " " + b.args[1].str() + ")";
        case BuiltinPredicate::StrongSupportOther: return "(strong-support-other " + b.args[0].str() + ")";
      }
      return "?";
    }
    static std::string join(std::string_view head, const std::vector<past::NodePtr>& parts) {
      std::string out = "(" + std::string(head);
      for (const auto& p : parts) out += " " + print(*p);
      return out + ")";
    }
  };
  return std::visit(Visitor{}, node.v);
}

}  // namespace detail

inline std::string to_string(const Expression& e) { return detail::print(e.root()); }
inline std::string to_string(const Predicate& p) { return detail::print(p.root()); }

}  // namespace treeidx
