// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treeidx/error.hpp"
#include "treeidx/expression.hpp"
#include "treeidx/sexpr.hpp"

namespace treeidx {

enum class Direction { Max, Min };

inline std::string_view to_string(Direction d) { return d == Direction::Max ? "max" : "min"; }

/// lhs REL rhs; a claim with several relations holds when all of them do.
struct Relation {
  Rel rel;
  Expression lhs;
  Expression rhs;
};

struct RelationBody {
  std::vector<Relation> relations;
};

/// Some other tree with the same order and maximum degree scores strictly
/// lower on `objective`; i.e. the tree is not a minimizer of its class T(n, Delta).
struct ExistsLowerBody {
  Expression objective;
};

/// Among all trees of the same order, exactly the trees satisfying
/// `expected` attain the extremum of `objective`.
struct UniqueExtremalBody {
  Direction direction;
  Expression objective;
  Predicate expected;
};

/// For two degree-sequence classes of the same order whose degree sums
/// compare as sum(D_i) <= sum(D_j), objective(D_i) <= objective(D_j). The
/// class value is read two ways: class minimum and class maximum.
struct ClassMonotoneBody {
  Expression objective;
};

enum class Prescription { None, Monotone };

/// Caterpillar spine orderings: find the arrangements extremizing
/// `objective` among all orderings of a spine-degree multiset and, when a
/// prescription is given, test whether it is among them.
struct ArrangementBody {
  Direction direction;
  Expression objective;
  Prescription prescription = Prescription::None;
  bool distinct_degrees = false;
};

using ClaimBody = std::variant<RelationBody, ExistsLowerBody, UniqueExtremalBody, ClassMonotoneBody, ArrangementBody>;

struct Claim {
  std::string id;
  Predicate scope;
  ClaimBody body;
  std::string statement;
  std::vector<std::string> notes;

  std::string_view kind() const {
    struct Visitor {
      std::string_view operator()(const RelationBody& r) const {
        for (const auto& rel : r.relations)
          if (rel.rel != Rel::Eq) return "inequality";
        return "equality";
      }
      std::string_view operator()(const ExistsLowerBody&) const { return "existence"; }
      std::string_view operator()(const UniqueExtremalBody&) const { return "unique_extremal"; }
      std::string_view operator()(const ClassMonotoneBody&) const { return "class_monotone"; }
      std::string_view operator()(const ArrangementBody&) const { return "arrangement_extremal"; }
    };
    return std::visit(Visitor{}, body);
  }
};

// Claim file: a sequence of records
//
//   (claim ID SCOPE BODY... [(statement "text")] [(note "text")]...)
//
// BODY is one or more relations (REL lhs rhs), or exactly one of
//   (exists-lower EXPR)
//   (unique-extremal max|min EXPR PREDICATE)
//   (class-monotone EXPR)
//   (arrangement max|min EXPR [monotone] [distinct])
// ';' starts a comment.

namespace detail {

inline Direction parse_direction(const SExpr& e) {
  if (e.is_atom("max")) return Direction::Max;
  if (e.is_atom("min")) return Direction::Min;
  parse_fail(e.line, "expected max or min");
}

inline Claim parse_claim(const SExpr& rec) {
  if (rec.head() != "claim") parse_fail(rec.line, "expected (claim ...)");
  if (rec.items.size() < 4) parse_fail(rec.line, "claim needs an id, a scope and a body");
  if (!rec.items[1].is_atom()) parse_fail(rec.line, "claim id must be a symbol");

  Claim c;
  c.id = rec.items[1].text;
  c.scope = parse_predicate(rec.items[2]);

  RelationBody relations;
  std::optional<ClaimBody> special;
  for (std::size_t i = 3; i < rec.items.size(); ++i) {
    const SExpr& part = rec.items[i];
    const auto head = part.head();
    const std::size_t argc = part.is_list() ? part.items.size() - 1 : 0;
    auto need = [&](bool ok, const char* what) {
      if (!ok) parse_fail(part.line, std::string(what) + " in claim " + c.id);
    };
    if (head == "statement" || head == "note") {
      need(argc == 1 && part.items[1].is_string(), "expected a single string");
      (head == "statement" ? c.statement : c.notes.emplace_back()) = part.items[1].text;
    } else if (auto rel = rel_from_name(head)) {
      need(argc == 2, "relation takes two expressions");
      relations.relations.push_back({*rel, parse_expression(part.items[1]), parse_expression(part.items[2])});
    } else if (head == "exists-lower") {
      need(argc == 1 && !special, "malformed exists-lower");
      special = ExistsLowerBody{parse_expression(part.items[1])};
    } else if (head == "unique-extremal") {
      need(argc == 3 && !special, "malformed unique-extremal");
      special = UniqueExtremalBody{parse_direction(part.items[1]), parse_expression(part.items[2]),
                                   parse_predicate(part.items[3])};
    } else if (head == "class-monotone") {
      need(argc == 1 && !special, "malformed class-monotone");
      special = ClassMonotoneBody{parse_expression(part.items[1])};
    } else if (head == "arrangement") {
      need(argc >= 2 && !special, "malformed arrangement");
      ArrangementBody body{parse_direction(part.items[1]), parse_expression(part.items[2])};
      for (std::size_t j = 3; j < part.items.size(); ++j) {
        if (part.items[j].is_atom("monotone"))
          body.prescription = Prescription::Monotone;
        else if (part.items[j].is_atom("distinct"))
          body.distinct_degrees = true;
        else
          parse_fail(part.line, "unknown arrangement option");
      }
      special = body;
    } else {
      parse_fail(part.line, "unknown claim component in " + c.id);
    }
  }
  if (special && !relations.relations.empty())
    parse_fail(rec.line, "claim " + c.id + " mixes relations with another body kind");
  if (!special && relations.relations.empty()) parse_fail(rec.line, "claim " + c.id + " has no body");
  c.body = special ? *special : ClaimBody{std::move(relations)};
  return c;
}

}  // namespace detail

inline std::vector<Claim> parse_claims(std::string_view text) {
  std::vector<Claim> out;
  std::set<std::string> ids;
  for (const auto& rec : read_sexprs(text)) {
    out.push_back(detail::parse_claim(rec));
    if (!ids.insert(out.back().id).second)
      throw Error(Errc::ParseError, "duplicate claim id '" + out.back().id + "'");
  }
  return out;
}

inline std::string to_claim_text(const Claim& c) {
  std::string out = "(claim " + c.id + "\n  " + to_string(c.scope);
  struct Visitor {
    std::string& out;
    void operator()(const RelationBody& r) const {
      for (const auto& rel : r.relations)
        out += "\n  (" + std::string(rel_name(rel.rel)) + " " + to_string(rel.lhs) + " " + to_string(rel.rhs) + ")";
    }
    void operator()(const ExistsLowerBody& b) const { out += "\n  (exists-lower " + to_string(b.objective) + ")"; }
    void operator()(const UniqueExtremalBody& b) const {
      out += "\n  (unique-extremal " + std::string(to_string(b.direction)) + " " + to_string(b.objective) + " " +
             to_string(b.expected) + ")";
    }
    void operator()(const ClassMonotoneBody& b) const {
      out += "\n  (class-monotone " + to_string(b.objective) + ")";
    }
    void operator()(const ArrangementBody& b) const {
      out += "\n  (arrangement " + std::string(to_string(b.direction)) + " " + to_string(b.objective);
      if (b.prescription == Prescription::Monotone) out += " monotone";
      if (b.distinct_degrees) out += " distinct";
      out += ")";
    }
  };
  std::visit(Visitor{out}, c.body);
  if (!c.statement.empty()) out += "\n  (statement " + quote(c.statement) + ")";
  for (const auto& note : c.notes) out += "\n  (note " + quote(note) + ")";
  return out + ")\n";
}

inline const Claim& find_claim(const std::vector<Claim>& claims, std::string_view id) {
  for (const auto& c : claims)
    if (c.id == id) return c;
  throw Error(Errc::UnknownClaim, "no claim with id '" + std::string(id) + "'");
}

}  // namespace treeidx
