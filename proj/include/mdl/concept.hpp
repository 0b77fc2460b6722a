#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mdl {

enum class RoleKind { Local, Boxed, Diamond };

/// A role occurrence: plain `r`, or the modalized `box r` / `dia r`.
struct RoleExpr {
  RoleKind kind = RoleKind::Local;
  std::string name;

  bool operator==(const RoleExpr&) const = default;
};

enum class ConceptKind { Name, Top, Bottom, Not, And, Or, Exists, Forall, Box, Diamond };

/// Concept of modalized ALC. Derived constructs (top, bottom, or, forall,
/// diamond) are kept as nodes of their own; rank and semantics treat them
/// exactly as their encodings.
struct Concept {
  ConceptKind kind = ConceptKind::Top;
  std::string name;               // Name
  RoleExpr role;                  // Exists, Forall
  std::vector<Concept> children;  // 1 for Not/Exists/Forall/Box/Diamond, 2 for And/Or

  bool operator==(const Concept&) const = default;

  static Concept atom(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept c);
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept exists(RoleExpr role, Concept body);
  static Concept forall(RoleExpr role, Concept body);
  static Concept box(Concept body);
  static Concept diamond(Concept body);

  /// Left-nested conjunction; `top` when empty.
  static Concept conjunction(std::vector<Concept> parts);
  /// Left-nested disjunction; `bottom` when empty.
  static Concept disjunction(std::vector<Concept> parts);

  const Concept& child(std::size_t i = 0) const { return children.at(i); }
};

/// Maximal nesting depth of box/diamond and role restrictions.
std::size_t rank(const Concept& c);

/// True iff every role occurrence is an unmodalized (local) role.
bool isLocalFragment(const Concept& c);

/// Number of AST nodes.
std::size_t size(const Concept& c);

/// Canonical ASCII rendering; re-parses to an equal AST.
std::string toString(const Concept& c);
std::string toString(const RoleExpr& r);

}  // namespace mdl
