#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace mdl {

enum class FormulaKind { Pred, Equal, Not, And, Or, Implies, Exists, Forall, Box, Diamond };

/// Formula of S5-modal first-order logic over the correspondence language:
/// one unary predicate per concept name, one binary predicate per role name.
struct Formula {
  FormulaKind kind = FormulaKind::Equal;
  std::string name;               // Pred
  std::vector<std::string> vars;  // Pred arguments; Equal operands; bound variable of Exists/Forall
  std::vector<Formula> children;

  bool operator==(const Formula&) const = default;

  static Formula pred(std::string name, std::vector<std::string> args);
  static Formula equal(std::string lhs, std::string rhs);
  static Formula negation(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula box(Formula body);
  static Formula diamond(Formula body);

  const Formula& child(std::size_t i = 0) const { return children.at(i); }
  const std::string& boundVar() const { return vars.at(0); }
};

/// Nesting depth of box/diamond and quantifiers.
std::size_t rank(const Formula& f);
std::set<std::string> freeVariables(const Formula& f);
/// Every variable name occurring in `f`, bound or free.
std::set<std::string> allVariables(const Formula& f);
std::size_t size(const Formula& f);
std::string toString(const Formula& f);

enum class Sort { Domain, World };

enum class TwoSortedKind { Pred, Equal, Not, And, Or, Implies, Exists, Forall };

/// Formula of the two-sorted first-order language with explicit worlds. A
/// predicate takes its domain-sorted arguments followed by one world-sorted
/// argument; there are no modal operators.
struct TwoSortedFormula {
  TwoSortedKind kind = TwoSortedKind::Equal;
  std::string name;                // Pred
  std::vector<std::string> vars;   // Pred domain arguments; Equal operands; bound variable
  std::string world;               // Pred world argument
  Sort sort = Sort::Domain;        // sort of the operands of Equal / of the bound variable
  std::vector<TwoSortedFormula> children;

  bool operator==(const TwoSortedFormula&) const = default;

  const TwoSortedFormula& child(std::size_t i = 0) const { return children.at(i); }
};

std::string toString(const TwoSortedFormula& f);
std::size_t rank(const TwoSortedFormula& f);

}  // namespace mdl
