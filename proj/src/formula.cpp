#include "mdl/formula.hpp"

#include <algorithm>

namespace mdl {

Formula Formula::pred(std::string name, std::vector<std::string> args) {
  Formula f;
  f.kind = FormulaKind::Pred;
  f.name = std::move(name);
  f.vars = std::move(args);
  return f;
}

Formula Formula::equal(std::string lhs, std::string rhs) {
  Formula f;
  f.kind = FormulaKind::Equal;
  f.vars = {std::move(lhs), std::move(rhs)};
  return f;
}

namespace {

Formula unary(FormulaKind kind, Formula body) {
  Formula f;
  f.kind = kind;
  f.children.push_back(std::move(body));
  return f;
}

Formula binary(FormulaKind kind, Formula lhs, Formula rhs) {
  Formula f;
  f.kind = kind;
  f.children.reserve(2);
  f.children.push_back(std::move(lhs));
  f.children.push_back(std::move(rhs));
  return f;
}

Formula quantifier(FormulaKind kind, std::string var, Formula body) {
  Formula f = unary(kind, std::move(body));
  f.vars = {std::move(var)};
  return f;
}

}  // namespace

Formula Formula::negation(Formula f) { return unary(FormulaKind::Not, std::move(f)); }
Formula Formula::conj(Formula lhs, Formula rhs) {
  return binary(FormulaKind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return binary(FormulaKind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implies(Formula lhs, Formula rhs) {
  return binary(FormulaKind::Implies, std::move(lhs), std::move(rhs));
}
Formula Formula::exists(std::string var, Formula body) {
  return quantifier(FormulaKind::Exists, std::move(var), std::move(body));
}
Formula Formula::forall(std::string var, Formula body) {
  return quantifier(FormulaKind::Forall, std::move(var), std::move(body));
}
Formula Formula::box(Formula body) { return unary(FormulaKind::Box, std::move(body)); }
Formula Formula::diamond(Formula body) { return unary(FormulaKind::Diamond, std::move(body)); }

std::size_t rank(const Formula& f) {
  std::size_t r = 0;
  for (const auto& ch : f.children) r = std::max(r, rank(ch));
  switch (f.kind) {
    case FormulaKind::Exists:
    case FormulaKind::Forall:
    case FormulaKind::Box:
    case FormulaKind::Diamond:
      return r + 1;
    default:
      return r;
  }
}

namespace {

void collectFree(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case FormulaKind::Pred:
    case FormulaKind::Equal:
      for (const auto& v : f.vars)
        if (!bound.count(v)) out.insert(v);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const bool fresh = bound.insert(f.boundVar()).second;
      collectFree(f.child(), bound, out);
      if (fresh) bound.erase(f.boundVar());
      return;
    }
    default:
      for (const auto& ch : f.children) collectFree(ch, bound, out);
  }
}

void collectAll(const Formula& f, std::set<std::string>& out) {
  out.insert(f.vars.begin(), f.vars.end());
  for (const auto& ch : f.children) collectAll(ch, out);
}

}  // namespace

std::set<std::string> freeVariables(const Formula& f) {
  std::set<std::string> bound, out;
  collectFree(f, bound, out);
  return out;
}

std::set<std::string> allVariables(const Formula& f) {
  std::set<std::string> out;
  collectAll(f, out);
  return out;
}

std::size_t size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& ch : f.children) n += size(ch);
  return n;
}

namespace {

// 0 = quantifier-like, 1 = ->, 2 = |, 3 = &, 4 = prefix, 5 = atom.
int precedence(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Exists:
    case FormulaKind::Forall: return 0;
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    case FormulaKind::Not:
    case FormulaKind::Box:
    case FormulaKind::Diamond: return 4;
    default: return 5;
  }
}

void print(const Formula& f, std::string& out);
void print(const TwoSortedFormula& f, std::string& out);

template <typename Node>
void wrap(const Node& n, bool parens, std::string& out) {
  if (parens) out += '(';
  print(n, out);
  if (parens) out += ')';
}

void joinArgs(const std::vector<std::string>& args, std::string& out) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i];
  }
}

void print(const Formula& f, std::string& out) {
  const int p = precedence(f.kind);
  switch (f.kind) {
    case FormulaKind::Pred:
      out += f.name + "(";
      joinArgs(f.vars, out);
      out += ')';
      break;
    case FormulaKind::Equal:
      out += f.vars[0] + " = " + f.vars[1];
      break;
    case FormulaKind::Not:
    case FormulaKind::Box:
    case FormulaKind::Diamond: {
      out += f.kind == FormulaKind::Not ? "~" : f.kind == FormulaKind::Box ? "box " : "dia ";
      const auto& ch = f.child();
      // equations are atoms for the grammar, parenthesized only for legibility
      wrap(ch, precedence(ch.kind) < 4 || ch.kind == FormulaKind::Equal, out);
      break;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
      wrap(f.child(0), precedence(f.child(0).kind) < p, out);
      out += f.kind == FormulaKind::And ? " & " : " | ";
      wrap(f.child(1), precedence(f.child(1).kind) <= p, out);
      break;
    case FormulaKind::Implies:
      // right-associative
      wrap(f.child(0), precedence(f.child(0).kind) <= p, out);
      out += " -> ";
      wrap(f.child(1), precedence(f.child(1).kind) < p, out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += f.kind == FormulaKind::Exists ? "exists " : "forall ";
      out += f.boundVar() + " . ";
      print(f.child(), out);
      break;
  }
}

int precedence(TwoSortedKind kind) {
  switch (kind) {
    case TwoSortedKind::Exists:
    case TwoSortedKind::Forall: return 0;
    case TwoSortedKind::Implies: return 1;
    case TwoSortedKind::Or: return 2;
    case TwoSortedKind::And: return 3;
    case TwoSortedKind::Not: return 4;
    default: return 5;
  }
}

void print(const TwoSortedFormula& f, std::string& out) {
  const int p = precedence(f.kind);
  switch (f.kind) {
    case TwoSortedKind::Pred:
      out += f.name + "(";
      joinArgs(f.vars, out);
      if (!f.vars.empty()) out += ',';
      out += f.world + ')';
      break;
    case TwoSortedKind::Equal:
      out += f.vars[0] + " = " + f.vars[1];
      break;
    case TwoSortedKind::Not:
      out += '~';
      wrap(f.child(), precedence(f.child().kind) < 4 || f.child().kind == TwoSortedKind::Equal,
           out);
      break;
    case TwoSortedKind::And:
    case TwoSortedKind::Or:
      wrap(f.child(0), precedence(f.child(0).kind) < p, out);
      out += f.kind == TwoSortedKind::And ? " & " : " | ";
      wrap(f.child(1), precedence(f.child(1).kind) <= p, out);
      break;
    case TwoSortedKind::Implies:
      wrap(f.child(0), precedence(f.child(0).kind) <= p, out);
      out += " -> ";
      wrap(f.child(1), precedence(f.child(1).kind) < p, out);
      break;
    case TwoSortedKind::Exists:
    case TwoSortedKind::Forall:
      out += f.kind == TwoSortedKind::Exists ? "exists " : "forall ";
      out += f.vars.at(0);
      if (f.sort == Sort::World) out += ":world";
      out += " . ";
      print(f.child(), out);
      break;
  }
}

}  // namespace

std::string toString(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string toString(const TwoSortedFormula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::size_t rank(const TwoSortedFormula& f) {
  std::size_t r = 0;
  for (const auto& ch : f.children) r = std::max(r, rank(ch));
  return (f.kind == TwoSortedKind::Exists || f.kind == TwoSortedKind::Forall) ? r + 1 : r;
}

}  // namespace mdl
