#include "mdl/concept.hpp"

#include <algorithm>

namespace mdl {

Concept Concept::atom(std::string name) {
  Concept c;
  c.kind = ConceptKind::Name;
  c.name = std::move(name);
  return c;
}

Concept Concept::top() { return Concept{}; }

Concept Concept::bottom() {
  Concept c;
  c.kind = ConceptKind::Bottom;
  return c;
}

namespace {

Concept unary(ConceptKind kind, Concept body) {
  Concept c;
  c.kind = kind;
  c.children.push_back(std::move(body));
  return c;
}

Concept binary(ConceptKind kind, Concept lhs, Concept rhs) {
  Concept c;
  c.kind = kind;
  c.children.reserve(2);
  c.children.push_back(std::move(lhs));
  c.children.push_back(std::move(rhs));
  return c;
}

Concept restriction(ConceptKind kind, RoleExpr role, Concept body) {
  Concept c = unary(kind, std::move(body));
  c.role = std::move(role);
  return c;
}

}  // namespace

Concept Concept::negation(Concept c) { return unary(ConceptKind::Not, std::move(c)); }
Concept Concept::conj(Concept lhs, Concept rhs) {
  return binary(ConceptKind::And, std::move(lhs), std::move(rhs));
}
Concept Concept::disj(Concept lhs, Concept rhs) {
  return binary(ConceptKind::Or, std::move(lhs), std::move(rhs));
}
Concept Concept::exists(RoleExpr role, Concept body) {
  return restriction(ConceptKind::Exists, std::move(role), std::move(body));
}
Concept Concept::forall(RoleExpr role, Concept body) {
  return restriction(ConceptKind::Forall, std::move(role), std::move(body));
}
Concept Concept::box(Concept body) { return unary(ConceptKind::Box, std::move(body)); }
Concept Concept::diamond(Concept body) { return unary(ConceptKind::Diamond, std::move(body)); }

Concept Concept::conjunction(std::vector<Concept> parts) {
  if (parts.empty()) return top();
  Concept acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(std::move(acc), std::move(parts[i]));
  return acc;
}

Concept Concept::disjunction(std::vector<Concept> parts) {
  if (parts.empty()) return bottom();
  Concept acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(std::move(acc), std::move(parts[i]));
  return acc;
}

std::size_t rank(const Concept& c) {
  switch (c.kind) {
    case ConceptKind::Name:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Not:
      return rank(c.child());
    case ConceptKind::And:
    case ConceptKind::Or:
      return std::max(rank(c.child(0)), rank(c.child(1)));
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::Box:
    case ConceptKind::Diamond:
      return 1 + rank(c.child());
  }
  return 0;
}

bool isLocalFragment(const Concept& c) {
  if ((c.kind == ConceptKind::Exists || c.kind == ConceptKind::Forall) &&
      c.role.kind != RoleKind::Local) {
    return false;
  }
  return std::all_of(c.children.begin(), c.children.end(),
                     [](const Concept& ch) { return isLocalFragment(ch); });
}

std::size_t size(const Concept& c) {
  std::size_t n = 1;
  for (const auto& ch : c.children) n += size(ch);
  return n;
}

std::string toString(const RoleExpr& r) {
  switch (r.kind) {
    case RoleKind::Local: return r.name;
    case RoleKind::Boxed: return "box " + r.name;
    case RoleKind::Diamond: return "dia " + r.name;
  }
  return r.name;
}

namespace {

// 0 = quantifier-like (extends maximally to the right), 2 = |, 3 = &, 4 = prefix, 5 = atom.
int precedence(const Concept& c) {
  switch (c.kind) {
    case ConceptKind::Exists:
    case ConceptKind::Forall: return 0;
    case ConceptKind::Or: return 2;
    case ConceptKind::And: return 3;
    case ConceptKind::Not:
    case ConceptKind::Box:
    case ConceptKind::Diamond: return 4;
    default: return 5;
  }
}

void print(const Concept& c, std::string& out);

void printMaybeParenthesized(const Concept& c, bool parens, std::string& out) {
  if (parens) out += '(';
  print(c, out);
  if (parens) out += ')';
}

void print(const Concept& c, std::string& out) {
  const int p = precedence(c);
  switch (c.kind) {
    case ConceptKind::Name: out += c.name; break;
    case ConceptKind::Top: out += "true"; break;
    case ConceptKind::Bottom: out += "false"; break;
    case ConceptKind::Not:
    case ConceptKind::Box:
    case ConceptKind::Diamond:
      out += c.kind == ConceptKind::Not ? "~" : c.kind == ConceptKind::Box ? "box " : "dia ";
      printMaybeParenthesized(c.child(), precedence(c.child()) < 4, out);
      break;
    case ConceptKind::And:
    case ConceptKind::Or:
      // left-associative: a right operand of equal precedence needs parentheses
      printMaybeParenthesized(c.child(0), precedence(c.child(0)) < p, out);
      out += c.kind == ConceptKind::And ? " & " : " | ";
      printMaybeParenthesized(c.child(1), precedence(c.child(1)) <= p, out);
      break;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      out += c.kind == ConceptKind::Exists ? "exists " : "forall ";
      out += toString(c.role);
      out += " . ";
      print(c.child(), out);
      break;
  }
}

}  // namespace

std::string toString(const Concept& c) {
  std::string out;
  print(c, out);
  return out;
}

}  // namespace mdl
