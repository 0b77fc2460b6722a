#include "mdl/semantics.hpp"

#include <algorithm>
#include <set>

#include "mdl/construct.hpp"
#include "mdl/errors.hpp"

namespace mdl {

namespace {

// Successor test for a possibly modalized role: box r is the intersection of
// r over all worlds, dia r the union.
bool roleHolds(const Interpretation& m, const RoleExpr& role, std::size_t r, std::size_t w,
               std::size_t d, std::size_t e) {
  switch (role.kind) {
    case RoleKind::Local:
      return m.hasRole(r, w, d, e);
    case RoleKind::Boxed:
      for (std::size_t v = 0; v < m.worldCount(); ++v)
        if (!m.hasRole(r, v, d, e)) return false;
      return true;
    case RoleKind::Diamond:
      for (std::size_t v = 0; v < m.worldCount(); ++v)
        if (m.hasRole(r, v, d, e)) return true;
      return false;
  }
  return false;
}

std::vector<bool> table(const Interpretation& m, const Concept& c) {
  const std::size_t W = m.worldCount(), D = m.domainSize(), P = m.pointCount();
  std::vector<bool> out(P, false);
  switch (c.kind) {
    case ConceptKind::Name: {
      const std::size_t a = m.conceptIndex(c.name);
      for (std::size_t p = 0; p < P; ++p) out[p] = m.hasConcept(a, p / D, p % D);
      return out;
    }
    case ConceptKind::Top:
      out.assign(P, true);
      return out;
    case ConceptKind::Bottom:
      return out;
    case ConceptKind::Not:
      out = table(m, c.child());
      out.flip();
      return out;
    case ConceptKind::And:
    case ConceptKind::Or: {
      out = table(m, c.child(0));
      const auto rhs = table(m, c.child(1));
      for (std::size_t p = 0; p < P; ++p)
        out[p] = c.kind == ConceptKind::And ? (out[p] && rhs[p]) : (out[p] || rhs[p]);
      return out;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      const std::size_t r = m.roleIndex(c.role.name);
      const auto body = table(m, c.child());
      const bool exists = c.kind == ConceptKind::Exists;
      for (std::size_t w = 0; w < W; ++w) {
        for (std::size_t d = 0; d < D; ++d) {
          bool value = !exists;
          for (std::size_t e = 0; e < D; ++e) {
            if (!roleHolds(m, c.role, r, w, d, e)) continue;
            if (body[w * D + e] == exists) {
              value = exists;
              break;
            }
          }
          out[w * D + d] = value;
        }
      }
      return out;
    }
    case ConceptKind::Box:
    case ConceptKind::Diamond: {
      const auto body = table(m, c.child());
      const bool box = c.kind == ConceptKind::Box;
      for (std::size_t d = 0; d < D; ++d) {
        bool value = box;
        for (std::size_t w = 0; w < W; ++w) {
          if (body[w * D + d] != box) {
            value = !box;
            break;
          }
        }
        for (std::size_t w = 0; w < W; ++w) out[w * D + d] = value;
      }
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<bool> conceptTable(const Interpretation& interp, const Concept& c) {
  return table(interp, c);
}

bool checkConcept(const Interpretation& interp, std::size_t world, std::size_t d, const Concept& c) {
  if (world >= interp.worldCount() || d >= interp.domainSize())
    throw SemanticError("point outside the interpretation");
  return table(interp, c)[interp.pointIndex({world, d})];
}

std::vector<std::size_t> conceptExtension(const Interpretation& interp, std::size_t world,
                                          const Concept& c) {
  if (world >= interp.worldCount()) throw SemanticError("world outside the interpretation");
  const auto t = table(interp, c);
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < interp.domainSize(); ++d)
    if (t[interp.pointIndex({world, d})]) out.push_back(d);
  return out;
}

FormulaEvaluator::FormulaEvaluator(const Formula& f, const Signature& sig) : sig_(sig) {
  const auto free = mdl::freeVariables(f);
  free_.assign(free.begin(), free.end());
  std::map<std::string, std::size_t> slots;
  for (const auto& v : free_) {
    freeSlots_.push_back(slots.size());
    slots.emplace(v, slots.size());
  }
  root_ = compile(f, slots);
  slotCount_ = slots.size();
}

std::size_t FormulaEvaluator::compile(const Formula& f, std::map<std::string, std::size_t>& slots) {
  auto slotOf = [&slots](const std::string& v) {
    return slots.emplace(v, slots.size()).first->second;
  };
  Node node{f.kind, 0, {}, {}};
  switch (f.kind) {
    case FormulaKind::Pred:
      if (f.vars.size() == 1) {
        const auto a = sig_.conceptIndex(f.name);
        if (!a) throw SignatureError("undeclared concept name '" + f.name + "'");
        node.symbol = *a;
      } else if (f.vars.size() == 2) {
        const auto r = sig_.roleIndex(f.name);
        if (!r) throw SignatureError("undeclared role name '" + f.name + "'");
        node.symbol = *r;
      } else {
        throw SignatureError("predicate '" + f.name + "' used with arity " +
                             std::to_string(f.vars.size()));
      }
      for (const auto& v : f.vars) node.slots.push_back(slotOf(v));
      break;
    case FormulaKind::Equal:
      for (const auto& v : f.vars) node.slots.push_back(slotOf(v));
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      node.slots.push_back(slotOf(f.boundVar()));
      break;
    default:
      break;
  }
  for (const auto& child : f.children) node.children.push_back(compile(child, slots));
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

bool FormulaEvaluator::evaluate(const Interpretation& interp, std::size_t world,
                                std::span<const std::size_t> values) const {
  if (values.size() != free_.size())
    throw SemanticError("valuation does not match the free variables");
  std::vector<std::size_t> env(slotCount_, 0);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] >= interp.domainSize()) throw SemanticError("valuation outside the domain");
    env[freeSlots_[k]] = values[k];
  }
  return eval(root_, interp, world, env);
}

bool FormulaEvaluator::eval(std::size_t index, const Interpretation& m, std::size_t w,
                            std::vector<std::size_t>& env) const {
  const Node& n = nodes_[index];
  switch (n.kind) {
    case FormulaKind::Pred:
      return n.slots.size() == 1 ? m.hasConcept(n.symbol, w, env[n.slots[0]])
                                 : m.hasRole(n.symbol, w, env[n.slots[0]], env[n.slots[1]]);
    case FormulaKind::Equal:
      return env[n.slots[0]] == env[n.slots[1]];
    case FormulaKind::Not:
      return !eval(n.children[0], m, w, env);
    case FormulaKind::And:
      return eval(n.children[0], m, w, env) && eval(n.children[1], m, w, env);
    case FormulaKind::Or:
      return eval(n.children[0], m, w, env) || eval(n.children[1], m, w, env);
    case FormulaKind::Implies:
      return !eval(n.children[0], m, w, env) || eval(n.children[1], m, w, env);
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const bool exists = n.kind == FormulaKind::Exists;
      const std::size_t slot = n.slots[0];
      const std::size_t saved = env[slot];
      bool result = !exists;
      for (std::size_t d = 0; d < m.domainSize(); ++d) {
        env[slot] = d;
        if (eval(n.children[0], m, w, env) == exists) {
          result = exists;
          break;
        }
      }
      env[slot] = saved;
      return result;
    }
    case FormulaKind::Box:
    case FormulaKind::Diamond: {
      const bool box = n.kind == FormulaKind::Box;
      for (std::size_t v = 0; v < m.worldCount(); ++v)
        if (eval(n.children[0], m, v, env) != box) return !box;
      return box;
    }
  }
  return false;
}

bool checkFormula(const Interpretation& interp, std::size_t world, const Valuation& eta,
                  const Formula& f) {
  if (world >= interp.worldCount()) throw SemanticError("world outside the interpretation");
  FormulaEvaluator ev(f, interp.signature());
  std::vector<std::size_t> values;
  for (const auto& v : ev.freeVariables()) {
    const auto it = eta.find(v);
    if (it == eta.end()) throw SemanticError("valuation does not cover free variable '" + v + "'");
    values.push_back(it->second);
  }
  return ev.evaluate(interp, world, values);
}

namespace {

bool twoSorted(const Interpretation& m, const TwoSortedFormula& f, Valuation& dom,
               std::map<std::string, std::size_t>& worlds) {
  auto domainValue = [&dom](const std::string& v) {
    const auto it = dom.find(v);
    if (it == dom.end()) throw SemanticError("unassigned domain variable '" + v + "'");
    return it->second;
  };
  auto worldValue = [&worlds](const std::string& v) {
    const auto it = worlds.find(v);
    if (it == worlds.end()) throw SemanticError("unassigned world variable '" + v + "'");
    return it->second;
  };
  switch (f.kind) {
    case TwoSortedKind::Pred: {
      const std::size_t w = worldValue(f.world);
      if (f.vars.size() == 1) return m.hasConcept(m.conceptIndex(f.name), w, domainValue(f.vars[0]));
      return m.hasRole(m.roleIndex(f.name), w, domainValue(f.vars[0]), domainValue(f.vars[1]));
    }
    case TwoSortedKind::Equal:
      if (f.sort == Sort::World) return worldValue(f.vars[0]) == worldValue(f.vars[1]);
      return domainValue(f.vars[0]) == domainValue(f.vars[1]);
    case TwoSortedKind::Not:
      return !twoSorted(m, f.child(), dom, worlds);
    case TwoSortedKind::And:
      return twoSorted(m, f.child(0), dom, worlds) && twoSorted(m, f.child(1), dom, worlds);
    case TwoSortedKind::Or:
      return twoSorted(m, f.child(0), dom, worlds) || twoSorted(m, f.child(1), dom, worlds);
    case TwoSortedKind::Implies:
      return !twoSorted(m, f.child(0), dom, worlds) || twoSorted(m, f.child(1), dom, worlds);
    case TwoSortedKind::Exists:
    case TwoSortedKind::Forall: {
      const bool exists = f.kind == TwoSortedKind::Exists;
      auto& env = f.sort == Sort::World ? worlds : dom;
      const std::size_t range = f.sort == Sort::World ? m.worldCount() : m.domainSize();
      const std::string& var = f.vars.at(0);
      const auto saved = env.find(var) == env.end() ? std::nullopt
                                                    : std::optional<std::size_t>(env[var]);
      bool result = !exists;
      for (std::size_t k = 0; k < range; ++k) {
        env[var] = k;
        if (twoSorted(m, f.child(), dom, worlds) == exists) {
          result = exists;
          break;
        }
      }
      if (saved) env[var] = *saved;
      else env.erase(var);
      return result;
    }
  }
  return false;
}

}  // namespace

bool checkTwoSorted(const Interpretation& interp, const TwoSortedFormula& f, Valuation domainVals,
                    std::map<std::string, std::size_t> worldVals) {
  return twoSorted(interp, f, domainVals, worldVals);
}

bool isLocalAt(const Formula& f, const Interpretation& interp, std::size_t world,
               std::span<const std::size_t> tuple, std::size_t radius) {
  if (world >= interp.worldCount()) throw SemanticError("world outside the interpretation");
  FormulaEvaluator ev(f, interp.signature());
  const std::size_t k = ev.freeVariables().size();
  if (tuple.size() < k || tuple.empty())
    throw SemanticError("tuple must be nonempty and cover the free variables");
  const auto u = neighborhood(interp, tuple, radius);
  const Interpretation local = restrict(interp, u);
  std::vector<std::size_t> localTuple;
  for (std::size_t d : tuple.first(k))
    localTuple.push_back(static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), d) - u.begin()));
  return ev.evaluate(interp, world, tuple.first(k)) == ev.evaluate(local, world, localTuple);
}

std::optional<ClassCounterexample> equivalentOnClass(const Formula& lhs, const Formula& rhs,
                                                     std::span<const Interpretation> models) {
  if (models.empty()) return std::nullopt;
  const Signature& sig = models.front().signature();
  const FormulaEvaluator left(lhs, sig), right(rhs, sig);
  std::set<std::string> all(left.freeVariables().begin(), left.freeVariables().end());
  all.insert(right.freeVariables().begin(), right.freeVariables().end());
  const std::vector<std::string> vars(all.begin(), all.end());
  auto positions = [&vars](const FormulaEvaluator& ev) {
    std::vector<std::size_t> pos;
    for (const auto& v : ev.freeVariables())
      pos.push_back(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
    return pos;
  };
  const auto leftPos = positions(left), rightPos = positions(right);

  std::vector<std::size_t> values(vars.size()), lv(leftPos.size()), rv(rightPos.size());
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const Interpretation& m = models[mi];
    if (!(m.signature() == sig)) throw SemanticError("class members disagree on the signature");
    const std::size_t D = m.domainSize();
    for (std::size_t w = 0; w < m.worldCount(); ++w) {
      std::fill(values.begin(), values.end(), 0);
      while (true) {
        for (std::size_t k = 0; k < leftPos.size(); ++k) lv[k] = values[leftPos[k]];
        for (std::size_t k = 0; k < rightPos.size(); ++k) rv[k] = values[rightPos[k]];
        const bool a = left.evaluate(m, w, lv), b = right.evaluate(m, w, rv);
        if (a != b) {
          ClassCounterexample ce{mi, w, {}, a, b};
          for (std::size_t k = 0; k < vars.size(); ++k) ce.valuation.emplace_back(vars[k], values[k]);
          return ce;
        }
        // odometer, last variable fastest
        std::size_t k = values.size();
        while (k > 0 && ++values[k - 1] == D) values[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace mdl
