#include "mdl/translate.hpp"

#include <set>

#include "mdl/errors.hpp"

namespace mdl {
namespace {

class StandardTranslator {
 public:
  explicit StandardTranslator(const std::string& x) : reserved_(x) {}

  Formula translate(const Concept& c, const std::string& x) {
    switch (c.kind) {
      case ConceptKind::Name: return Formula::pred(c.name, {x});
      case ConceptKind::Top: return Formula::equal(x, x);
      case ConceptKind::Bottom: return Formula::negation(Formula::equal(x, x));
      case ConceptKind::Not: return Formula::negation(translate(c.child(), x));
      case ConceptKind::And:
        return Formula::conj(translate(c.child(0), x), translate(c.child(1), x));
      case ConceptKind::Or:
        return Formula::disj(translate(c.child(0), x), translate(c.child(1), x));
      case ConceptKind::Box: return Formula::box(translate(c.child(), x));
      case ConceptKind::Diamond: return Formula::diamond(translate(c.child(), x));
      case ConceptKind::Exists:
      case ConceptKind::Forall: {
        if (c.role.kind != RoleKind::Local)
          throw SemanticError("standard translation undefined for modalized role '" +
                              toString(c.role) + "'");
        const std::string y = fresh();
        Formula edge = Formula::pred(c.role.name, {x, y});
        Formula body = translate(c.child(), y);
        if (c.kind == ConceptKind::Exists)
          return Formula::exists(y, Formula::conj(std::move(edge), std::move(body)));
        return Formula::forall(y, Formula::implies(std::move(edge), std::move(body)));
      }
    }
    throw Error("unreachable concept kind");
  }

 private:
  std::string fresh() {
    std::string name;
    do name = "y" + std::to_string(++counter_);
    while (name == reserved_);
    return name;
  }

  std::string reserved_;
  unsigned counter_ = 0;
};

class TwoSortedTranslator {
 public:
  TwoSortedTranslator(const Formula& f, const std::string& v) : base_(v), taken_(allVariables(f)) {
    taken_.insert(v);
  }

  TwoSortedFormula translate(const Formula& f, const std::string& world) {
    TwoSortedFormula out;
    switch (f.kind) {
      case FormulaKind::Pred:
        out.kind = TwoSortedKind::Pred;
        out.name = f.name;
        out.vars = f.vars;
        out.world = world;
        return out;
      case FormulaKind::Equal:
        out.kind = TwoSortedKind::Equal;
        out.vars = f.vars;
        return out;
      case FormulaKind::Not: out.kind = TwoSortedKind::Not; break;
      case FormulaKind::And: out.kind = TwoSortedKind::And; break;
      case FormulaKind::Or: out.kind = TwoSortedKind::Or; break;
      case FormulaKind::Implies: out.kind = TwoSortedKind::Implies; break;
      case FormulaKind::Exists:
      case FormulaKind::Forall:
        out.kind = f.kind == FormulaKind::Exists ? TwoSortedKind::Exists : TwoSortedKind::Forall;
        out.vars = f.vars;
        out.sort = Sort::Domain;
        out.children.push_back(translate(f.child(), world));
        return out;
      case FormulaKind::Box:
      case FormulaKind::Diamond: {
        out.kind = f.kind == FormulaKind::Box ? TwoSortedKind::Forall : TwoSortedKind::Exists;
        out.sort = Sort::World;
        std::string w = fresh();
        out.vars = {w};
        out.children.push_back(translate(f.child(), w));
        return out;
      }
    }
    for (const auto& ch : f.children) out.children.push_back(translate(ch, world));
    return out;
  }

 private:
  std::string fresh() {
    std::string name;
    do name = base_ + std::to_string(++counter_);
    while (taken_.count(name));
    taken_.insert(name);
    return name;
  }

  std::string base_;
  std::set<std::string> taken_;
  unsigned counter_ = 0;
};

}  // namespace

Formula standardTranslation(const Concept& c, const std::string& x) {
  return StandardTranslator(x).translate(c, x);
}

TwoSortedFormula twoSortedTranslation(const Formula& f, const std::string& v) {
  if (allVariables(f).count(v))
    throw SemanticError("sort clash: '" + v + "' is used as a domain variable");
  return TwoSortedTranslator(f, v).translate(f, v);
}

}  // namespace mdl
