#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdl/concept.hpp"
#include "mdl/formula.hpp"
#include "mdl/interpretation.hpp"

namespace mdl {

/// eta: variable -> individual index.
using Valuation = std::map<std::string, std::size_t>;

/// Truth of `c` at every point, indexed by Interpretation::pointIndex.
/// Throws SignatureError for names not declared in the model's signature.
std::vector<bool> conceptTable(const Interpretation& interp, const Concept& c);

bool checkConcept(const Interpretation& interp, std::size_t world, std::size_t d, const Concept& c);
/// C^{I,w} in domain order.
std::vector<std::size_t> conceptExtension(const Interpretation& interp, std::size_t world,
                                          const Concept& c);

/// A formula compiled against a signature: predicates resolved to indices,
/// variables to slots. Free variables are taken in sorted order.
class FormulaEvaluator {
 public:
  FormulaEvaluator(const Formula& f, const Signature& sig);

  const std::vector<std::string>& freeVariables() const noexcept { return free_; }
  const Signature& signature() const noexcept { return sig_; }

  /// `values[k]` is the individual assigned to freeVariables()[k]. The model
  /// must be over signature().
  bool evaluate(const Interpretation& interp, std::size_t world,
                std::span<const std::size_t> values) const;

 private:
  struct Node {
    FormulaKind kind;
    std::size_t symbol = 0;          // Pred: concept or role index
    std::vector<std::size_t> slots;  // Pred/Equal arguments, binder slot
    std::vector<std::size_t> children;
  };

  std::size_t compile(const Formula& f, std::map<std::string, std::size_t>& slots);
  bool eval(std::size_t node, const Interpretation& interp, std::size_t world,
            std::vector<std::size_t>& env) const;

  Signature sig_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  std::size_t slotCount_ = 0;
  std::vector<std::string> free_;
  std::vector<std::size_t> freeSlots_;
};

/// Throws SemanticError if eta misses a free variable, SignatureError for
/// undeclared predicates.
bool checkFormula(const Interpretation& interp, std::size_t world, const Valuation& eta,
                  const Formula& f);

/// Reference evaluator for the two-sorted language: plain recursion over the
/// syntax with explicit domain and world assignments.
bool checkTwoSorted(const Interpretation& interp, const TwoSortedFormula& f, Valuation domainVals,
                    std::map<std::string, std::size_t> worldVals);

/// Whether I,w,tuple |= f iff I|U^radius(tuple),w,tuple |= f. The first
/// entries of the tuple assign the free variables of `f` in sorted order; any
/// further entries only widen the neighbourhood. Sentences need a nonempty
/// tuple all the same.
bool isLocalAt(const Formula& f, const Interpretation& interp, std::size_t world,
               std::span<const std::size_t> tuple, std::size_t radius);

struct ClassCounterexample {
  std::size_t model = 0;  // index into the scanned class
  std::size_t world = 0;
  std::vector<std::pair<std::string, std::size_t>> valuation;
  bool lhs = false;
  bool rhs = false;
};

/// First disagreement of `lhs` and `rhs`, scanning models in order, then
/// worlds, then valuations of the union of free variables (sorted; the first
/// variable varies slowest, individuals in domain order). All models must
/// share one signature.
std::optional<ClassCounterexample> equivalentOnClass(const Formula& lhs, const Formula& rhs,
                                                     std::span<const Interpretation> models);

}  // namespace mdl
