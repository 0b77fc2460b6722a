#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "mdl/concept.hpp"
#include "mdl/formula.hpp"
#include "mdl/interpretation.hpp"
#include "mdl/semantics.hpp"

namespace mdl {

/// Structural rank-k normal form: the positive atoms of the characteristic
/// conjunction. Every atom not listed is negative. Child lists hold rank k-1
/// forms in canonical order without repetition; at rank 0 they are absent.
struct NormalForm {
  std::size_t rank = 0;
  std::vector<bool> concepts;                       // per concept name of the signature
  std::vector<std::vector<NormalForm>> successors;  // per role name: forms of r-successors
  std::vector<NormalForm> diamonds;                 // forms of the same individual at all worlds

  bool operator==(const NormalForm&) const = default;
};

/// Canonical order: rank, then concept signs (positive first, in signature
/// order), then the per-role child lists and the diamond list, each compared
/// lexicographically.
std::strong_ordering compare(const NormalForm& a, const NormalForm& b);

struct NormalFormLess {
  bool operator()(const NormalForm& a, const NormalForm& b) const { return compare(a, b) < 0; }
};

/// Computes normal forms of all points of many models at ranks 0..maxRank,
/// bottom-up, interning them so that equal forms get equal ids across models.
class NormalFormTable {
 public:
  NormalFormTable(Signature sig, std::size_t maxRank);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t maxRank() const noexcept { return maxRank_; }

  /// ids[k][pointIndex] for k = 0..maxRank.
  std::vector<std::vector<std::size_t>> add(const Interpretation& m);

  const NormalForm& form(std::size_t rank, std::size_t id) const { return forms_.at(rank).at(id); }
  std::size_t count(std::size_t rank) const { return forms_.at(rank).size(); }

 private:
  std::size_t intern(std::size_t rank, std::vector<std::size_t> key);

  Signature sig_;
  std::size_t maxRank_;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index_;
  std::vector<std::vector<NormalForm>> forms_;
};

NormalForm computeNf(const Interpretation& interp, std::size_t world, std::size_t d, std::size_t k);

/// Throws SemanticError on a rank mismatch.
bool nfEqual(const NormalForm& a, const NormalForm& b);

/// Atoms available when rendering a normal form as a concept: concept names
/// at every rank, and ∃r.C / ◇C for C in children[j-1] at rank j.
struct AtomUniverse {
  Signature sig;
  std::size_t rank = 0;
  std::vector<std::vector<NormalForm>> children;  // children[j-1]: rank j-1 forms, canonical order

  /// Every rank-(j-1) normal form, for j = 1..k. Throws CapExceeded when a
  /// level would hold more than `maxForms` forms.
  static AtomUniverse full(const Signature& sig, std::size_t k, std::size_t maxForms = 4096);
  /// The forms realized in `table` at ranks 0..k-1.
  static AtomUniverse realized(const NormalFormTable& table, std::size_t k);

  std::size_t atomCount(std::size_t j) const;
};

/// Conjunction over the atoms of `universe` at rank n.rank, in order (concept
/// names, ∃r_i.C per role and child, ◇C per child), negated where n has no
/// positive entry. Throws SemanticError if a positive atom of n lies outside
/// the universe or the ranks differ.
Concept nfToConcept(const NormalForm& n, const AtomUniverse& universe);

/// |at_k|: s at rank 0, s + (t+1)·2^{|at_{k-1}|} above. CapExceeded once the
/// exponent passes 2^24.
boost::multiprecision::cpp_int countAtoms(const Signature& sig, std::size_t k);

nlohmann::ordered_json nfToJson(const NormalForm& n, const Signature& sig);

struct Characterization {
  Concept result;
  std::size_t disjuncts = 0;
  std::size_t models = 0;
  std::size_t satisfyingPoints = 0;
  std::vector<std::size_t> universeSizes;       // realized forms per level
  std::optional<ClassCounterexample> counterexample;  // phi vs ST(concept) on the class
};

/// Disjunction of the rank-k normal forms of all pointed models of the class
/// that satisfy phi, rendered over the class-realized universe, then checked
/// against phi on the same class. Over the class, a rendered form holds at a
/// point exactly when the point has that form: every positive atom of a class
/// member is realized in the class, so agreeing on the realized atoms forces
/// equal structural forms. Throws SemanticError unless phi has exactly one
/// free variable.
Characterization characterize(const Formula& phi, std::size_t k,
                              std::span<const Interpretation> models);

}  // namespace mdl
