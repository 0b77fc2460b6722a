#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "mdl/interpretation.hpp"

namespace mdl {

/// Restriction I|_U: same worlds, domain U (kept in the original order),
/// extensions intersected with U. Throws ModelError if U is empty or
/// contains an index outside the domain.
Interpretation restrict(const Interpretation& interp, std::span<const std::size_t> individuals);

/// Gaifman graph over the domain: d and e are adjacent iff d != e and
/// (d,e) or (e,d) is in some role at some world. Worlds contribute nothing
/// to distances.
struct GaifmanData {
  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<bool>> adjacent;
  std::vector<std::vector<std::size_t>> distance;  // kUnreachable across components

  std::size_t edgeCount() const;
};

GaifmanData gaifman(const Interpretation& interp);

/// U^radius(tuple): individuals within `radius` of some tuple entry, sorted.
/// Throws ModelError on an empty tuple.
std::vector<std::size_t> neighborhood(const GaifmanData& g, std::span<const std::size_t> tuple,
                                      std::size_t radius);
std::vector<std::size_t> neighborhood(const Interpretation& interp,
                                      std::span<const std::size_t> tuple, std::size_t radius);

/// True iff the Gaifman graph is a forest.
bool gaifmanAcyclic(const Interpretation& interp);

/// Disjoint union over a shared world set: left individuals become `x#1`,
/// right ones `x#2`; no edges cross. Throws SemanticError unless both sides
/// have the same signature and identical world identifiers (in order).
Interpretation disjointUnion(const Interpretation& left, const Interpretation& right);

/// `i` extended by n copies of `i` (individuals `x#i1`..`x#in`) and n copies of
/// `j` (`x#j1`..`x#jn`). Original individuals of `i` keep their names.
Interpretation addCopies(const Interpretation& i, const Interpretation& j, std::size_t n);

/// Result of an unravelling. Individuals of `model` are either tree nodes
/// (non-empty `paths[x]`, a sequence of original individuals starting at the
/// root) or elements of a grafted copy of the original (empty path).
struct Unravelling {
  Interpretation model;
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> projection;  // new individual -> original individual
  std::size_t root = 0;
  bool truncated = false;               // tree: some path of maximal length can be extended
};

/// Tree unravelling from d0, keeping paths with at most `depthLimit` edges.
/// Nodes are named by joining path entries with '/'.
Unravelling treeUnravelling(const Interpretation& interp, std::size_t d0, std::size_t depthLimit);

/// Finite partial unravelling: the tree unravelling cut at radius+1 around
/// d0, with every leaf at distance radius+1 identified with its projection
/// in one fresh copy of `interp` (individuals `x#copy`).
Unravelling partialUnravelling(const Interpretation& interp, std::size_t d0, std::size_t radius);

/// {((w, projection(x)), (w, x))}: the relation between the original and an
/// unravelling induced by the projection and the identity on worlds.
std::vector<PointPair> projectionRelation(const Interpretation& original, const Unravelling& u);

}  // namespace mdl
