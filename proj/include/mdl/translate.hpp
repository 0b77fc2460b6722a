#pragma once

#include <string>

#include "mdl/concept.hpp"
#include "mdl/formula.hpp"

namespace mdl {

/// Standard translation of a local-fragment concept into a formula whose only
/// free variable is `x`. Restrictions bind fresh variables y1, y2, ... in
/// left-to-right order (skipping `x`); `forall r . C` becomes
/// `forall y . (r(x,y) -> ...)`, `true`/`false` become `x = x` / `~x = x`.
/// Throws SemanticError if `c` contains a modalized role.
Formula standardTranslation(const Concept& c, const std::string& x = "x");

/// Translation into the two-sorted language with world variable `v` for the
/// current world: predicates gain `v` as a last argument, and box/dia become
/// universal/existential quantifiers over fresh world variables v1, v2, ...
/// (fresh w.r.t. every name in `f`). Throws SemanticError if `v` occurs as a
/// domain variable of `f`.
TwoSortedFormula twoSortedTranslation(const Formula& f, const std::string& v = "v");

}  // namespace mdl
