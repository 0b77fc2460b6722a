#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>

#include "mdl/concept.hpp"
#include "mdl/formula.hpp"
#include "mdl/signature.hpp"

namespace mdl {

/// Random concept of rank at most `maxRank` over `sig`. With `localOnly`
/// every role occurrence is a plain role; otherwise modalized roles appear too.
Concept randomConcept(const Signature& sig, std::size_t maxRank, std::mt19937_64& rng,
                      bool localOnly = true);

/// Random formula of rank at most `maxRank` whose free variables are among
/// `freeVars`; bound variables are drawn from {x, y, z} plus `freeVars`.
Formula randomFormula(const Signature& sig, std::size_t maxRank,
                      std::span<const std::string> freeVars, std::mt19937_64& rng);

}  // namespace mdl
