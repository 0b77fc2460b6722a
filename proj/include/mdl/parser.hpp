#pragma once

#include <string_view>

#include "mdl/concept.hpp"
#include "mdl/formula.hpp"
#include "mdl/signature.hpp"

namespace mdl {

// Concrete syntax (ASCII):
//
//   C ::= ident | true | false | ~C | C & C | C | C | (C)
//       | exists Role . C | forall Role . C | box C | dia C
//   Role ::= ident | box ident | dia ident
//
//   F ::= ident(var, ...) | var = var | ~F | F & F | F | F | F -> F | (F)
//       | exists var . F | forall var . F | box F | dia F
//
// Precedence: {~, box, dia} > & > | > ->. `&` and `|` associate to the left,
// `->` to the right; restrictions and quantifiers extend as far right as possible.

/// Throws ParseError on malformed text and SignatureError on undeclared names
/// or arity misuse.
Concept parseConcept(std::string_view text, const Signature& sig);
Formula parseFormula(std::string_view text, const Signature& sig);

}  // namespace mdl
