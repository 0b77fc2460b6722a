#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mdl/errors.hpp"
#include "mdl/translate.hpp"

namespace mdl {
namespace {

using test::concept_;
using test::formula;

TEST(ParseConcept, Atom) {
  EXPECT_EQ(concept_("A"), Concept::atom("A"));
}

TEST(ParseConcept, ExistsBox) {
  EXPECT_EQ(concept_("exists r . box A"),
            Concept::exists({RoleKind::Local, "r"}, Concept::box(Concept::atom("A"))));
}

TEST(ParseConcept, ModalizedRole) {
  EXPECT_EQ(concept_("exists dia r . A"),
            Concept::exists({RoleKind::Diamond, "r"}, Concept::atom("A")));
}

TEST(ParseConcept, Precedence) {
  // ~ binds tighter than &, & tighter than |
  EXPECT_EQ(concept_("~A & A | A"),
            Concept::disj(Concept::conj(Concept::negation(Concept::atom("A")), Concept::atom("A")),
                          Concept::atom("A")));
  // restrictions extend to the right
  EXPECT_EQ(concept_("exists r . A & A"),
            Concept::exists({RoleKind::Local, "r"}, Concept::conj(Concept::atom("A"), Concept::atom("A"))));
}

TEST(ParseConcept, Errors) {
  EXPECT_THROW(concept_("A &"), ParseError);
  EXPECT_THROW(concept_("(A"), ParseError);
  EXPECT_THROW(concept_("B"), SignatureError);
  EXPECT_THROW(concept_("exists A . A"), SignatureError);
  try {
    concept_("A A");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(ParseFormula, Shapes) {
  EXPECT_EQ(formula("A(x)"), Formula::pred("A", {"x"}));
  EXPECT_EQ(formula("x = x"), Formula::equal("x", "x"));
  EXPECT_EQ(formula("exists x . box (forall y . r(x,y))"),
            Formula::exists("x", Formula::box(Formula::forall("y", Formula::pred("r", {"x", "y"})))));
  EXPECT_EQ(formula("A(x) -> A(x) -> A(y)"),
            Formula::implies(Formula::pred("A", {"x"}),
                             Formula::implies(Formula::pred("A", {"x"}), Formula::pred("A", {"y"}))));
}

TEST(ParseFormula, ArityMisuse) {
  EXPECT_THROW(formula("A(x,y)"), SignatureError);
  EXPECT_THROW(formula("r(x)"), SignatureError);
}

TEST(Rank, Concepts) {
  EXPECT_EQ(rank(concept_("A")), 0u);
  EXPECT_EQ(rank(concept_("exists r . box A")), 2u);
  EXPECT_EQ(rank(concept_("box (A & dia A)")), 2u);
}

TEST(Rank, Formulas) {
  EXPECT_EQ(rank(formula("A(x)")), 0u);
  EXPECT_EQ(rank(formula("exists x . box (forall y . r(x,y))")), 3u);
  EXPECT_EQ(rank(formula("dia (exists y . r(x,y))")), 2u);
}

TEST(LocalFragment, Membership) {
  EXPECT_TRUE(isLocalFragment(concept_("A")));
  EXPECT_FALSE(isLocalFragment(concept_("exists dia r . A")));
  EXPECT_TRUE(isLocalFragment(concept_("box (exists r . A)")));
}

TEST(Printing, RoundTrip) {
  for (const char* text : {"A", "~A & (A | A)", "exists r . box A", "forall dia r . ~A", "dia (A & true)",
                           "exists box r . false | A"}) {
    const Concept c = concept_(text);
    EXPECT_EQ(concept_(toString(c)), c) << text;
  }
  for (const char* text : {"A(x) -> (A(y) -> x = y)", "exists x . box (forall y . r(x,y))",
                           "~(x = y) & dia A(x)"}) {
    const Formula f = formula(text);
    EXPECT_EQ(formula(toString(f)), f) << text;
  }
}

TEST(StandardTranslation, Clauses) {
  EXPECT_EQ(standardTranslation(concept_("A")), formula("A(x)"));
  EXPECT_EQ(standardTranslation(concept_("exists r . A")), formula("exists y1 . (r(x,y1) & A(y1))"));
  EXPECT_EQ(standardTranslation(concept_("box A")), formula("box A(x)"));
  EXPECT_EQ(standardTranslation(concept_("forall r . A")), formula("forall y1 . (r(x,y1) -> A(y1))"));
  EXPECT_EQ(standardTranslation(concept_("true")), formula("x = x"));
  EXPECT_EQ(standardTranslation(concept_("exists r . exists r . A")),
            formula("exists y1 . (r(x,y1) & exists y2 . (r(y1,y2) & A(y2)))"));
  EXPECT_THROW(standardTranslation(concept_("exists dia r . A")), SemanticError);
}

TEST(StandardTranslation, PreservesRankAndFreeVariable) {
  const Concept c = concept_("exists r . box (A & forall r . dia A)");
  const Formula f = standardTranslation(c);
  EXPECT_EQ(rank(f), rank(c));
  EXPECT_EQ(freeVariables(f), std::set<std::string>{"x"});
}

TEST(TwoSortedTranslation, Clauses) {
  EXPECT_EQ(toString(twoSortedTranslation(formula("A(x)"))), "A(x,v)");
  EXPECT_EQ(toString(twoSortedTranslation(formula("box A(x)"))), "forall v1:world . A(x,v1)");
  EXPECT_EQ(toString(twoSortedTranslation(formula("x = y"))), "x = y");
  EXPECT_EQ(toString(twoSortedTranslation(formula("dia box r(x,y)"))),
            "exists v1:world . forall v2:world . r(x,y,v2)");
}

}  // namespace
}  // namespace mdl
