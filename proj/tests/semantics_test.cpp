#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/errors.hpp"
#include "mdl/semantics.hpp"
#include "mdl/translate.hpp"

namespace mdl {
namespace {

using test::concept_;
using test::fixture;
using test::formula;

std::vector<std::string> names(const Interpretation& m, const std::vector<std::size_t>& ids) {
  std::vector<std::string> out;
  for (auto d : ids) out.push_back(m.domain()[d]);
  return out;
}

TEST(CheckConcept, FixtureModels) {
  const auto mi = fixture("MI.json"), mj = fixture("MJ.json");
  EXPECT_TRUE(checkConcept(mi, mi.world("v1"), mi.individual("a"), concept_("exists dia r . A")));
  EXPECT_FALSE(checkConcept(mj, mj.world("w1"), mj.individual("a"), concept_("exists dia r . A")));
  EXPECT_TRUE(checkConcept(mi, mi.world("v1"), mi.individual("b"), concept_("A")));
}

TEST(CheckConcept, ModalizedRoles) {
  const auto mi = fixture("MI.json");
  // r holds only at v2, so box r is empty and dia r = {(a,b)}
  EXPECT_FALSE(checkConcept(mi, 0, 0, concept_("exists box r . true")));
  EXPECT_TRUE(checkConcept(mi, 0, 0, concept_("forall box r . false")));
  EXPECT_TRUE(checkConcept(mi, 1, 0, concept_("exists r . ~A & dia A")));
}

TEST(Extension, FixtureModels) {
  const auto mi = fixture("MI.json");
  EXPECT_EQ(names(mi, conceptExtension(mi, mi.world("v1"), concept_("A"))), std::vector<std::string>{"b"});
  EXPECT_EQ(names(mi, conceptExtension(mi, mi.world("v1"), concept_("true"))),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(names(mi, conceptExtension(mi, mi.world("v2"), concept_("box ~A"))),
            std::vector<std::string>{"a"});
}

TEST(CheckFormula, FixtureModels) {
  const auto mi = fixture("MI.json"), mj = fixture("MJ.json");
  const Valuation eta{{"x", 0}};
  EXPECT_TRUE(checkFormula(mi, mi.world("v1"), eta, formula("exists y . A(y)")));
  EXPECT_FALSE(checkFormula(mj, mj.world("w1"), eta, formula("exists y . A(y)")));
  EXPECT_TRUE(checkFormula(mi, mi.world("v1"), eta, formula("x = x")));
  EXPECT_THROW(checkFormula(mi, 0, eta, formula("A(z)")), SemanticError);
}

TEST(CheckFormula, BoxQuantifiesOverWorlds) {
  const auto mi = fixture("MI.json");
  const Valuation b{{"x", 1}};
  EXPECT_TRUE(checkFormula(mi, 0, b, formula("dia ~A(x)")));
  EXPECT_FALSE(checkFormula(mi, 0, b, formula("box A(x)")));
  EXPECT_TRUE(checkFormula(mi, 1, {{"x", 0}}, formula("dia exists y . r(x,y) & box ~r(y,x)")));
}

TEST(IsLocalAt, FixtureModels) {
  const auto mi = fixture("MI.json");
  const std::vector<std::size_t> a{mi.individual("a")};
  EXPECT_TRUE(isLocalAt(formula("A(x)"), mi, mi.world("v1"), a, 0));
  EXPECT_FALSE(isLocalAt(formula("exists y . A(y)"), mi, mi.world("v1"), a, 0));
  EXPECT_TRUE(isLocalAt(standardTranslation(concept_("exists r . A")), mi, mi.world("v2"), a, 1));
}

TEST(EquivalentOnClass, Cases) {
  const auto mi = fixture("MI.json");
  const std::vector<Interpretation> justMi{mi};
  EXPECT_FALSE(equivalentOnClass(formula("A(x)"), formula("A(x)"), justMi));

  const auto ce = equivalentOnClass(standardTranslation(concept_("dia A")),
                                    standardTranslation(concept_("A")), justMi);
  ASSERT_TRUE(ce);
  // first disagreement in scan order: v1 agrees everywhere, v2 fails at b
  EXPECT_EQ(mi.worlds()[ce->world], "v2");
  EXPECT_EQ(ce->valuation.at(0).second, mi.individual("b"));

  const auto tiny = enumerateModels(test::tinySig(), 2, 2);
  EXPECT_FALSE(equivalentOnClass(standardTranslation(concept_("box A")),
                                 standardTranslation(concept_("~dia ~A")), tiny));
}

}  // namespace
}  // namespace mdl
