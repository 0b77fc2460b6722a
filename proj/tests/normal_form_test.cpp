#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/errors.hpp"
#include "mdl/normal_form.hpp"
#include "mdl/semantics.hpp"
#include "mdl/translate.hpp"

namespace mdl {
namespace {

using test::concept_;
using test::fixture;
using test::formula;
using test::tinySig;

TEST(ComputeNf, RankZero) {
  const auto mi = fixture("MI.json");
  EXPECT_EQ(computeNf(mi, 0, mi.individual("a"), 0).concepts, std::vector<bool>{false});
  EXPECT_EQ(computeNf(mi, 0, mi.individual("b"), 0).concepts, std::vector<bool>{true});
}

// Oracle: model check each of the five rank-1 atoms over ({A},{r}).
TEST(ComputeNf, RankOneAgainstAtoms) {
  const auto mi = fixture("MI.json");
  const auto n = computeNf(mi, 0, 0, 1);
  const auto rendered = nfToConcept(n, AtomUniverse::full(tinySig(), 1));
  EXPECT_EQ(toString(rendered), "~A & ~(exists r . A) & ~(exists r . ~A) & ~dia A & dia ~A");
  for (const char* atom : {"A", "exists r . A", "exists r . ~A", "dia A"})
    EXPECT_FALSE(checkConcept(mi, 0, 0, concept_(atom))) << atom;
  EXPECT_TRUE(checkConcept(mi, 0, 0, concept_("dia ~A")));
  EXPECT_TRUE(checkConcept(mi, 0, 0, rendered));
}

TEST(NfEqual, Cases) {
  const auto mi = fixture("MI.json"), mj = fixture("MJ.json");
  EXPECT_TRUE(nfEqual(computeNf(mi, 0, 0, 1), computeNf(mj, 0, 0, 1)));
  EXPECT_FALSE(nfEqual(computeNf(mi, 0, 0, 0), computeNf(mi, 0, 1, 0)));
  const auto n = computeNf(mi, 1, 0, 2);
  EXPECT_TRUE(nfEqual(n, n));
  EXPECT_THROW(nfEqual(computeNf(mi, 0, 0, 0), computeNf(mi, 0, 0, 1)), SemanticError);
}

TEST(NfToConcept, Trivial) {
  NormalForm n;
  n.rank = 0;
  n.concepts = {true};
  n.successors.resize(1);
  EXPECT_EQ(toString(nfToConcept(n, AtomUniverse::full(tinySig(), 0))), "A");

  const Signature empty;
  NormalForm e;
  EXPECT_EQ(toString(nfToConcept(e, AtomUniverse::full(empty, 0))), "true");
}

TEST(NfToConcept, AtomOutsideUniverse) {
  // (MI,v1,b) satisfies dia A, but a one-point model without A never realizes A
  const auto mi = fixture("MI.json");
  Interpretation flat(tinySig(), {"w"}, {"d"});
  NormalFormTable flatTable(tinySig(), 1);
  flatTable.add(flat);
  EXPECT_THROW(nfToConcept(computeNf(mi, 0, 1, 1), AtomUniverse::realized(flatTable, 1)), SemanticError);
}

TEST(CountAtoms, Tiny) {
  EXPECT_EQ(countAtoms(tinySig(), 0), 1);
  EXPECT_EQ(countAtoms(tinySig(), 1), 5);
  EXPECT_EQ(countAtoms(tinySig(), 2), 65);
  // oracle: explicit listing of at_1
  EXPECT_EQ(AtomUniverse::full(tinySig(), 1).atomCount(1), 5u);
  EXPECT_EQ(countAtoms(Signature({"A", "B"}, {}), 1), 2 + 1 * 4);
}

TEST(NfJson, Shape) {
  const auto mi = fixture("MI.json");
  EXPECT_EQ(nfToJson(computeNf(mi, 0, 0, 1), tinySig()).dump(),
            R"({"rank":1,"positive":[],"exists":{"r":[]},"diamond":[{"rank":0,"positive":[],"exists":{},"diamond":[]}]})");
}

class Characterize : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { tiny_ = new std::vector<Interpretation>(enumerateModels(tinySig(), 2, 2)); }
  static void TearDownTestSuite() { delete tiny_; }
  static std::vector<Interpretation>* tiny_;
};
std::vector<Interpretation>* Characterize::tiny_ = nullptr;

TEST_F(Characterize, Atom) {
  const auto ch = characterize(standardTranslation(concept_("A")), 0, *tiny_);
  EXPECT_FALSE(ch.counterexample);
  EXPECT_EQ(toString(ch.result), "A");
}

TEST_F(Characterize, Diamond) {
  const auto ch = characterize(standardTranslation(concept_("dia A")), 1, *tiny_);
  EXPECT_FALSE(ch.counterexample);
  EXPECT_EQ(rank(ch.result), 1u);
}

TEST_F(Characterize, ReflexiveRoleIsNotInvariant) {
  const auto ch = characterize(formula("r(x,x)"), 2, *tiny_);
  ASSERT_TRUE(ch.counterexample);
  const auto& ce = *ch.counterexample;
  const auto& m = (*tiny_)[ce.model];
  const std::size_t d = ce.valuation.at(0).second;
  EXPECT_NE(m.hasRole(0, ce.world, d, d), ce.rhs);
}

TEST_F(Characterize, Errors) {
  EXPECT_THROW(characterize(formula("r(x,y)"), 1, *tiny_), SemanticError);
  EXPECT_THROW(characterize(formula("exists x . A(x)"), 1, *tiny_), SemanticError);
  const auto ch = characterize(formula("~(x = x)"), 1, *tiny_);
  EXPECT_EQ(toString(ch.result), "false");
  EXPECT_FALSE(ch.counterexample);
}

}  // namespace
}  // namespace mdl
