#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "helpers.hpp"
#include "mdl/construct.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/errors.hpp"

namespace mdl {
namespace {

using test::fixture;

TEST(ModelIo, Fixture) {
  const auto mi = fixture("MI.json");
  EXPECT_EQ(mi.worlds(), (std::vector<std::string>{"v1", "v2"}));
  EXPECT_EQ(mi.domain(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(mi.hasConcept(0, mi.world("v1"), mi.individual("b")));
  EXPECT_FALSE(mi.hasConcept(0, mi.world("v2"), mi.individual("b")));
  EXPECT_TRUE(mi.hasRole(0, mi.world("v2"), mi.individual("a"), mi.individual("b")));
  EXPECT_FALSE(mi.hasRole(0, mi.world("v1"), mi.individual("a"), mi.individual("b")));
}

TEST(ModelIo, CanonicalRoundTrip) {
  const std::string doc =
      R"({"signature":{"concepts":["A"],"roles":["r"]},"worlds":["v1","v2"],"domain":["a","b"],)"
      R"("concept_ext":{"A":{"v1":["b"],"v2":[]}},"role_ext":{"r":{"v1":[],"v2":[["a","b"]]}}})";
  EXPECT_EQ(saveModel(loadModel(doc)), doc);
  EXPECT_EQ(loadModel(doc), fixture("MI.json"));
}

TEST(ModelIo, Violations) {
  EXPECT_THROW(loadModel(R"({"signature":{"concepts":[],"roles":[]},"worlds":["v"]})"), ModelError);
  auto data = fixture("MI.json").toData();
  data.worlds.clear();
  EXPECT_FALSE(validate(data).empty());
  data = fixture("MI.json").toData();
  data.roleExt["r"]["v1"].push_back({"a", "c"});
  EXPECT_FALSE(validate(data).empty());
  EXPECT_TRUE(validate(fixture("MI.json").toData()).empty());
}

TEST(Restrict, Cases) {
  const auto mi = fixture("MI.json");
  const std::vector<std::size_t> both{0, 1}, onlyA{0}, none;
  EXPECT_EQ(restrict(mi, both), mi);
  const auto r = restrict(mi, onlyA);
  EXPECT_EQ(r.domain(), std::vector<std::string>{"a"});
  for (std::size_t w = 0; w < r.worldCount(); ++w) {
    EXPECT_FALSE(r.hasConcept(0, w, 0));
    EXPECT_FALSE(r.hasRole(0, w, 0, 0));
  }
  EXPECT_THROW(restrict(mi, none), ModelError);
}

TEST(Gaifman, Distances) {
  const auto mi = fixture("MI.json");
  const auto g = gaifman(mi);
  EXPECT_TRUE(g.adjacent[0][1]);
  EXPECT_EQ(g.distance[0][1], 1u);
  EXPECT_EQ(g.edgeCount(), 1u);

  Interpretation empty(Signature({"A"}, {"r"}), {"w"}, {"a", "b", "c"});
  const auto h = gaifman(empty);
  EXPECT_EQ(h.edgeCount(), 0u);
  EXPECT_EQ(h.distance[0][2], GaifmanData::kUnreachable);
  EXPECT_EQ(h.distance[1][1], 0u);
}

TEST(Gaifman, Neighborhoods) {
  const auto mi = fixture("MI.json");
  const std::vector<std::size_t> a{0}, ab{0, 1};
  EXPECT_EQ(neighborhood(mi, a, 0), std::vector<std::size_t>{0});
  EXPECT_EQ(neighborhood(mi, a, 1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(neighborhood(mi, ab, 0), (std::vector<std::size_t>{0, 1}));
}

TEST(DisjointUnion, Cases) {
  const auto mi = fixture("MI.json");
  const auto u = disjointUnion(mi, mi);
  EXPECT_EQ(u.domainSize(), 4u);
  EXPECT_EQ(u.worlds(), mi.worlds());
  EXPECT_THROW(disjointUnion(mi, fixture("MJ.json")), SemanticError);
}

TEST(AddCopies, Cardinality) {
  const auto mi = fixture("MI.json");
  EXPECT_EQ(addCopies(mi, mi, 0), mi);
  const std::vector<std::size_t> onlyA{0};
  const auto j = restrict(mi, onlyA);
  // i plus n copies of i plus n copies of j
  EXPECT_EQ(addCopies(j, mi, 1).domainSize(), j.domainSize() + j.domainSize() + mi.domainSize());
  EXPECT_EQ(addCopies(mi, j, 2).domainSize(), 3 * mi.domainSize() + 2 * j.domainSize());
}

TEST(TreeUnravelling, FixtureModels) {
  const auto mi = fixture("MI.json");
  const auto u = treeUnravelling(mi, mi.individual("a"), 2);
  ASSERT_EQ(u.model.domainSize(), 2u);
  const std::size_t root = u.root, child = 1 - u.root;
  EXPECT_TRUE(u.model.hasRole(0, u.model.world("v2"), root, child));
  EXPECT_TRUE(u.model.hasConcept(0, u.model.world("v1"), child));
  EXPECT_EQ(u.projection[child], mi.individual("b"));
  EXPECT_FALSE(u.truncated);

  EXPECT_EQ(treeUnravelling(mi, mi.individual("b"), 5).model.domainSize(), 1u);
}

TEST(PartialUnravelling, RoleFree) {
  Interpretation single(Signature({"A"}, {"r"}), {"w"}, {"d"});
  single.setConcept(0, 0, 0, true);
  const auto u = partialUnravelling(single, 0, 1);
  EXPECT_EQ(u.model.domainSize(), 2u);  // the root and the grafting copy of d
  EXPECT_TRUE(gaifmanAcyclic(u.model));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(ModelEnumerator(Signature({"A"}, {"r"}), 1, 1).total(), 4u);
  EXPECT_EQ(ModelEnumerator(Signature({}, {}), 1, 1).total(), 1u);

  // closed form over |W| in {1,2}, |Δ| in {1,2}
  boost::multiprecision::cpp_int expected = 0;
  for (unsigned w = 1; w <= 2; ++w)
    for (unsigned d = 1; d <= 2; ++d)
      expected += boost::multiprecision::pow(boost::multiprecision::cpp_int(2), (d + d * d) * w);
  ModelEnumerator en(Signature({"A"}, {"r"}), 2, 2);
  std::size_t streamed = 0;
  while (en.next()) ++streamed;
  EXPECT_EQ(boost::multiprecision::cpp_int(streamed), expected);
  EXPECT_EQ(streamed, 4180u);
}

TEST(Enumerate, DistinctModels) {
  const auto models = enumerateModels(Signature({"A"}, {"r"}), 1, 2);
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = i + 1; j < models.size(); ++j) ASSERT_FALSE(models[i] == models[j]);
}

}  // namespace
}  // namespace mdl
